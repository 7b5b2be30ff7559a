#ifndef LVR_MC_HPP
#define LVR_MC_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace lvr {

struct McEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  double acceptance_rate = 0.0;  // Metropolis only
};

struct ComplexEstimate {
  McEstimate real_part;
  McEstimate imag_part;
};

// Haar unitary via QR of a complex Ginibre matrix with the R-diagonal phase
// correction (plain QR is not Haar).
Eigen::MatrixXcd sample_haar_unitary(int N, std::mt19937_64& rng);

// Moment spec: product of U factors and conj(U) factors at fixed entries.
struct HaarMomentSpec {
  std::vector<std::pair<int, int>> u;
  std::vector<std::pair<int, int>> ustar;
};

// Sampled estimates of the requested moments, one pass over `samples` draws.
std::vector<ComplexEstimate> mc_haar(int N, const std::vector<HaarMomentSpec>& moments,
                                     std::uint64_t samples, std::uint64_t seed);

// Metropolis sampling of exp(-N Tr M Mdag - lambda N Tr (M Mdag)^p) over
// complex entries; reports (1/N) Tr (M Mdag)^k for k = 1..k_max.
struct McModelParams {
  int p = 2;
  double lambda = 0.0;  // real, >= 0 (stable weight)
  int N = 4;
  int k_max = 2;
  std::uint64_t sweeps = 100000;   // one sweep = N^2 single-entry proposals
  std::uint64_t burn_in = 10000;   // sweeps, with step-size adaptation
  std::uint64_t seed = 1;
  int chains = 1;                  // merged by inverse variance
};

struct ConnectedPairEstimate {
  int k1 = 1, k2 = 1;
  McEstimate estimate;  // E[x_{k1} x_{k2}] - E[x_{k1}] E[x_{k2}] via batch means
};

struct McModelResult {
  std::vector<McEstimate> invariants;  // index k-1 holds (1/N) Tr (M Mdag)^k
  std::vector<ConnectedPairEstimate> connected;  // all pairs k1 <= k2
  bool adapted = true;                 // acceptance within [0.2, 0.5]
  std::vector<std::pair<std::uint64_t, std::vector<double>>> trace;  // optional sweep trace
};

McModelResult mc_model(const McModelParams& params, bool keep_trace = false,
                       std::uint64_t trace_stride = 1000);

}  // namespace lvr

#endif
