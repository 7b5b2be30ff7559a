#ifndef LVR_WICK_HPP
#define LVR_WICK_HPP

#include <functional>
#include <vector>

#include "lvr/caps.hpp"
#include "lvr/permutations.hpp"
#include "lvr/ribbon.hpp"
#include "lvr/series.hpp"

namespace lvr {

// One traced observable, a word in M / Mdag; normalized carries a 1/N.
struct TraceFactor {
  std::vector<HalfEdge> word;
  bool normalized = true;
};

TraceFactor trace_power_factor(int k, bool normalized = true);  // (1/N) Tr (M Mdag)^k

// Query against the Gaussian measure with covariance <M_ab conj(M)_cd> =
// delta_ac delta_bd / N and interaction weight exp(-lambda N Tr (M Mdag)^p).
struct WickQuery {
  std::vector<TraceFactor> factors;
  int p = 2;
  int lambda_order = 0;
  bool connected = false;  // cumulant over the factors instead of the moment
  int cap = caps().wick_pairs;
};

// Interacting moment (or cumulant) of the factor product as an exact
// lambda-series with rational-function-of-N coefficients; pairings are
// enumerated exhaustively, interaction insertions carry (-lambda N)^m / m!,
// and the result is normalized by the vacuum series.
LambdaSeries wick_exact(const WickQuery& query);

// Convenience: evaluate the series truncation at integer N.
BigRat wick_exact_at(const WickQuery& query, int N, const BigRat& lambda);

// log Z as a lambda-series from the raw vacuum moments (series logarithm),
// multiplied by N^{-2}.
LambdaSeries logz_series_oracle(int p, int order, int cap = caps().wick_pairs);

// Scalar cumulant oracle: N^{-2} E_c[ prod_l M_{l, K+l} conj(M)_{zeta(l), K+l} ]
// for zeta of cycle type pi, connected over the K source pairs, exact in N.
LambdaSeries open_scalar_cumulant_oracle(int K, const Permutation& zeta, int p,
                                         int order, int cap = caps().wick_pairs);

// Moebius inversion of raw moments over set partitions of the j factors;
// the lookup receives a bitmask identifying the factor subset.
BigRat connected_from_raw(int j, const std::function<BigRat(unsigned)>& moment_of_subset);
LambdaSeries connected_from_raw(int j,
                                const std::function<LambdaSeries(unsigned)>& moment_of_subset);

// All set partitions of {0..j-1} as block lists.
std::vector<std::vector<std::vector<int>>> set_partitions(int j);

}  // namespace lvr

#endif
