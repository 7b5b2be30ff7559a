#ifndef LVR_RIBBON_SERIES_HPP
#define LVR_RIBBON_SERIES_HPP

#include <span>
#include <string>

#include "lvr/caps.hpp"
#include "lvr/permutations.hpp"
#include "lvr/ribbon.hpp"
#include "lvr/series.hpp"

namespace lvr {

// Vertex-symmetry normalization of the labeled enumeration.  Factorial
// (1/v!) is the convention the Wick oracle confirms; Linear (1/v) is exposed
// for comparison only.
enum class VertexSymmetry { Factorial, Linear };

// log Z / N^2 of the model exp(-N Tr M Mdag - lambda N Tr (M Mdag)^p):
// coefficient of lambda^m is (-1)^m / m! sum over connected vacuum labeled
// ribbon graphs with m interaction vertices of N^{chi(G) - 2}.
LambdaSeries logz_series(int p, int order, VertexSymmetry sym = VertexSymmetry::Factorial,
                         int cap_pairs = caps().ribbon_pairs);

// Connected expectation E_c[ prod_i (1/N) Tr (M Mdag)^{k_i} ] with parts k_i
// from pi, by enumeration of fully connected labeled graphs: coefficient of
// lambda^m is (-1)^m / m! sum N^{chi(G) - 2 |pi|}.
LambdaSeries invariant_cumulant_series(int p, const IntegerPartition& pi, int order,
                                       VertexSymmetry sym = VertexSymmetry::Factorial,
                                       int cap_pairs = caps().ribbon_pairs);

// Index-delta pattern of Proposition-1 form attached to a scalar cumulant.
struct CumulantIndexStructure {
  int K = 1;
  IntegerPartition pi;
  Permutation tau_pi;  // tau xi^{-1} has cycle type pi
  Permutation xi_pi;   // identity reference
  std::string pattern_note;
};

struct ScalarCumulant {
  LambdaSeries series;
  CumulantIndexStructure structure;
};

// Scalar factor of the order-2K cumulant attached to partition pi, defined by
//   N^{-2} E_c[prod_l M_{a_l b_l} conj(M)_{c_l d_l}]
//     = sum_{pi'} k_{pi'} sum_{C(theta phi^{-1}) = pi'} prod_l
//           delta_{a_l, c_{theta(l)}} delta_{b_l, d_{phi(l)}},
// computed from the invariant cumulant series by inverting the exact
// class-pairing matrix W(pi, pi') = sum N^{|C(c_pi theta)| + |C(phi)|}.
ScalarCumulant scalar_cumulant_series(int p, int K, const IntegerPartition& pi, int order,
                                      int kmax = caps().kmax,
                                      int cap_pairs = caps().ribbon_pairs);

// The CilTra pairing matrix itself (one row/column per partition of K).
std::vector<std::vector<PolyZ>> ciltra_matrix(int K);

// Evaluate the delta pattern sum_{C(theta phi^{-1}) = pi} prod delta at fixed
// index tuples (a, b, c, d each of length K); used by the contraction checks.
BigInt delta_pattern_value(const IntegerPartition& pi, std::span<const int> a,
                           std::span<const int> b, std::span<const int> c,
                           std::span<const int> d);

}  // namespace lvr

#endif
