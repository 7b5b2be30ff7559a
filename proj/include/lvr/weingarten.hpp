#ifndef LVR_WEINGARTEN_HPP
#define LVR_WEINGARTEN_HPP

#include <span>
#include <vector>

#include "lvr/caps.hpp"
#include "lvr/permutations.hpp"
#include "lvr/rational_poly.hpp"

namespace lvr {

// Gram pairing of S_k collapsed onto conjugacy classes:
//   entries[i][j] = sum over sigma in class i, tau in class j of N^{#cycles(sigma tau^{-1})}.
// Symmetric, one row/column per partition of k.
struct ClassGramMatrix {
  int k = 0;
  std::vector<IntegerPartition> basis;
  std::vector<std::vector<PolyZ>> entries;
};

ClassGramMatrix class_gram_matrix(int k, int cap = caps().weingarten_k);

// Full Weingarten table at order k: one rational function of N per class.
struct WeingartenTable {
  int k = 0;
  std::vector<IntegerPartition> basis;
  std::vector<RationalFunctionOfN> values;

  const RationalFunctionOfN& value(const IntegerPartition& pi) const;
};

// Cached symbolic solve of the class Gram system (thread-safe).
const WeingartenTable& weingarten_table(int k, int cap = caps().weingarten_k);

// Wg as a canonical rational function of N.  The table printed in the
// literature is reproduced except for the (1,1) sign, which the Gram system
// (and unitarity) forces to +1/(N^2-1).
RationalFunctionOfN weingarten_symbolic(const IntegerPartition& cycle_type,
                                        int cap = caps().weingarten_k);

// Exact evaluation at integer N >= k; N < k is the singular regime.
BigRat weingarten_eval(const IntegerPartition& cycle_type, int N,
                       int cap = caps().weingarten_k);

// Haar-unitary moment  int dU U_{a1 b1}...U_{ak bk} U*_{c1 d1}...U*_{cl dl}
// as the exact double sum over S_k x S_k against Wg(tau sigma^{-1}, N).
BigRat haar_moment(std::span<const int> a, std::span<const int> b,
                   std::span<const int> c, std::span<const int> d, int N,
                   int cap = caps().weingarten_k);

}  // namespace lvr

#endif
