#ifndef LVR_PERMUTATIONS_HPP
#define LVR_PERMUTATIONS_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "lvr/caps.hpp"

namespace lvr {

// Element of S_k in one-line notation on 0-based indices: images[i] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Partition of `total` into nondecreasing positive parts k_1 <= ... <= k_m.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  int size() const { return static_cast<int>(parts_.size()); }  // |pi|

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// (sigma . tau)(i) = sigma(tau(i)); degrees must match.
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);

// Cycle lengths of zeta, sorted nondecreasing.
IntegerPartition cycle_type(const Permutation& zeta);

// A canonical representative with the given cycle type: consecutive cycles
// (0 .. k1-1)(k1 .. k1+k2-1)...
Permutation representative(const IntegerPartition& pi);

// All k! elements of S_k in lexicographic one-line order.
std::vector<Permutation> enumerate_symmetric_group(int k, int cap = caps().symmetric_group);

// All partitions of k, in lexicographic order of the nondecreasing tuples.
std::vector<IntegerPartition> enumerate_partitions(int k);

// Independent partition count (recurrence over max part), used as an oracle.
std::uint64_t partition_count(int k);

// Centralizer size z_pi = prod_j j^{m_j} m_j!; class size is k!/z_pi.
std::uint64_t centralizer_size(const IntegerPartition& pi);
std::uint64_t factorial_u64(int k);

}  // namespace lvr

#endif
