#include "lvr/permutations.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lvr/errors.hpp"

namespace lvr {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = degree();
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (int v : images_) {
    if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)])
      throw DomainError("permutation: images are not a bijection on {0,...,k-1}");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int k) {
  if (k < 0) throw DomainError("permutation: negative degree");
  std::vector<int> im(static_cast<std::size_t>(k));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  int prev = 1;
  for (int p : parts_) {
    if (p < prev) throw DomainError("partition: parts must be positive and nondecreasing");
    prev = p;
    total_ += p;
  }
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw DomainError("compose: degree mismatch");
  std::vector<int> im(static_cast<std::size_t>(sigma.degree()));
  for (int i = 0; i < sigma.degree(); ++i) im[static_cast<std::size_t>(i)] = sigma(tau(i));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> im(static_cast<std::size_t>(sigma.degree()));
  for (int i = 0; i < sigma.degree(); ++i) im[static_cast<std::size_t>(sigma(i))] = i;
  return Permutation(std::move(im));
}

IntegerPartition cycle_type(const Permutation& zeta) {
  const int k = zeta.degree();
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  std::vector<int> lengths;
  for (int i = 0; i < k; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = zeta(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return IntegerPartition(std::move(lengths));
}

Permutation representative(const IntegerPartition& pi) {
  std::vector<int> im(static_cast<std::size_t>(pi.total()));
  int base = 0;
  for (int part : pi.parts()) {
    for (int j = 0; j < part; ++j)
      im[static_cast<std::size_t>(base + j)] = base + (j + 1) % part;
    base += part;
  }
  return Permutation(std::move(im));
}

std::vector<Permutation> enumerate_symmetric_group(int k, int cap) {
  if (k < 0) throw DomainError("enumerate_symmetric_group: k < 0");
  if (k > cap) throw CapError("enumerate_symmetric_group: k exceeds cap");
  std::vector<int> im(static_cast<std::size_t>(k));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial_u64(k)));
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

namespace {

void partitions_rec(int remaining, int min_part, std::vector<int>& acc,
                    std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.push_back(IntegerPartition(acc));
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    acc.push_back(part);
    partitions_rec(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<IntegerPartition> enumerate_partitions(int k) {
  if (k < 0) throw DomainError("enumerate_partitions: k < 0");
  std::vector<IntegerPartition> out;
  std::vector<int> acc;
  partitions_rec(k, 1, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t partition_count(int k) {
  // p(n, m) = number of partitions of n into parts <= m.
  std::map<std::pair<int, int>, std::uint64_t> memo;
  auto rec = [&](auto&& self, int n, int m) -> std::uint64_t {
    if (n == 0) return 1;
    if (n < 0 || m == 0) return 0;
    auto it = memo.find({n, m});
    if (it != memo.end()) return it->second;
    std::uint64_t r = self(self, n, m - 1) + self(self, n - m, m);
    memo[{n, m}] = r;
    return r;
  };
  return rec(rec, k, k);
}

std::uint64_t factorial_u64(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t centralizer_size(const IntegerPartition& pi) {
  std::map<int, int> mult;
  for (int p : pi.parts()) ++mult[p];
  std::uint64_t z = 1;
  for (auto [len, m] : mult) {
    for (int i = 0; i < m; ++i) z *= static_cast<std::uint64_t>(len);
    z *= factorial_u64(m);
  }
  return z;
}

}  // namespace lvr
