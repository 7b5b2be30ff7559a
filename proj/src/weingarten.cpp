#include "lvr/weingarten.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "lvr/errors.hpp"

namespace lvr {

namespace {

int cycle_count(const Permutation& z) {
  return cycle_type(z).size();
}

}  // namespace

ClassGramMatrix class_gram_matrix(int k, int cap) {
  if (k < 1) throw DomainError("class_gram_matrix: k < 1");
  if (k > cap) throw CapError("class_gram_matrix: k exceeds cap");

  ClassGramMatrix g;
  g.k = k;
  g.basis = enumerate_partitions(k);
  const std::size_t m = g.basis.size();

  std::map<IntegerPartition, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[g.basis[i]] = i;

  const auto group = enumerate_symmetric_group(k, std::max(k, caps().symmetric_group));

  // One row per class from a fixed representative; the full class sum is the
  // representative row times the class size, and is symmetric.
  g.entries.assign(m, std::vector<PolyZ>(m));
  for (std::size_t i = 0; i < m; ++i) {
    Permutation rep = representative(g.basis[i]);
    std::vector<std::vector<BigInt>> row(m, std::vector<BigInt>(static_cast<std::size_t>(k) + 1));
    for (const auto& zeta : group) {
      std::size_t j = index[cycle_type(zeta)];
      int cycles = cycle_count(compose(rep, inverse(zeta)));
      row[j][static_cast<std::size_t>(cycles)] += 1;
    }
    BigInt class_size(factorial_u64(k) / centralizer_size(g.basis[i]));
    for (std::size_t j = 0; j < m; ++j) {
      for (auto& c : row[j]) c *= class_size;
      g.entries[i][j] = PolyZ(std::move(row[j]));
    }
  }
  return g;
}

const RationalFunctionOfN& WeingartenTable::value(const IntegerPartition& pi) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == pi) return values[i];
  throw DomainError("WeingartenTable: cycle type not of this order");
}

const WeingartenTable& weingarten_table(int k, int cap) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const WeingartenTable>> cache;

  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return *it->second;
  }

  // Solve outside the lock; duplicated work on a race is harmless.
  ClassGramMatrix g = class_gram_matrix(k, cap);
  auto table = std::make_shared<WeingartenTable>();
  table->k = k;
  table->basis = g.basis;

  // Right-hand side: picks out the identity class (the unique size-1 class
  // with k fixed points), so that the group-algebra convolution of
  // N^{#cycles} with Wg is the delta at the identity.
  std::vector<PolyZ> rhs(g.basis.size());
  IntegerPartition identity_class(std::vector<int>(static_cast<std::size_t>(k), 1));
  for (std::size_t i = 0; i < g.basis.size(); ++i)
    rhs[i] = (g.basis[i] == identity_class) ? PolyZ(BigInt(1)) : PolyZ();

  table->values = solve_linear_system(g.entries, rhs);

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(k, std::move(table));
  return *it->second;
}

RationalFunctionOfN weingarten_symbolic(const IntegerPartition& cycle_type, int cap) {
  if (cycle_type.total() < 1) throw DomainError("weingarten_symbolic: empty cycle type");
  if (cycle_type.total() > cap) throw CapError("weingarten_symbolic: order exceeds cap");
  return weingarten_table(cycle_type.total(), cap).value(cycle_type);
}

BigRat weingarten_eval(const IntegerPartition& ct, int N, int cap) {
  if (N <= 0) throw DomainError("weingarten_eval: N must be positive");
  if (N < ct.total())
    throw SingularError("weingarten_eval: N < k is the singular Gram regime");
  return weingarten_symbolic(ct, cap).evaluate_at(BigInt(N));
}

BigRat haar_moment(std::span<const int> a, std::span<const int> b,
                   std::span<const int> c, std::span<const int> d, int N,
                   int cap) {
  if (a.size() != b.size() || c.size() != d.size())
    throw DomainError("haar_moment: index tuple lengths mismatch");
  const int k = static_cast<int>(a.size());
  const int l = static_cast<int>(c.size());
  for (auto span : {a, b, c, d})
    for (int idx : span)
      if (idx < 0 || idx >= N) throw DomainError("haar_moment: index out of [0, N)");
  if (k != l) return BigRat(0);  // the delta_{kl} prefactor
  if (k == 0) return BigRat(1);
  if (k > cap) throw CapError("haar_moment: k exceeds cap");
  if (N < k) throw SingularError("haar_moment: N < k is the singular regime");

  const auto& table = weingarten_table(k, cap);
  const auto group = enumerate_symmetric_group(k, std::max(k, caps().symmetric_group));

  // tau constrained by the row deltas, sigma by the column deltas.
  std::vector<const Permutation*> taus, sigmas;
  for (const auto& tau : group) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = (a[static_cast<std::size_t>(tau(i))] == c[static_cast<std::size_t>(i)]);
    if (ok) taus.push_back(&tau);
  }
  for (const auto& sigma : group) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = (b[static_cast<std::size_t>(sigma(i))] == d[static_cast<std::size_t>(i)]);
    if (ok) sigmas.push_back(&sigma);
  }

  BigRat total = 0;
  BigInt bigN(N);
  for (const auto* tau : taus)
    for (const auto* sigma : sigmas)
      total += table.value(cycle_type(compose(*tau, inverse(*sigma)))).evaluate_at(bigN);
  return total;
}

}  // namespace lvr
