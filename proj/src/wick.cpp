#include "lvr/wick.hpp"

#include <map>

#include "lvr/errors.hpp"

namespace lvr {

TraceFactor trace_power_factor(int k, bool normalized) {
  if (k < 1) throw DomainError("trace_power_factor: k must be >= 1");
  TraceFactor f;
  f.normalized = normalized;
  for (int i = 0; i < k; ++i) {
    f.word.push_back(HalfEdge::M);
    f.word.push_back(HalfEdge::Mdag);
  }
  return f;
}

namespace {

// A matrix entry slot: M_{row,col} or conj(M)_{row,col}.  Symbols are index
// variables; external ones are pinned to fixed distinct values.
struct Entry {
  bool conjugate;
  int row, col;
};

struct SymbolTable {
  int count = 0;
  std::vector<char> external;
  int fresh(bool ext) {
    external.push_back(ext ? 1 : 0);
    return count++;
  }
};

struct UF {
  std::vector<int> parent;
  explicit UF(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Sum over all Wick pairings of N^{#internal loops} / N^{#pairs}; a pairing
// contributes zero when it forces two distinct external indices equal.
RationalFunctionOfN pairing_sum(const std::vector<Entry>& entries, const SymbolTable& symbols,
                                int cap) {
  std::vector<const Entry*> ms, mbars;
  for (const auto& e : entries) (e.conjugate ? mbars : ms).push_back(&e);
  if (ms.size() != mbars.size()) return RationalFunctionOfN();  // Gaussian integral vanishes
  if (static_cast<int>(ms.size()) > cap)
    throw CapError("wick: pairing count exceeds cap (raise WickQuery::cap)");
  const int pairs = static_cast<int>(ms.size());
  if (pairs == 0) return RationalFunctionOfN(1);

  std::map<int, BigInt> by_power;  // exponent of N -> multiplicity
  std::vector<char> used(mbars.size(), 0);
  std::vector<int> partner(ms.size(), -1);

  auto close = [&]() {
    UF uf(static_cast<std::size_t>(symbols.count));
    for (std::size_t i = 0; i < ms.size(); ++i) {
      uf.unite(ms[i]->row, mbars[static_cast<std::size_t>(partner[i])]->row);
      uf.unite(ms[i]->col, mbars[static_cast<std::size_t>(partner[i])]->col);
    }
    std::vector<int> ext_count(static_cast<std::size_t>(symbols.count), 0);
    std::vector<char> seen(static_cast<std::size_t>(symbols.count), 0);
    // distinct externals merged -> delta of unequal fixed values -> 0
    std::vector<int> ext_of_class(static_cast<std::size_t>(symbols.count), -1);
    for (int s = 0; s < symbols.count; ++s) {
      if (!symbols.external[static_cast<std::size_t>(s)]) continue;
      int c = uf.find(s);
      if (ext_of_class[static_cast<std::size_t>(c)] >= 0 &&
          ext_of_class[static_cast<std::size_t>(c)] != s)
        return;
      ext_of_class[static_cast<std::size_t>(c)] = s;
    }
    int loops = 0;
    for (int s = 0; s < symbols.count; ++s) {
      int c = uf.find(s);
      if (seen[static_cast<std::size_t>(c)]) continue;
      seen[static_cast<std::size_t>(c)] = 1;
      if (ext_of_class[static_cast<std::size_t>(c)] < 0) ++loops;
    }
    by_power[loops - pairs] += 1;
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ms.size()) {
      close();
      return;
    }
    for (std::size_t j = 0; j < mbars.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      partner[i] = static_cast<int>(j);
      self(self, i + 1);
      used[j] = 0;
    }
  };
  rec(rec, 0);

  RationalFunctionOfN total;
  for (const auto& [power, mult] : by_power)
    total += RationalFunctionOfN::monomial_N(power, mult);
  return total;
}

// Entries of one traced word on fresh internal symbols.
void add_trace_entries(const std::vector<HalfEdge>& word, SymbolTable& symbols,
                       std::vector<Entry>& entries) {
  const int len = static_cast<int>(word.size());
  if (len == 0) return;
  std::vector<int> idx(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) idx[static_cast<std::size_t>(i)] = symbols.fresh(false);
  for (int i = 0; i < len; ++i) {
    int a = idx[static_cast<std::size_t>(i)];
    int b = idx[static_cast<std::size_t>((i + 1) % len)];
    if (word[static_cast<std::size_t>(i)] == HalfEdge::M)
      entries.push_back(Entry{false, a, b});
    else
      entries.push_back(Entry{true, b, a});  // Mdag_{a,b} = conj(M)_{b,a}
  }
}

struct OpenEntrySpec {
  bool conjugate;
  int row, col;  // external symbol slots
};

// Gaussian expectation of (chosen trace factors) * (chosen open entries) with
// m interaction vertices, no lambda weights attached.
RationalFunctionOfN gaussian_expectation(const std::vector<TraceFactor>& factors,
                                         unsigned factor_mask,
                                         const std::vector<OpenEntrySpec>& opens,
                                         unsigned open_mask, int ext_symbols, int m, int p,
                                         int cap) {
  SymbolTable symbols;
  for (int i = 0; i < ext_symbols; ++i) symbols.fresh(true);
  std::vector<Entry> entries;
  int normalized = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (!(factor_mask & (1u << f))) continue;
    add_trace_entries(factors[f].word, symbols, entries);
    normalized += factors[f].normalized ? 1 : 0;
  }
  for (std::size_t o = 0; o < opens.size(); ++o) {
    if (!(open_mask & (1u << o))) continue;
    entries.push_back(Entry{opens[o].conjugate, opens[o].row, opens[o].col});
  }
  auto interaction = trace_power_factor(p, false);
  for (int v = 0; v < m; ++v) add_trace_entries(interaction.word, symbols, entries);

  RationalFunctionOfN value = pairing_sum(entries, symbols, cap);
  return value * RationalFunctionOfN::monomial_N(-normalized);
}

// Raw (unnormalized) series: sum_m lambda^m (-1)^m N^m / m! E0[ ... m vertices ].
LambdaSeries raw_series(const std::vector<TraceFactor>& factors, unsigned factor_mask,
                        const std::vector<OpenEntrySpec>& opens, unsigned open_mask,
                        int ext_symbols, int p, int order, int cap) {
  LambdaSeries s(order);
  BigInt m_fact = 1;
  for (int m = 0; m <= order; ++m) {
    if (m >= 2) m_fact *= m;
    RationalFunctionOfN e0 = gaussian_expectation(factors, factor_mask, opens, open_mask,
                                                  ext_symbols, m, p, cap);
    RationalFunctionOfN weight =
        RationalFunctionOfN::monomial_N(m, (m % 2 == 0) ? BigInt(1) : BigInt(-1)) /
        RationalFunctionOfN(m_fact);
    s.coeff(m) = e0 * weight;
  }
  return s;
}

template <typename Value, typename Scale>
Value connected_impl(int j, const std::function<Value(unsigned)>& moment, Scale scale) {
  if (j < 1) throw DomainError("connected_from_raw: need at least one factor");
  Value acc{};
  bool first_term = true;
  for (const auto& partition : set_partitions(j)) {
    unsigned mask0 = 0;
    for (int i : partition[0]) mask0 |= (1u << static_cast<unsigned>(i));
    Value term = moment(mask0);
    for (std::size_t b = 1; b < partition.size(); ++b) {
      unsigned mask = 0;
      for (int i : partition[b]) mask |= (1u << static_cast<unsigned>(i));
      term = term * moment(mask);
    }
    BigInt w = 1;  // (-1)^{|P|-1} (|P|-1)!
    for (std::size_t i = 1; i + 1 <= partition.size(); ++i) w *= -static_cast<long long>(i);
    term = scale(term, w);
    acc = first_term ? term : acc + term;
    first_term = false;
  }
  return acc;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> set_partitions(int j) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> assign(static_cast<std::size_t>(j), 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == j) {
      std::vector<std::vector<int>> partition(static_cast<std::size_t>(blocks));
      for (int x = 0; x < j; ++x)
        partition[static_cast<std::size_t>(assign[static_cast<std::size_t>(x)])].push_back(x);
      out.push_back(std::move(partition));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      assign[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (j > 0) rec(rec, 0, 0);
  return out;
}

BigRat connected_from_raw(int j, const std::function<BigRat(unsigned)>& moment_of_subset) {
  return connected_impl<BigRat>(j, moment_of_subset,
                                [](const BigRat& v, const BigInt& w) { return v * BigRat(w); });
}

LambdaSeries connected_from_raw(int j,
                                const std::function<LambdaSeries(unsigned)>& moment_of_subset) {
  return connected_impl<LambdaSeries>(
      j, moment_of_subset, [](const LambdaSeries& v, const BigInt& w) {
        return v.scaled(RationalFunctionOfN(w));
      });
}

LambdaSeries wick_exact(const WickQuery& query) {
  if (query.p < 2) throw DomainError("wick_exact: p must be >= 2");
  if (query.lambda_order < 0) throw DomainError("wick_exact: negative order");
  const int order = query.lambda_order;
  const unsigned full = (1u << query.factors.size()) - 1u;

  LambdaSeries vacuum = raw_series(query.factors, 0u, {}, 0u, 0, query.p, order, query.cap);
  LambdaSeries vacuum_inv = vacuum.inverse();

  auto moment = [&](unsigned mask) {
    return raw_series(query.factors, mask, {}, 0u, 0, query.p, order, query.cap) * vacuum_inv;
  };

  if (!query.connected || query.factors.size() <= 1) {
    if (query.factors.empty()) return moment(0u);
    return moment(full);
  }
  return connected_from_raw(static_cast<int>(query.factors.size()),
                            std::function<LambdaSeries(unsigned)>(moment));
}

BigRat wick_exact_at(const WickQuery& query, int N, const BigRat& lambda) {
  return wick_exact(query).evaluate(lambda, BigInt(N));
}

LambdaSeries logz_series_oracle(int p, int order, int cap) {
  LambdaSeries vacuum = raw_series({}, 0u, {}, 0u, 0, p, order, cap);
  return vacuum.log().scaled(RationalFunctionOfN::monomial_N(-2));
}

LambdaSeries open_scalar_cumulant_oracle(int K, const Permutation& zeta, int p, int order,
                                         int cap) {
  if (K < 1) throw DomainError("open_scalar_cumulant_oracle: K must be >= 1");
  if (zeta.degree() != K)
    throw DomainError("open_scalar_cumulant_oracle: zeta must act on K elements");

  // The l-th derivative pair inserts the entries M_{l, K+l} and
  // conj(M)_{zeta(l), K+l} on 2K external symbols; the cumulant is the joint
  // cumulant of the 2K entries (Moebius over set partitions of the entries).
  std::vector<OpenEntrySpec> opens;
  for (int l = 0; l < K; ++l) {
    opens.push_back(OpenEntrySpec{false, l, K + l});
    opens.push_back(OpenEntrySpec{true, zeta(l), K + l});
  }

  LambdaSeries vacuum = raw_series({}, 0u, opens, 0u, 2 * K, p, order, cap);
  LambdaSeries vacuum_inv = vacuum.inverse();
  std::map<unsigned, LambdaSeries> memo;
  auto moment = [&](unsigned mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    LambdaSeries value = raw_series({}, 0u, opens, mask, 2 * K, p, order, cap) * vacuum_inv;
    memo.emplace(mask, value);
    return value;
  };
  LambdaSeries cum =
      connected_from_raw(2 * K, std::function<LambdaSeries(unsigned)>(moment));
  return cum.scaled(RationalFunctionOfN::monomial_N(-2));
}

}  // namespace lvr
