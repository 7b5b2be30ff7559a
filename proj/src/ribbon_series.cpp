#include "lvr/ribbon_series.hpp"

#include <map>

#include "lvr/errors.hpp"
#include "lvr/wick.hpp"

namespace lvr {

namespace {

enum class GraphMode {
  ConnectedNormalized,  // connected graphs, observables carry 1/N
  RawUnnormalized       // all graphs, plain traces (for raw moments)
};

// N-power tallies of labeled graphs at each interaction order.
LambdaSeries graph_sum(int p, const IntegerPartition* observables, int order,
                       VertexSymmetry sym, int cap_pairs, GraphMode mode) {
  LambdaSeries s(order);
  BigInt m_fact = 1;
  for (int m = 0; m <= order; ++m) {
    if (m >= 2) m_fact *= m;

    std::vector<RibbonVertex> vertices;
    if (observables)
      for (int k : observables->parts()) vertices.push_back(observable_vertex(k));
    for (int i = 0; i < m; ++i) vertices.push_back(interaction_vertex(p));

    int pairs = 0;
    for (const auto& v : vertices) pairs += static_cast<int>(v.word.size()) / 2;
    if (pairs > cap_pairs) throw CapError("ribbon series: half-edge pairs exceed cap");

    const int obs = observables ? observables->size() : 0;
    std::map<int, BigInt> by_power;
    enumerate_matchings(vertices, [&](const RibbonGraph& g) {
      // interaction vertices carry N, edges 1/N, faces N; normalized
      // observables carry a further 1/N each
      if (mode == GraphMode::ConnectedNormalized) {
        if (m + obs == 0) return;  // normalized vacuum energy vanishes
        if (!g.connected()) return;
        int chi = g.euler_characteristic();
        by_power[(observables == nullptr) ? chi - 2 : chi - 2 * obs] += 1;
      } else {
        int counts = g.vertex_count() - g.edge_count() + g.face_count();
        by_power[counts - obs] += 1;
      }
    });

    RationalFunctionOfN coeff;
    for (const auto& [power, mult] : by_power)
      coeff += RationalFunctionOfN::monomial_N(power, mult);
    if (m % 2 == 1) coeff = -coeff;
    BigInt norm = (sym == VertexSymmetry::Factorial) ? m_fact : BigInt(std::max(m, 1));
    s.coeff(m) = coeff / RationalFunctionOfN(norm);
  }
  return s;
}

// Normalized raw moment E_lambda[prod_i Tr (M Mdag)^{k_i}] by enumeration of
// all labeled graphs, divided by the vacuum partition series.
LambdaSeries trace_moment_series_ribbon(int p, const IntegerPartition& pi, int order,
                                        int cap_pairs) {
  LambdaSeries raw =
      graph_sum(p, &pi, order, VertexSymmetry::Factorial, cap_pairs, GraphMode::RawUnnormalized);
  LambdaSeries vacuum =
      graph_sum(p, nullptr, order, VertexSymmetry::Factorial, cap_pairs, GraphMode::RawUnnormalized);
  return raw * vacuum.inverse();
}

}  // namespace

LambdaSeries logz_series(int p, int order, VertexSymmetry sym, int cap_pairs) {
  if (p < 2) throw DomainError("logz_series: p must be >= 2");
  if (order < 0) throw DomainError("logz_series: negative order");
  return graph_sum(p, nullptr, order, sym, cap_pairs, GraphMode::ConnectedNormalized);
}

LambdaSeries invariant_cumulant_series(int p, const IntegerPartition& pi, int order,
                                       VertexSymmetry sym, int cap_pairs) {
  if (p < 2) throw DomainError("invariant_cumulant_series: p must be >= 2");
  if (pi.size() < 1) throw DomainError("invariant_cumulant_series: empty partition");
  return graph_sum(p, &pi, order, sym, cap_pairs, GraphMode::ConnectedNormalized);
}

std::vector<std::vector<PolyZ>> ciltra_matrix(int K) {
  const auto partitions = enumerate_partitions(K);
  const auto group = enumerate_symmetric_group(K, std::max(K, caps().symmetric_group));
  std::map<IntegerPartition, std::size_t> index;
  for (std::size_t i = 0; i < partitions.size(); ++i) index[partitions[i]] = i;

  // W(pi, pi') = sum over theta, phi with C(theta phi^{-1}) = pi' of
  //              N^{|C(c_pi theta)| + |C(phi)|}.
  std::vector<std::vector<PolyZ>> w(partitions.size(),
                                    std::vector<PolyZ>(partitions.size()));
  std::vector<std::vector<std::vector<BigInt>>> acc(
      partitions.size(),
      std::vector<std::vector<BigInt>>(partitions.size(),
                                       std::vector<BigInt>(2 * static_cast<std::size_t>(K) + 1)));
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    Permutation c_pi = representative(partitions[i]);
    for (const auto& theta : group) {
      int cycles_theta = cycle_type(compose(c_pi, theta)).size();
      for (const auto& phi : group) {
        std::size_t j = index[cycle_type(compose(theta, inverse(phi)))];
        int power = cycles_theta + cycle_type(phi).size();
        acc[i][j][static_cast<std::size_t>(power)] += 1;
      }
    }
    for (std::size_t j = 0; j < partitions.size(); ++j) w[i][j] = PolyZ(std::move(acc[i][j]));
  }
  return w;
}

BigInt delta_pattern_value(const IntegerPartition& pi, std::span<const int> a,
                           std::span<const int> b, std::span<const int> c,
                           std::span<const int> d) {
  const int K = pi.total();
  if (static_cast<int>(a.size()) != K || static_cast<int>(b.size()) != K ||
      static_cast<int>(c.size()) != K || static_cast<int>(d.size()) != K)
    throw DomainError("delta_pattern_value: tuple lengths must equal K");
  const auto group = enumerate_symmetric_group(K, std::max(K, caps().symmetric_group));
  BigInt total = 0;
  for (const auto& theta : group) {
    bool rows = true;
    for (int l = 0; l < K && rows; ++l)
      rows = (a[static_cast<std::size_t>(l)] == c[static_cast<std::size_t>(theta(l))]);
    if (!rows) continue;
    for (const auto& phi : group) {
      if (!(cycle_type(compose(theta, inverse(phi))) == pi)) continue;
      bool cols = true;
      for (int l = 0; l < K && cols; ++l)
        cols = (b[static_cast<std::size_t>(l)] == d[static_cast<std::size_t>(phi(l))]);
      if (cols) total += 1;
    }
  }
  return total;
}

namespace {

// Scalar coefficients of the invariant decomposition of the order-2j entry
// MOMENT tensor, obtained by inverting the CilTra pairing against the
// ribbon-enumerated trace moments:
//    E[prod_i Tr (M Mdag)^{k_i}] = sum_{pi'} m_{pi'} W(pi, pi').
std::vector<LambdaSeries> moment_scalars(int p, int j, int order, int cap_pairs) {
  const auto partitions = enumerate_partitions(j);
  auto w = ciltra_matrix(j);
  std::vector<LambdaSeries> traces;
  traces.reserve(partitions.size());
  for (const auto& part : partitions)
    traces.push_back(trace_moment_series_ribbon(p, part, order, cap_pairs));

  std::vector<LambdaSeries> scalars(partitions.size(), LambdaSeries(order));
  for (int m = 0; m <= order; ++m) {
    bool all_zero = true;
    for (const auto& t : traces) all_zero = all_zero && t.coeff(m).is_zero();
    if (all_zero) continue;
    // clear each row's denominator: (W row * den_i) x = num_i
    std::vector<std::vector<PolyZ>> a(partitions.size());
    std::vector<PolyZ> b(partitions.size());
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      a[i].reserve(partitions.size());
      for (std::size_t jj = 0; jj < partitions.size(); ++jj)
        a[i].push_back(w[i][jj] * traces[i].coeff(m).den());
      b[i] = traces[i].coeff(m).num();
    }
    auto x = solve_linear_system(std::move(a), std::move(b));
    for (std::size_t i = 0; i < partitions.size(); ++i) scalars[i].coeff(m) = x[i];
  }
  return scalars;
}

}  // namespace

ScalarCumulant scalar_cumulant_series(int p, int K, const IntegerPartition& pi, int order,
                                      int kmax, int cap_pairs) {
  if (K < 1 || K > kmax) throw CapError("scalar_cumulant_series: K outside 1..kmax");
  if (pi.total() != K) throw DomainError("scalar_cumulant_series: pi must partition K");

  // Moment scalars for every entry count that a Moebius block can take.
  std::vector<std::vector<LambdaSeries>> scalars_by_count(static_cast<std::size_t>(K) + 1);
  for (int j = 1; j <= K; ++j)
    scalars_by_count[static_cast<std::size_t>(j)] = moment_scalars(p, j, order, cap_pairs);

  // Derivative-pair entries at the pinned assignment for cycle type pi:
  // entry 2l is M_{l, K+l}, entry 2l+1 is conj(M)_{zeta(l), K+l}.  At this
  // assignment the delta patterns form an identity system, so the cumulant
  // tensor component below IS the scalar k_pi.
  const Permutation zeta = representative(pi);

  auto block_moment = [&](unsigned mask) -> LambdaSeries {
    std::vector<int> m_rows, m_cols, mb_rows, mb_cols;
    for (int e = 0; e < 2 * K; ++e) {
      if (!(mask & (1u << e))) continue;
      int l = e / 2;
      if (e % 2 == 0) {
        m_rows.push_back(l);
        m_cols.push_back(K + l);
      } else {
        mb_rows.push_back(zeta(l));
        mb_cols.push_back(K + l);
      }
    }
    if (m_rows.size() != mb_rows.size() || m_rows.empty()) return LambdaSeries(order);
    const int j = static_cast<int>(m_rows.size());
    const auto parts_j = enumerate_partitions(j);
    LambdaSeries value(order);
    for (std::size_t i = 0; i < parts_j.size(); ++i) {
      BigInt pattern = delta_pattern_value(parts_j[i], m_rows, m_cols, mb_rows, mb_cols);
      if (pattern == 0) continue;
      for (int m = 0; m <= order; ++m)
        value.coeff(m) += scalars_by_count[static_cast<std::size_t>(j)][i].coeff(m) *
                          RationalFunctionOfN(pattern);
    }
    return value;
  };

  std::map<unsigned, LambdaSeries> memo;
  auto moment = [&](unsigned mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    LambdaSeries value = block_moment(mask);
    memo.emplace(mask, value);
    return value;
  };
  LambdaSeries cumulant =
      connected_from_raw(2 * K, std::function<LambdaSeries(unsigned)>(moment));

  ScalarCumulant out;
  out.series = cumulant.scaled(RationalFunctionOfN::monomial_N(-2));
  out.structure.K = K;
  out.structure.pi = pi;
  out.structure.tau_pi = representative(pi);
  out.structure.xi_pi = Permutation::identity(K);
  out.structure.pattern_note =
      "k_pi multiplies sum over C(theta phi^-1)=pi of prod_l "
      "delta(a_l, c_theta(l)) delta(b_l, d_phi(l)); one term per (theta, phi)";
  return out;
}

}  // namespace lvr
