#include "lvr/corner_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "lvr/errors.hpp"

namespace lvr {

int CornerWord::cups() const {
  int r = 0;
  for (auto a : atoms) r += (a == CornerAtom::CupM || a == CornerAtom::CupMdag);
  return r;
}

int CornerWord::m_factors() const {
  return static_cast<int>(std::count(atoms.begin(), atoms.end(), CornerAtom::M));
}

int CornerWord::mdag_factors() const {
  return static_cast<int>(std::count(atoms.begin(), atoms.end(), CornerAtom::Mdag));
}

int CornerWord::identity_corners() const {
  // Empty cup-delimited segments of the linear display.
  int count = 0;
  bool segment_empty = true;
  for (auto a : atoms) {
    if (a == CornerAtom::CupM || a == CornerAtom::CupMdag) {
      if (segment_empty) ++count;
      segment_empty = true;
    } else {
      segment_empty = false;
    }
  }
  return count;  // trailing segment closes onto the seam, never an insertion site
}

int CornerWord::bare_resolvents() const {
  int res = static_cast<int>(std::count(atoms.begin(), atoms.end(), CornerAtom::Res));
  return res - m_factors() - mdag_factors();
}

int CornerWord::corner_count() const { return cups() + 1; }

std::vector<std::string> CornerWord::corner_tokens() const {
  std::vector<std::string> tokens;
  std::vector<CornerAtom> segment;
  auto flush = [&] {
    bool mdag_prefix = !segment.empty() && segment.front() == CornerAtom::Mdag;
    bool m_suffix = !segment.empty() && segment.back() == CornerAtom::M;
    int res = static_cast<int>(std::count(segment.begin(), segment.end(), CornerAtom::Res));
    if (segment.empty())
      tokens.push_back("ONE");
    else if (mdag_prefix && m_suffix)
      tokens.push_back("MdRM");
    else if (mdag_prefix)
      tokens.push_back("MdR");
    else if (m_suffix)
      tokens.push_back("RM");
    else if (res > 0)
      tokens.push_back("R");
    else
      throw DomainError("corner_tokens: malformed corner");
    segment.clear();
  };
  for (auto a : atoms) {
    if (a == CornerAtom::CupM || a == CornerAtom::CupMdag)
      flush();
    else
      segment.push_back(a);
  }
  flush();
  return tokens;
}

std::string CornerWord::grammar() const {
  std::string out;
  for (const auto& t : corner_tokens()) {
    if (!out.empty()) out += ",";
    out += t;
  }
  return out;
}

std::vector<CornerAtom> CornerWord::canonical_rotation() const {
  if (atoms.empty()) return {};
  std::vector<CornerAtom> best = atoms;
  std::vector<CornerAtom> rot = atoms;
  for (std::size_t s = 1; s < atoms.size(); ++s) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

namespace {

// One derivative step: sum over all ways the derivative can act.
// d/dM splits each resolvent (Res -> Res CupM Mdag Res) and deletes each
// explicit M numerator (M -> CupM); d/dMdag acts mirrored.
std::vector<CornerWord> derivative_step(const CornerWord& w, bool wrt_m) {
  std::vector<CornerWord> out;
  for (std::size_t i = 0; i < w.atoms.size(); ++i) {
    CornerAtom a = w.atoms[i];
    if (a == CornerAtom::Res) {
      CornerWord nw;
      nw.atoms.reserve(w.atoms.size() + 3);
      nw.atoms.insert(nw.atoms.end(), w.atoms.begin(), w.atoms.begin() + static_cast<long>(i));
      if (wrt_m) {
        nw.atoms.push_back(CornerAtom::Res);
        nw.atoms.push_back(CornerAtom::CupM);
        nw.atoms.push_back(CornerAtom::Mdag);
        nw.atoms.push_back(CornerAtom::Res);
      } else {
        nw.atoms.push_back(CornerAtom::Res);
        nw.atoms.push_back(CornerAtom::M);
        nw.atoms.push_back(CornerAtom::CupMdag);
        nw.atoms.push_back(CornerAtom::Res);
      }
      nw.atoms.insert(nw.atoms.end(), w.atoms.begin() + static_cast<long>(i) + 1, w.atoms.end());
      out.push_back(std::move(nw));
    } else if ((wrt_m && a == CornerAtom::M) || (!wrt_m && a == CornerAtom::Mdag)) {
      CornerWord nw;
      nw.atoms = w.atoms;
      nw.atoms[i] = wrt_m ? CornerAtom::CupM : CornerAtom::CupMdag;
      out.push_back(std::move(nw));
    }
  }
  return out;
}

std::vector<CornerWord> dedup_cyclic(const std::vector<CornerWord>& words) {
  std::set<std::vector<CornerAtom>> seen;
  std::vector<CornerWord> out;
  for (const auto& w : words)
    if (seen.insert(w.canonical_rotation()).second) out.push_back(w);
  return out;
}

}  // namespace

std::vector<CornerWord> differentiate_trace(int q, int qbar, int cap) {
  if (q < 0 || qbar < 0) throw DomainError("differentiate_trace: negative order");
  if (q + qbar > cap) throw CapError("differentiate_trace: q + qbar exceeds cap");

  std::vector<CornerWord> terms{CornerWord{{CornerAtom::Res}}};
  for (int i = 0; i < qbar; ++i) {
    std::vector<CornerWord> next;
    for (const auto& w : terms) {
      auto expanded = derivative_step(w, false);
      next.insert(next.end(), expanded.begin(), expanded.end());
    }
    terms = dedup_cyclic(next);
  }
  for (int i = 0; i < q; ++i) {
    std::vector<CornerWord> next;
    for (const auto& w : terms) {
      auto expanded = derivative_step(w, true);
      next.insert(next.end(), expanded.begin(), expanded.end());
    }
    terms = dedup_cyclic(next);
  }
  return terms;
}

std::size_t count_faa_terms(int q, int qbar, int cap) {
  return differentiate_trace(q, qbar, cap).size();
}

std::complex<double> evaluate_corner_word(const CornerWord& word,
                                          const Eigen::MatrixXcd& M,
                                          const Eigen::MatrixXcd& Mdag,
                                          std::complex<double> v,
                                          const Eigen::MatrixXcd& cup_m,
                                          const Eigen::MatrixXcd& cup_mdag) {
  const Eigen::Index n = M.rows();
  Eigen::MatrixXcd resolvent =
      (v * Eigen::MatrixXcd::Identity(n, n) - M * Mdag).inverse();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
  for (auto a : word.atoms) {
    switch (a) {
      case CornerAtom::Res: acc *= resolvent; break;
      case CornerAtom::M: acc *= M; break;
      case CornerAtom::Mdag: acc *= Mdag; break;
      case CornerAtom::CupM: acc *= cup_m; break;
      case CornerAtom::CupMdag: acc *= cup_mdag; break;
    }
  }
  return acc.trace();
}

int DecoratedTree::loop_of_tail(int e) const {
  return 2 * tree.edges[static_cast<std::size_t>(e)].first +
         (end_choice[static_cast<std::size_t>(e)].first - 1);
}

int DecoratedTree::loop_of_head(int e) const {
  return 2 * tree.edges[static_cast<std::size_t>(e)].second +
         (end_choice[static_cast<std::size_t>(e)].second - 1);
}

std::vector<DecoratedTree> enumerate_decorations(const OrientedTree& tree) {
  if (tree.n < 1) throw DomainError("enumerate_decorations: empty tree");
  if (static_cast<int>(tree.edges.size()) != tree.n - 1)
    throw DomainError("enumerate_decorations: a tree on n vertices has n-1 edges");
  for (auto [u, w] : tree.edges)
    if (u < 0 || u >= tree.n || w < 0 || w >= tree.n || u == w)
      throw DomainError("enumerate_decorations: bad edge");

  const std::size_t m = tree.edges.size();
  std::vector<DecoratedTree> out;
  out.reserve(static_cast<std::size_t>(1) << (2 * m));
  for (std::uint64_t bits = 0; bits < (static_cast<std::uint64_t>(1) << (2 * m)); ++bits) {
    DecoratedTree t;
    t.tree = tree;
    t.end_choice.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
      t.end_choice[e].first = static_cast<int>((bits >> (2 * e)) & 1) + 1;
      t.end_choice[e].second = static_cast<int>((bits >> (2 * e + 1)) & 1) + 1;
    }
    out.push_back(std::move(t));
  }
  return out;
}

void validate_marks(const DecoratedTree& t) {
  for (const auto& [tail, head] : t.marks) {
    bool conjugate = (tail == HalfEdgeMark::None && head == HalfEdgeMark::None) ||
                     (tail == HalfEdgeMark::M && head == HalfEdgeMark::Mdag) ||
                     (tail == HalfEdgeMark::Mdag && head == HalfEdgeMark::M) ||
                     (tail == HalfEdgeMark::J && head == HalfEdgeMark::Jdag) ||
                     (tail == HalfEdgeMark::Jdag && head == HalfEdgeMark::J);
    if (!conjugate) throw DomainError("decorated tree: glued marks must be conjugate");
  }
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

CycleSet cycles_of(const DecoratedTree& t) {
  const int loops = 2 * t.tree.n;
  UnionFind uf(loops);
  for (std::size_t e = 0; e < t.tree.edges.size(); ++e)
    uf.unite(t.loop_of_tail(static_cast<int>(e)), t.loop_of_head(static_cast<int>(e)));

  std::vector<std::vector<int>> comp(static_cast<std::size_t>(loops));
  for (int l = 0; l < loops; ++l) comp[static_cast<std::size_t>(uf.find(l))].push_back(l);
  CycleSet cs;
  for (auto& c : comp)
    if (!c.empty()) cs.components.push_back(std::move(c));
  if (static_cast<int>(cs.components.size()) != t.tree.n + 1)
    throw DomainError("cycles_of: forest on 2n loops must have n+1 components");
  return cs;
}

bool j_marks_balanced(const DecoratedTree& t) {
  if (t.marks.empty()) return true;
  if (t.marks.size() != t.tree.edges.size()) return false;
  UnionFind uf(2 * t.tree.n);
  for (std::size_t e = 0; e < t.tree.edges.size(); ++e)
    uf.unite(t.loop_of_tail(static_cast<int>(e)), t.loop_of_head(static_cast<int>(e)));
  std::vector<int> balance(static_cast<std::size_t>(2 * t.tree.n), 0);
  for (std::size_t e = 0; e < t.marks.size(); ++e) {
    auto add = [&](HalfEdgeMark m, int loop) {
      if (m == HalfEdgeMark::J) balance[static_cast<std::size_t>(uf.find(loop))] += 1;
      if (m == HalfEdgeMark::Jdag) balance[static_cast<std::size_t>(uf.find(loop))] -= 1;
    };
    add(t.marks[e].first, t.loop_of_tail(static_cast<int>(e)));
    add(t.marks[e].second, t.loop_of_head(static_cast<int>(e)));
  }
  return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

TreeCumulantBound tree_cumulant_bound(int e_T, int v_T, int K, int pi_size,
                                      std::complex<double> lambda, int p) {
  if (e_T < 0 || v_T < 1 || K < 1 || pi_size < 1 || p < 2)
    throw DomainError("tree_cumulant_bound: bad arguments");
  const double cosine = std::cos(std::arg(lambda) / static_cast<double>(p - 1));
  if (cosine <= 0.0)
    throw DomainError("tree_cumulant_bound: arg lambda outside the pacman sector");

  double k_fact = 1.0;
  for (int i = 2; i <= K; ++i) k_fact *= static_cast<double>(i);
  double v_fact = 1.0;
  for (int i = 2; i <= v_T; ++i) v_fact *= static_cast<double>(i);

  TreeCumulantBound b;
  b.scalar_factor = std::pow(std::abs(lambda), e_T) * k_fact * k_fact *
                    std::pow(2.0, 2 * K) /
                    (std::pow(cosine, 2 * e_T + K) * v_fact);
  b.n_power = 2 - pi_size;
  return b;
}

double mainamp_bound(int n, const std::vector<int>& coordinations,
                     std::complex<double> lambda, double K_const, double kappa_p) {
  if (n < 1 || static_cast<int>(coordinations.size()) != n)
    throw DomainError("mainamp_bound: need one coordination per vertex");
  double prod = 1.0;
  for (int r : coordinations) {
    if (r < 1) throw DomainError("mainamp_bound: coordinations must be >= 1");
    for (int i = 2; i <= r; ++i) prod *= static_cast<double>(i);
  }
  return std::pow(K_const, n) * std::pow(std::abs(lambda), kappa_p * static_cast<double>(n)) * prod;
}

}  // namespace lvr
