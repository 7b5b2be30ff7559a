#include "lvr/ribbon.hpp"

#include <numeric>

#include "lvr/errors.hpp"

namespace lvr {

RibbonVertex interaction_vertex(int p) {
  if (p < 2) throw DomainError("interaction_vertex: p must be >= 2");
  RibbonVertex v;
  v.kind = RibbonVertexKind::Interaction;
  for (int i = 0; i < p; ++i) {
    v.word.push_back(HalfEdge::M);
    v.word.push_back(HalfEdge::Mdag);
  }
  return v;
}

RibbonVertex observable_vertex(int k) {
  if (k < 1) throw DomainError("observable_vertex: k must be >= 1");
  RibbonVertex v;
  v.kind = RibbonVertexKind::Observable;
  for (int i = 0; i < k; ++i) {
    v.word.push_back(HalfEdge::M);
    v.word.push_back(HalfEdge::Mdag);
  }
  return v;
}

RibbonVertex cilium_vertex() {
  RibbonVertex v;
  v.kind = RibbonVertexKind::Cilium;
  v.word = {HalfEdge::M, HalfEdge::Mdag};
  return v;
}

bool RibbonGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int d = 0; d < dart_count(); ++d)
    parent[static_cast<std::size_t>(find(dart_vertex[static_cast<std::size_t>(d)]))] =
        find(dart_vertex[static_cast<std::size_t>(matching[static_cast<std::size_t>(d)])]);
  int root = find(0);
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

int RibbonGraph::euler_characteristic() const {
  if (!connected()) throw DomainError("euler_characteristic: disconnected graph");
  return vertex_count() - edge_count() + face_count();
}

std::vector<int> RibbonGraph::cilia_per_face() const {
  std::vector<int> count(faces.size(), 0);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int d : faces[f])
      if (vertices[static_cast<std::size_t>(dart_vertex[static_cast<std::size_t>(d)])].kind ==
              RibbonVertexKind::Cilium &&
          vertices[static_cast<std::size_t>(dart_vertex[static_cast<std::size_t>(d)])]
                  .word[static_cast<std::size_t>(dart_pos[static_cast<std::size_t>(d)])] ==
              HalfEdge::Mdag)
        ++count[f];
  return count;
}

int RibbonGraph::broken_face_count() const {
  int b = 0;
  for (int c : cilia_per_face()) b += (c > 0);
  return b;
}

namespace {

// Faces are the orbits of d -> rotation(matching(d)), rotation being the next
// dart counterclockwise at its vertex.
void trace_faces(RibbonGraph& g) {
  const int n = g.dart_count();
  std::vector<int> vertex_start(g.vertices.size() + 1, 0);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    vertex_start[i + 1] = vertex_start[i] + static_cast<int>(g.vertices[i].word.size());

  auto rotation = [&](int d) {
    int v = g.dart_vertex[static_cast<std::size_t>(d)];
    int deg = static_cast<int>(g.vertices[static_cast<std::size_t>(v)].word.size());
    int pos = g.dart_pos[static_cast<std::size_t>(d)];
    return vertex_start[static_cast<std::size_t>(v)] + (pos + 1) % deg;
  };

  g.faces.clear();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> orbit;
    int d = start;
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = 1;
      orbit.push_back(d);
      d = rotation(g.matching[static_cast<std::size_t>(d)]);
    }
    g.faces.push_back(std::move(orbit));
  }
}

}  // namespace

void enumerate_matchings(const std::vector<RibbonVertex>& vertices,
                         const std::function<void(const RibbonGraph&)>& visit) {
  RibbonGraph g;
  g.vertices = vertices;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (std::size_t pos = 0; pos < vertices[v].word.size(); ++pos) {
      g.dart_vertex.push_back(static_cast<int>(v));
      g.dart_pos.push_back(static_cast<int>(pos));
    }

  std::vector<int> m_darts, mdag_darts;
  for (int d = 0; d < g.dart_count(); ++d) {
    const auto& vx = vertices[static_cast<std::size_t>(g.dart_vertex[static_cast<std::size_t>(d)])];
    if (vx.word[static_cast<std::size_t>(g.dart_pos[static_cast<std::size_t>(d)])] == HalfEdge::M)
      m_darts.push_back(d);
    else
      mdag_darts.push_back(d);
  }
  if (m_darts.size() != mdag_darts.size())
    throw DomainError("enumerate_matchings: unequal M and Mdag half-edge counts");

  g.matching.assign(static_cast<std::size_t>(g.dart_count()), -1);
  std::vector<char> used(mdag_darts.size(), 0);

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m_darts.size()) {
      trace_faces(g);
      visit(g);
      return;
    }
    for (std::size_t j = 0; j < mdag_darts.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      g.matching[static_cast<std::size_t>(m_darts[i])] = mdag_darts[j];
      g.matching[static_cast<std::size_t>(mdag_darts[j])] = m_darts[i];
      self(self, i + 1);
      used[j] = 0;
    }
  };
  rec(rec, 0);
}

std::vector<RibbonGraph> enumerate_ribbon_graphs_fixed(int p, int v, int cilia, int cap_pairs) {
  if (p < 2) throw DomainError("enumerate_ribbon_graphs: p must be >= 2");
  if (v < 0 || cilia < 0) throw DomainError("enumerate_ribbon_graphs: negative counts");
  if (p * v + cilia > cap_pairs)
    throw CapError("enumerate_ribbon_graphs: half-edge pairs exceed cap");
  std::vector<RibbonVertex> vertices;
  for (int i = 0; i < v; ++i) vertices.push_back(interaction_vertex(p));
  for (int i = 0; i < cilia; ++i) vertices.push_back(cilium_vertex());
  std::vector<RibbonGraph> out;
  enumerate_matchings(vertices, [&](const RibbonGraph& g) { out.push_back(g); });
  return out;
}

void enumerate_ribbon_graphs(int p, int max_edges, int cilia,
                             const std::function<void(const RibbonGraph&)>& visit,
                             int cap_pairs) {
  if (p < 2) throw DomainError("enumerate_ribbon_graphs: p must be >= 2");
  for (int v = 0; p * v + cilia <= max_edges; ++v) {
    if (p * v + cilia > cap_pairs)
      throw CapError("enumerate_ribbon_graphs: half-edge pairs exceed cap");
    std::vector<RibbonVertex> vertices;
    for (int i = 0; i < v; ++i) vertices.push_back(interaction_vertex(p));
    for (int i = 0; i < cilia; ++i) vertices.push_back(cilium_vertex());
    enumerate_matchings(vertices, visit);
  }
}

}  // namespace lvr
