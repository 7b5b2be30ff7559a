#ifndef LVR_RIBBON_HPP
#define LVR_RIBBON_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "lvr/caps.hpp"

namespace lvr {

enum class HalfEdge : std::uint8_t { M, Mdag };

enum class RibbonVertexKind : std::uint8_t {
  Interaction,  // Tr (M Mdag)^p, carries -lambda N
  Observable,   // (1/N) Tr (M Mdag)^k source of a trace invariant
  Cilium        // one (M, Mdag) source-pair insertion carrying J Jdag
};

struct RibbonVertex {
  RibbonVertexKind kind = RibbonVertexKind::Interaction;
  std::vector<HalfEdge> word;  // cyclic order of half-edges at the vertex
};

RibbonVertex interaction_vertex(int p);
RibbonVertex observable_vertex(int k);
RibbonVertex cilium_vertex();

// Labeled ribbon graph: fixed vertices, a perfect matching of M half-edges to
// Mdag half-edges, and the faces traced as orbits of rotation ∘ matching.
struct RibbonGraph {
  std::vector<RibbonVertex> vertices;
  std::vector<int> dart_vertex;            // dart -> vertex index
  std::vector<int> dart_pos;               // dart -> position in vertex word
  std::vector<int> matching;               // dart involution
  std::vector<std::vector<int>> faces;     // dart orbits

  int dart_count() const { return static_cast<int>(dart_vertex.size()); }
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(faces.size()); }

  bool connected() const;
  int euler_characteristic() const;  // v - e + f; throws on disconnected input

  // Cilium corners per face (the corner at a cilium's Mdag dart carries the
  // J Jdag pair); a face is broken iff its count is nonzero.
  std::vector<int> cilia_per_face() const;
  int broken_face_count() const;
};

// Every labeled matching on the given vertex list, deterministic order.
// The visitor receives each graph with faces already traced.
void enumerate_matchings(const std::vector<RibbonVertex>& vertices,
                         const std::function<void(const RibbonGraph&)>& visit);

// All labeled graphs of the (M Mdag)^p model with v interaction vertices and
// `cilia` source pairs.
std::vector<RibbonGraph> enumerate_ribbon_graphs_fixed(int p, int v, int cilia,
                                                       int cap_pairs = caps().ribbon_pairs);

// Stream over all vertex counts with p*v + cilia <= max_edges.
void enumerate_ribbon_graphs(int p, int max_edges, int cilia,
                             const std::function<void(const RibbonGraph&)>& visit,
                             int cap_pairs = caps().ribbon_pairs);

}  // namespace lvr

#endif
