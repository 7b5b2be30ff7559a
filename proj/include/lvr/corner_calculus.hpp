#ifndef LVR_CORNER_CALCULUS_HPP
#define LVR_CORNER_CALCULUS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lvr/caps.hpp"

namespace lvr {

// A differentiated resolvent trace Tr[O_0 cup O_1 cup ... cup O_r], stored as
// the linear atom string of the trace body.  Cups are the derivative slots
// (typed by which field's derivative opened them); the trace seam carries no
// cup.  Corners are the cup-delimited segments; beyond the four basic corner
// operators R, RM, MdR, ONE a mixed second derivative also produces the
// compound corner M^dag (v-X)^{-1} M (token MdRM).
enum class CornerAtom : std::uint8_t { Res, M, Mdag, CupM, CupMdag };

struct CornerWord {
  std::vector<CornerAtom> atoms;

  int cups() const;               // r
  int m_factors() const;          // r^M   : explicit M numerators
  int mdag_factors() const;       // r^Mdag: explicit M^dag numerators
  int identity_corners() const;   // i_pi  : empty corners (cup 1 cup)
  int bare_resolvents() const;    // r_pi  : resolvent factors minus decorations
  int corner_count() const;       // r + 1

  std::vector<std::string> corner_tokens() const;  // R, RM, MdR, MdRM, ONE
  std::string grammar() const;                     // comma-joined tokens

  // Lexicographically minimal rotation of the atom string (trace cyclicity),
  // used for deduplication.
  std::vector<CornerAtom> canonical_rotation() const;

  friend bool operator==(const CornerWord&, const CornerWord&) = default;
};

// All cyclically distinct terms of
//   d^q/dM^q d^qbar/dMdag^qbar  Tr 1/(v - M Mdag),
// each with prefactor 1.
std::vector<CornerWord> differentiate_trace(int q, int qbar, int cap = caps().faa);

std::size_t count_faa_terms(int q, int qbar, int cap = caps().faa);

// Numeric value of a word: atoms multiplied left to right, resolvents at
// (v - M Mdag)^{-1}, CupM -> cup_m, CupMdag -> cup_mdag, then traced.
std::complex<double> evaluate_corner_word(const CornerWord& word,
                                          const Eigen::MatrixXcd& M,
                                          const Eigen::MatrixXcd& Mdag,
                                          std::complex<double> v,
                                          const Eigen::MatrixXcd& cup_m,
                                          const Eigen::MatrixXcd& cup_mdag);

// ---- decorated trees ----

// Oriented tree on n vertices, edges tail -> head.
struct OrientedTree {
  int n = 1;
  std::vector<std::pair<int, int>> edges;  // n-1 edges
};

enum class HalfEdgeMark : std::uint8_t { None, M, Mdag, J, Jdag };

// {1,2} decoration at each edge end picks which of the vertex's two loops the
// edge attaches to.  Marks are optional annotations on the glued half-edge
// pair; eta_annotation carries the undefined (J J^dag)^{eta_c} exponent as an
// opaque tag, never evaluated.
struct DecoratedTree {
  OrientedTree tree;
  std::vector<std::pair<int, int>> end_choice;        // per edge, values in {1,2}
  std::vector<std::pair<HalfEdgeMark, HalfEdgeMark>> marks;  // optional, per edge
  std::string eta_annotation;

  int loop_of_tail(int e) const;  // loop id = 2*vertex + (choice-1)
  int loop_of_head(int e) const;
};

// All 2^{2(n-1)} decorations of the given tree, deterministic order.
std::vector<DecoratedTree> enumerate_decorations(const OrientedTree& tree);

// Marks on a glued pair must be conjugate (M with Mdag, J with Jdag).
void validate_marks(const DecoratedTree& t);

// Connected components of the forest induced on the 2n loops; always n+1.
struct CycleSet {
  std::vector<std::vector<int>> components;
};

CycleSet cycles_of(const DecoratedTree& t);

// Per-cycle J / Jdag balance of marked half-edge ends.
bool j_marks_balanced(const DecoratedTree& t);

// ---- explicit bound formulas ----

struct TreeCumulantBound {
  double scalar_factor;  // |lambda|^{e_T} (K!)^2 2^{2K} / (cos(arg lambda/(p-1))^{2 e_T + K} v_T!)
  int n_power;           // the stripped N^{2-|pi|} exponent
};

TreeCumulantBound tree_cumulant_bound(int e_T, int v_T, int K, int pi_size,
                                      std::complex<double> lambda, int p);

// K^n |lambda|^{kappa_p n} prod_i r_i!
double mainamp_bound(int n, const std::vector<int>& coordinations,
                     std::complex<double> lambda, double K_const, double kappa_p);

}  // namespace lvr

#endif
