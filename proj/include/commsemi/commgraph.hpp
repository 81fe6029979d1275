// The commuting graph G(S) and idempotent commuting graph GE(S):
// implicit adjacency over a semigroup universe, exact distances and
// diameters, witness paths, and the distance >= 5 certificate for T(n).

#ifndef COMMSEMI_COMMGRAPH_HPP
#define COMMSEMI_COMMGRAPH_HPP

#include <memory>

#include "commsemi/semigroup.hpp"

namespace commsemi {

// A shortest-path result. witness, when present, is a list of semigroup
// element indices of length value + 1 whose consecutive entries commute.
struct DistanceResult {
  bool infinite = false;
  uint64_t value = 0;
  std::vector<uint32_t> witness;

  std::string to_string() const {
    return infinite ? "inf" : std::to_string(value);
  }
};

struct GraphBudget {
  // Largest vertex count for which adjacency is materialized (CSR) and
  // full-diameter / connectivity sweeps are attempted.
  size_t max_materialized_vertices = 100000;
  // Depth cap for pairwise distance searches over implicit adjacency.
  uint32_t max_search_depth = 24;
  unsigned threads = 1;
};

class CommutingGraph {
 public:
  // G(S): vertices are the non-central elements.
  static CommutingGraph of(std::shared_ptr<FiniteSemigroup const> s);
  // GE(S): the subgraph induced by the non-central idempotents.
  static CommutingGraph idempotent(std::shared_ptr<FiniteSemigroup const> s);

  FiniteSemigroup const& semigroup() const { return *s_; }

  // True when S was commutative, so the graph is empty by convention.
  bool empty() const { return verts_.empty(); }

  size_t num_vertices() const { return verts_.size(); }
  uint32_t vertex_element(uint32_t v) const { return verts_.at(v); }
  std::string vertex_label(uint32_t v) const { return s_->label(verts_.at(v)); }

  // Vertex id of a semigroup element, or nullopt if it is not a vertex
  // (central, or filtered out of the idempotent graph).
  std::optional<uint32_t> vertex_of(uint32_t element) const;
  std::optional<uint32_t> vertex_of(Transformation const& t) const;

  bool adjacent(uint32_t u, uint32_t v) const;

  // Exact distance between two elements (bidirectional level BFS over
  // the implicit adjacency). Throws if either element is not a vertex.
  // Reports infinite when the search exceeds budget.max_search_depth or
  // a side exhausts its component.
  DistanceResult distance(uint32_t elem_u, uint32_t elem_w,
                          GraphBudget const& budget = {}) const;

  // Exact diameter with an extremal witness path, by eccentricity
  // bounding over materialized adjacency. Infinite iff disconnected.
  // Throws std::runtime_error when the vertex count exceeds the budget.
  DistanceResult diameter(GraphBudget const& budget = {}) const;

  bool is_connected(GraphBudget const& budget = {}) const;

  // Lemma-style sweep: replaces the interior of a valid path by
  // idempotent powers, preserving length. Throws if the input is not a
  // path or if a replacement collides (input not minimal).
  std::vector<uint32_t> idempotent_path(
      std::vector<uint32_t> const& element_path) const;

  // Checks the path invariants: pairwise distinct vertices, consecutive
  // commuting.
  bool validate_path(std::vector<uint32_t> const& element_path) const;

  std::string to_dot() const;
  std::string to_json() const;

 private:
  CommutingGraph() = default;
  void ensure_csr() const;

  std::shared_ptr<FiniteSemigroup const> s_;
  std::vector<uint32_t> verts_;          // semigroup element indices
  std::vector<uint32_t> vert_of_elem_;   // UINT32_MAX when not a vertex
  std::vector<uint8_t> flat_;            // vertex images, transformational
  int n_ = 0;

  mutable std::vector<uint64_t> csr_off_;
  mutable std::vector<uint32_t> csr_adj_;
  mutable bool csr_built_ = false;
};

struct LabeledGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  bool operator==(LabeledGraph const&) const = default;
};
LabeledGraph graph_from_json(std::string const& json_text);

// All idempotents / permutations of T(n), in canonical order, including
// the identity.
std::vector<Transformation> all_idempotents(int n);
std::vector<Transformation> all_permutations(int n);

// E u G: the non-identity idempotents and non-identity permutations.
std::vector<Transformation> idempotents_and_perms(int n);

// C(A) = elements of E u G commuting with at least one member of A.
std::vector<Transformation> c_operator(int n,
                                       std::vector<Transformation> const& A);

// True iff no c in C(C({a})), d in C({b}) commute and ab != ba, which
// certifies d(a,b) >= 5 in G(T(n)).
bool lower_bound_certificate(int n, Transformation const& a,
                             Transformation const& b);

// A path of length <= 3 between idempotents e != f inside GE(J_r),
// through the shared-image constant or the rank-2 bridges.
// Requires non-identity idempotents of rank <= r, 2 <= r < n.
std::vector<Transformation> connect_idempotents(Transformation const& e,
                                                Transformation const& f,
                                                int r);

}  // namespace commsemi

#endif
