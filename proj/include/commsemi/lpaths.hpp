// Left paths, knit degree, and the quasi-identities (1) and (A_n).
//
// An l-path is a path a_1 - ... - a_m in the commuting graph with
// a_1 != a_m and a_1 a_i = a_m a_i for every vertex a_i on it. The knit
// degree is the length of a shortest l-path, when one exists.

#ifndef COMMSEMI_LPATHS_HPP
#define COMMSEMI_LPATHS_HPP

#include "commsemi/semigroup.hpp"

namespace commsemi {

// Validates the full l-path invariant: pairwise-distinct non-central
// vertices, consecutive commuting, first != last, and the left-product
// condition at every vertex.
bool is_lpath(FiniteSemigroup const& s, std::vector<uint32_t> const& vertices);

struct KnitDegreeResult {
  uint64_t degree = 0;
  std::vector<uint32_t> witness;  // element indices, length degree + 1
};

// Shortest l-path over all admissible endpoint pairs; absent when the
// graph has no l-path. Ties break toward the lexicographically least
// witness under element order.
std::optional<KnitDegreeResult> knit_degree(FiniteSemigroup const& s);

struct LPathEndpoints {
  uint32_t u = 0, w = 0;  // element indices, u < w
  uint64_t length = 0;    // shortest l-path length between them
};

// Every unordered endpoint pair joined by some l-path, with the
// shortest length, sorted by (u, w).
std::vector<LPathEndpoints> minimal_lpath_endpoints(FiniteSemigroup const& s);

struct QuasiIdentityReport {
  bool holds = true;
  // Element indices falsifying the implication: (z, x, y) for (1),
  // (x_1, ..., x_n) for (A_n).
  std::vector<uint32_t> witness;
};

// (1): zx = zy implies xy = yx, scanned over all triples.
QuasiIdentityReport check_quasi_identity_1(FiniteSemigroup const& s);

enum class AnEngine {
  Naive,  // pair-anchored BFS over all of S; valid for any semigroup
  LPath,  // via the l-path equivalence; center-empty bands only
};

// (A_n): a commuting chain x_1 - ... - x_n with x_1 x_i = x_n x_i for
// all i forces x_1 = x_n.
QuasiIdentityReport check_An(FiniteSemigroup const& s, uint64_t n,
                             AnEngine engine = AnEngine::Naive);

// Holds iff (1) holds and (A_n) holds for every n; chains of distinct
// elements cannot exceed |S|, so n <= |S| is a complete sweep.
QuasiIdentityReport r_semisimple_band_check(FiniteSemigroup const& s);

}  // namespace commsemi

#endif
