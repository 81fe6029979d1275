// Constructors for the explicit semigroups and witness transformations:
// the bands S0(k) / S1(k), the cycle-tail transformations, the
// distance-5 witness pairs for ideals and for T(n), the interleaved
// idempotent configurations, and a small catalog of Cayley tables.

#ifndef COMMSEMI_CONSTRUCTIONS_HPP
#define COMMSEMI_CONSTRUCTIONS_HPP

#include <memory>

#include "commsemi/semigroup.hpp"

namespace commsemi {

// The band of knit degree 2k on 4k+3 points, generated by the 2k+1
// idempotents a_1..a_k, b_1..b_k, e_1; elements carry symbolic labels
// ("a1", "b2", "e1", "c_y0", "c_v1", "c_s", ...). |S| = 4k+3.
FiniteSemigroup s0_band(int k);

// The band of knit degree 2k+1 on 4k+1 points: s0_band(k) minus
// {e_1, c_s}, with the two superfluous domain points removed.
FiniteSemigroup s1_band(int k);

// A symbolic element of S0(k).
struct S0Element {
  enum class Kind { A, B, E1, Cy, Cv, Cs };
  Kind kind = Kind::A;
  int index = 0;  // subscript; Cy allows 0..k, A/B/Cv use 1..k

  static S0Element parse(std::string const& label, int k);
  std::string label() const;
  bool operator==(S0Element const&) const = default;
};

// Product in S0(k) computed from the case formulas, never by
// composition of the underlying transformations.
S0Element s0_mul_formula(int k, S0Element g, S0Element h);

// The cycle-tail transformation: tail[0] -> tail[1] -> ... ->
// tail.back() -> cycle[0], cycle rotates, every unlisted point maps to
// the default (and the exceptional point, when given, to its own
// target). Points are 1-based. When default_to == 0 the tail, cycle,
// and exceptional point must cover all of X.
struct CycleTailSpec {
  std::vector<int> cycle;          // x_1 ... x_m, m >= 1
  std::vector<int> tail;           // z_p ... z_1, leftmost first; may be empty
  int default_to = 0;              // z_s, or 0 for the no-default variant
  int exceptional_point = 0;       // w, or 0 when absent
  int exceptional_to = 0;          // z_t
};
Transformation ndi5(int n, CycleTailSpec const& spec);

// The distance >= 5 witness pair for G(J_r), matched to the theorem's
// case split on (n, r); n = 3 returns the rank-2 pair that attains
// distance 4.
std::pair<Transformation, Transformation> tdia2_witnesses(int n, int r);

// The rank-4 pair with witness distance exactly 4 for n in {5, 6, 7}.
std::pair<Transformation, Transformation> distance4_witnesses(int n);

// The distance >= 5 witness pair for G(T(n)); n in {6, 8} or n >= 9
// composite.
std::pair<Transformation, Transformation> tdia3_witnesses(int n);

enum class InterleavedVariant { A, B };

// A pair (e, f) of interleaved idempotents in J_r that no idempotent of
// J_r bridges: variant A uses the least m with m <= r < 2m <= n;
// variant B handles r = n-1 with n = 2m+1 odd.
std::pair<IdempotentForm, IdempotentForm> lja2_configuration(
    int n, int r, InterleavedVariant variant);

// Cayley-table catalog: "teve4" (4-element band, knit degree 2),
// "tald4" (4-element semigroup, not a band, whose graph is a chain),
// "zeroband3" ({e, f, 0} with ef = f, fe = e, 0 absorbing).
std::vector<std::string> small_semigroup_names();
FiniteSemigroup small_semigroup(std::string const& name);

}  // namespace commsemi

#endif
