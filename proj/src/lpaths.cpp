#include "commsemi/lpaths.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace commsemi {

namespace {

constexpr uint32_t kUnset = UINT32_MAX;

bool commute(FiniteSemigroup const& s, uint32_t i, uint32_t j) {
  if (s.is_transformational()) {
    return commutes_raw(s.element(i).data(), s.element(j).data(), s.degree());
  }
  return s.mul(i, j) == s.mul(j, i);
}

std::vector<uint8_t> central_mask(FiniteSemigroup const& s) {
  std::vector<uint8_t> mask(s.size(), 0);
  for (uint32_t c : s.center()) {
    mask[c] = 1;
  }
  return mask;
}

// BFS distances from src within the admissible set, commuting edges.
std::vector<uint32_t> bfs_in(FiniteSemigroup const& s,
                             std::vector<uint8_t> const& admissible,
                             uint32_t src) {
  std::vector<uint32_t> dist(s.size(), kUnset);
  dist[src] = 0;
  std::queue<uint32_t> q;
  q.push(src);
  while (!q.empty()) {
    uint32_t u = q.front();
    q.pop();
    for (uint32_t v = 0; v < s.size(); ++v) {
      if (v == u || !admissible[v] || dist[v] != kUnset ||
          !commute(s, u, v)) {
        continue;
      }
      dist[v] = dist[u] + 1;
      q.push(v);
    }
  }
  return dist;
}

// Lexicographically least shortest path src -> dst, walking the BFS
// layering from dst and always taking the least admissible neighbor.
std::vector<uint32_t> lex_least_path(FiniteSemigroup const& s,
                                     std::vector<uint8_t> const& admissible,
                                     uint32_t src, uint32_t dst) {
  auto dist = bfs_in(s, admissible, dst);
  std::vector<uint32_t> path = {src};
  uint32_t cur = src;
  while (cur != dst) {
    for (uint32_t v = 0; v < s.size(); ++v) {
      if (v != cur && admissible[v] && dist[v] == dist[cur] - 1 &&
          commute(s, cur, v)) {
        path.push_back(v);
        cur = v;
        break;
      }
    }
  }
  return path;
}

// Admissible endpoint pair for an l-path / (A_n) chain: u != w with
// uu = wu and uw = ww.
bool endpoint_pair(FiniteSemigroup const& s, uint32_t u, uint32_t w) {
  return u != w && s.mul(u, u) == s.mul(w, u) && s.mul(u, w) == s.mul(w, w);
}

}  // namespace

bool is_lpath(FiniteSemigroup const& s,
              std::vector<uint32_t> const& vertices) {
  if (vertices.size() < 2 || vertices.front() == vertices.back()) {
    return false;
  }
  for (uint32_t v : vertices) {
    if (v >= s.size()) {
      return false;
    }
  }
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) {
        return false;
      }
    }
  }
  // Endpoints must be non-central (a central endpoint would make the
  // defining equations collapse in a band); interior vertices may be
  // central, matching the chain form of (A_n).
  auto mask = central_mask(s);
  if (mask[vertices.front()] || mask[vertices.back()]) {
    return false;
  }
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!commute(s, vertices[i], vertices[i + 1])) {
      return false;
    }
  }
  uint32_t first = vertices.front(), last = vertices.back();
  for (uint32_t v : vertices) {
    if (s.mul(first, v) != s.mul(last, v)) {
      return false;
    }
  }
  return true;
}

std::vector<LPathEndpoints> minimal_lpath_endpoints(FiniteSemigroup const& s) {
  if (s.size() > 10000) {
    throw std::runtime_error(
        "minimal_lpath_endpoints: size guard exceeded (|S| > 10^4)");
  }
  auto central = central_mask(s);
  std::vector<LPathEndpoints> out;
  for (uint32_t u = 0; u < s.size(); ++u) {
    if (central[u]) {
      continue;
    }
    for (uint32_t w = u + 1; w < s.size(); ++w) {
      if (central[w] || !endpoint_pair(s, u, w)) {
        continue;
      }
      // Interior vertices live in {v : uv = wv}; centrality is only
      // required of the endpoints.
      std::vector<uint8_t> adm(s.size(), 0);
      for (uint32_t v = 0; v < s.size(); ++v) {
        adm[v] = s.mul(u, v) == s.mul(w, v);
      }
      auto dist = bfs_in(s, adm, u);
      if (dist[w] != kUnset) {
        out.push_back({u, w, dist[w]});
      }
    }
  }
  return out;
}

std::optional<KnitDegreeResult> knit_degree(FiniteSemigroup const& s) {
  auto pairs = minimal_lpath_endpoints(s);
  if (pairs.empty()) {
    return std::nullopt;
  }
  uint64_t best = UINT64_MAX;
  for (auto const& p : pairs) {
    best = std::min(best, p.length);
  }
  std::vector<uint32_t> witness;
  for (auto const& p : pairs) {
    if (p.length != best) {
      continue;
    }
    std::vector<uint8_t> adm(s.size(), 0);
    for (uint32_t v = 0; v < s.size(); ++v) {
      adm[v] = s.mul(p.u, v) == s.mul(p.w, v);
    }
    // An l-path reversed is an l-path, so try both orientations.
    for (auto [a, b] : {std::pair{p.u, p.w}, std::pair{p.w, p.u}}) {
      auto path = lex_least_path(s, adm, a, b);
      if (witness.empty() || path < witness) {
        witness = std::move(path);
      }
    }
  }
  return KnitDegreeResult{best, std::move(witness)};
}

QuasiIdentityReport check_quasi_identity_1(FiniteSemigroup const& s) {
  for (uint32_t z = 0; z < s.size(); ++z) {
    for (uint32_t x = 0; x < s.size(); ++x) {
      for (uint32_t y = 0; y < s.size(); ++y) {
        if (s.mul(z, x) == s.mul(z, y) && s.mul(x, y) != s.mul(y, x)) {
          return {false, {z, x, y}};
        }
      }
    }
  }
  return {true, {}};
}

QuasiIdentityReport check_An(FiniteSemigroup const& s, uint64_t n,
                             AnEngine engine) {
  if (n < 1) {
    throw std::invalid_argument("check_An: n >= 1 required");
  }
  if (n == 1) {
    return {true, {}};  // the premise already forces x_1 = x_n
  }
  if (engine == AnEngine::LPath) {
    if (!s.is_band() || !s.center().empty()) {
      throw std::invalid_argument(
          "check_An: the l-path engine requires a center-empty band");
    }
    auto kd = knit_degree(s);
    if (!kd || kd->degree >= n) {
      return {true, {}};
    }
    std::vector<uint32_t> witness = kd->witness;
    while (witness.size() < n) {
      witness.push_back(witness.back());
    }
    return {false, std::move(witness)};
  }
  // Naive engine: chains with repeats collapse to distinct chains, so
  // the search is a BFS between admissible endpoint pairs over all of
  // S (central elements included).
  for (uint32_t a = 0; a < s.size(); ++a) {
    for (uint32_t b = 0; b < s.size(); ++b) {
      if (!endpoint_pair(s, a, b)) {
        continue;
      }
      std::vector<uint8_t> adm(s.size(), 0);
      for (uint32_t v = 0; v < s.size(); ++v) {
        adm[v] = s.mul(a, v) == s.mul(b, v);
      }
      auto dist = bfs_in(s, adm, a);
      if (dist[b] != kUnset && dist[b] <= n - 1) {
        auto path = lex_least_path(s, adm, a, b);
        while (path.size() < n) {
          path.push_back(path.back());
        }
        return {false, std::move(path)};
      }
    }
  }
  return {true, {}};
}

QuasiIdentityReport r_semisimple_band_check(FiniteSemigroup const& s) {
  if (!s.is_band()) {
    throw std::invalid_argument("r_semisimple_band_check: input is not a band");
  }
  auto q1 = check_quasi_identity_1(s);
  if (!q1.holds) {
    return q1;
  }
  // Failures of (A_n) are upward-monotone in n and distinct chains are
  // bounded by |S|, so the largest n settles them all.
  return check_An(s, s.size(), AnEngine::Naive);
}

}  // namespace commsemi
