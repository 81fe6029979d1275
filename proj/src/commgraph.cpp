#include "commsemi/commgraph.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace commsemi {

namespace {

constexpr uint32_t kNoVertex = UINT32_MAX;
constexpr uint16_t kUnreached = UINT16_MAX;

}  // namespace

CommutingGraph CommutingGraph::of(std::shared_ptr<FiniteSemigroup const> s) {
  CommutingGraph g;
  g.s_ = std::move(s);
  g.n_ = g.s_->degree();
  auto center = g.s_->center();
  g.vert_of_elem_.assign(g.s_->size(), kNoVertex);
  size_t ci = 0;
  for (uint32_t i = 0; i < g.s_->size(); ++i) {
    if (ci < center.size() && center[ci] == i) {
      ++ci;
      continue;
    }
    g.vert_of_elem_[i] = static_cast<uint32_t>(g.verts_.size());
    g.verts_.push_back(i);
  }
  if (g.s_->is_transformational()) {
    g.flat_.resize(g.verts_.size() * g.n_);
    for (size_t v = 0; v < g.verts_.size(); ++v) {
      std::memcpy(&g.flat_[v * g.n_], g.s_->element(g.verts_[v]).data(), g.n_);
    }
  }
  return g;
}

CommutingGraph CommutingGraph::idempotent(
    std::shared_ptr<FiniteSemigroup const> s) {
  CommutingGraph g = of(std::move(s));
  std::vector<uint32_t> kept;
  for (uint32_t e : g.verts_) {
    if (g.s_->is_idempotent_element(e)) {
      kept.push_back(e);
    }
  }
  g.verts_ = std::move(kept);
  std::fill(g.vert_of_elem_.begin(), g.vert_of_elem_.end(), kNoVertex);
  for (uint32_t v = 0; v < g.verts_.size(); ++v) {
    g.vert_of_elem_[g.verts_[v]] = v;
  }
  if (g.s_->is_transformational()) {
    g.flat_.resize(g.verts_.size() * g.n_);
    for (size_t v = 0; v < g.verts_.size(); ++v) {
      std::memcpy(&g.flat_[v * g.n_], g.s_->element(g.verts_[v]).data(), g.n_);
    }
  }
  g.csr_built_ = false;
  g.csr_off_.clear();
  g.csr_adj_.clear();
  return g;
}

std::optional<uint32_t> CommutingGraph::vertex_of(uint32_t element) const {
  if (element >= vert_of_elem_.size() || vert_of_elem_[element] == kNoVertex) {
    return std::nullopt;
  }
  return vert_of_elem_[element];
}

std::optional<uint32_t> CommutingGraph::vertex_of(
    Transformation const& t) const {
  auto idx = s_->index_of(t);
  if (!idx) {
    return std::nullopt;
  }
  return vertex_of(*idx);
}

bool CommutingGraph::adjacent(uint32_t u, uint32_t v) const {
  if (u == v) {
    return false;
  }
  if (!flat_.empty()) {
    return commutes_raw(&flat_[size_t(u) * n_], &flat_[size_t(v) * n_], n_);
  }
  uint32_t a = verts_.at(u), b = verts_.at(v);
  return s_->mul(a, b) == s_->mul(b, a);
}

void CommutingGraph::ensure_csr() const {
  if (csr_built_) {
    return;
  }
  size_t v_count = verts_.size();
  std::vector<uint32_t> deg(v_count, 0);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < v_count; ++u) {
    for (uint32_t v = u + 1; v < v_count; ++v) {
      if (adjacent(u, v)) {
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
      }
    }
  }
  csr_off_.assign(v_count + 1, 0);
  for (size_t v = 0; v < v_count; ++v) {
    csr_off_[v + 1] = csr_off_[v] + deg[v];
  }
  csr_adj_.resize(edges.size() * 2);
  std::vector<uint64_t> cursor(csr_off_.begin(), csr_off_.end() - 1);
  for (auto [u, v] : edges) {
    csr_adj_[cursor[u]++] = v;
    csr_adj_[cursor[v]++] = u;
  }
  // Scanning u < v in order leaves every adjacency row sorted already,
  // but the invariant is load-bearing for witness determinism.
  for (size_t v = 0; v < v_count; ++v) {
    std::sort(csr_adj_.begin() + csr_off_[v], csr_adj_.begin() + csr_off_[v + 1]);
  }
  csr_built_ = true;
}

DistanceResult CommutingGraph::distance(uint32_t elem_u, uint32_t elem_w,
                                        GraphBudget const& budget) const {
  auto vu = vertex_of(elem_u);
  auto vw = vertex_of(elem_w);
  if (!vu || !vw) {
    throw std::invalid_argument("distance endpoint is not a graph vertex");
  }
  if (*vu == *vw) {
    return {false, 0, {elem_u}};
  }
  size_t v_count = verts_.size();
  // Bidirectional level-synchronized BFS; sides are exact level sets, so
  // the first meet with d_a + d_b <= depth_a + depth_b is the distance.
  std::array<std::vector<uint16_t>, 2> dist;
  std::array<std::vector<uint32_t>, 2> parent;
  std::array<std::vector<uint32_t>, 2> frontier;
  for (int side = 0; side < 2; ++side) {
    dist[side].assign(v_count, kUnreached);
    parent[side].assign(v_count, kNoVertex);
  }
  dist[0][*vu] = 0;
  dist[1][*vw] = 0;
  frontier[0] = {*vu};
  frontier[1] = {*vw};
  uint32_t depth[2] = {0, 0};
  uint64_t best = UINT64_MAX;
  uint32_t meet = kNoVertex;

  auto scan_neighbors = [&](uint32_t u, auto&& visit) {
    if (csr_built_) {
      for (uint64_t k = csr_off_[u]; k < csr_off_[u + 1]; ++k) {
        visit(csr_adj_[k]);
      }
    } else {
      for (uint32_t v = 0; v < v_count; ++v) {
        if (adjacent(u, v)) {
          visit(v);
        }
      }
    }
  };

  while (best > uint64_t(depth[0]) + depth[1]) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) {
      return {true, 0, {}};
    }
    if (depth[0] + depth[1] >= budget.max_search_depth) {
      return {true, 0, {}};
    }
    int other = 1 - side;
    uint32_t d = ++depth[side];
    std::vector<uint32_t> next;
    for (uint32_t u : frontier[side]) {
      scan_neighbors(u, [&](uint32_t v) {
        if (dist[side][v] != kUnreached) {
          return;
        }
        dist[side][v] = static_cast<uint16_t>(d);
        parent[side][v] = u;
        next.push_back(v);
        if (dist[other][v] != kUnreached) {
          uint64_t total = uint64_t(d) + dist[other][v];
          if (total < best || (total == best && v < meet)) {
            best = total;
            meet = v;
          }
        }
      });
    }
    std::sort(next.begin(), next.end());
    frontier[side] = std::move(next);
  }

  std::vector<uint32_t> path;
  for (uint32_t v = meet; v != kNoVertex; v = parent[0][v]) {
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  for (uint32_t v = parent[1][meet]; v != kNoVertex; v = parent[1][v]) {
    path.push_back(v);
  }
  for (uint32_t& v : path) {
    v = verts_[v];
  }
  return {false, best, std::move(path)};
}

DistanceResult CommutingGraph::diameter(GraphBudget const& budget) const {
  size_t v_count = verts_.size();
  if (v_count > budget.max_materialized_vertices) {
    throw std::runtime_error(
        "diameter: vertex count exceeds the materialization budget");
  }
  if (v_count == 0) {
    return {false, 0, {}};
  }
  if (v_count == 1) {
    return {false, 0, {verts_[0]}};
  }
  ensure_csr();

  std::vector<uint16_t> d(v_count);
  std::vector<uint32_t> queue(v_count);
  auto bfs = [&](uint32_t src) -> uint16_t {
    std::fill(d.begin(), d.end(), kUnreached);
    d[src] = 0;
    queue[0] = src;
    size_t head = 0, tail = 1;
    uint16_t ecc = 0;
    while (head < tail) {
      uint32_t u = queue[head++];
      uint16_t du = d[u];
      for (uint64_t k = csr_off_[u]; k < csr_off_[u + 1]; ++k) {
        uint32_t v = csr_adj_[k];
        if (d[v] == kUnreached) {
          d[v] = du + 1;
          ecc = std::max<uint16_t>(ecc, du + 1);
          queue[tail++] = v;
        }
      }
    }
    if (tail < v_count) {
      return kUnreached;  // disconnected
    }
    return ecc;
  };

  if (bfs(0) == kUnreached) {
    return {true, 0, {}};
  }

  // Exact diameter by eccentricity bounding: every BFS from v updates
  // lower/upper eccentricity bounds of all vertices; candidates whose
  // upper bound cannot exceed the running diameter drop out.
  std::vector<uint16_t> ecc_lo(v_count, 0), ecc_hi(v_count, kUnreached);
  std::vector<uint8_t> live(v_count, 1);
  auto degree_of = [&](uint32_t v) { return csr_off_[v + 1] - csr_off_[v]; };
  uint16_t diam = 0;
  uint32_t best_src = 0, best_far = 0;
  bool pick_high = true;
  size_t live_count = v_count;
  while (live_count > 0) {
    uint32_t pick = kNoVertex;
    for (uint32_t v = 0; v < v_count; ++v) {
      if (!live[v]) {
        continue;
      }
      if (pick == kNoVertex) {
        pick = v;
        continue;
      }
      bool better;
      if (pick_high) {
        better = ecc_hi[v] > ecc_hi[pick] ||
                 (ecc_hi[v] == ecc_hi[pick] && degree_of(v) > degree_of(pick));
      } else {
        better = ecc_lo[v] < ecc_lo[pick] ||
                 (ecc_lo[v] == ecc_lo[pick] && degree_of(v) > degree_of(pick));
      }
      if (better) {
        pick = v;
      }
    }
    pick_high = !pick_high;
    uint16_t ecc = bfs(pick);
    if (ecc > diam) {
      diam = ecc;
      best_src = pick;
      for (uint32_t v = 0; v < v_count; ++v) {
        if (d[v] == ecc) {
          best_far = v;
          break;
        }
      }
    }
    for (uint32_t v = 0; v < v_count; ++v) {
      if (!live[v]) {
        continue;
      }
      uint16_t dv = d[v];
      ecc_lo[v] = std::max<uint16_t>(ecc_lo[v],
                                     std::max<uint16_t>(dv, ecc - dv));
      ecc_hi[v] = std::min<uint16_t>(ecc_hi[v], ecc + dv);
      if (ecc_hi[v] <= diam) {
        live[v] = 0;
        --live_count;
      }
    }
  }

  // Rebuild the extremal geodesic with parent tracking.
  std::vector<uint32_t> parent(v_count, kNoVertex);
  std::fill(d.begin(), d.end(), kUnreached);
  d[best_src] = 0;
  queue[0] = best_src;
  size_t head = 0, tail = 1;
  while (head < tail) {
    uint32_t u = queue[head++];
    for (uint64_t k = csr_off_[u]; k < csr_off_[u + 1]; ++k) {
      uint32_t v = csr_adj_[k];
      if (d[v] == kUnreached) {
        d[v] = d[u] + 1;
        parent[v] = u;
        queue[tail++] = v;
      }
    }
  }
  std::vector<uint32_t> path;
  for (uint32_t v = best_far; v != kNoVertex; v = parent[v]) {
    path.push_back(verts_[v]);
  }
  std::reverse(path.begin(), path.end());
  return {false, diam, std::move(path)};
}

bool CommutingGraph::is_connected(GraphBudget const& budget) const {
  size_t v_count = verts_.size();
  if (v_count <= 1) {
    return true;
  }
  if (v_count > budget.max_materialized_vertices) {
    throw std::runtime_error(
        "is_connected: vertex count exceeds the materialization budget");
  }
  ensure_csr();
  std::vector<uint8_t> seen(v_count, 0);
  std::vector<uint32_t> stack = {0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    uint32_t u = stack.back();
    stack.pop_back();
    for (uint64_t k = csr_off_[u]; k < csr_off_[u + 1]; ++k) {
      uint32_t v = csr_adj_[k];
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == v_count;
}

bool CommutingGraph::validate_path(
    std::vector<uint32_t> const& element_path) const {
  if (element_path.empty()) {
    return false;
  }
  std::vector<uint32_t> vs;
  for (uint32_t e : element_path) {
    auto v = vertex_of(e);
    if (!v) {
      return false;
    }
    vs.push_back(*v);
  }
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) {
        return false;
      }
    }
  }
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!adjacent(vs[i], vs[i + 1])) {
      return false;
    }
  }
  return true;
}

std::vector<uint32_t> CommutingGraph::idempotent_path(
    std::vector<uint32_t> const& element_path) const {
  if (!validate_path(element_path)) {
    throw std::invalid_argument("idempotent_path: input is not a path");
  }
  std::vector<uint32_t> out = element_path;
  // Left-to-right sweep: each interior element is replaced by its least
  // idempotent power, which still commutes with both neighbors.
  for (size_t i = 1; i + 1 < out.size(); ++i) {
    uint32_t e = s_->idempotent_power_of(out[i]);
    if (!vertex_of(e)) {
      throw std::runtime_error(
          "idempotent_path: an idempotent power left the graph");
    }
    out[i] = e;
  }
  if (!validate_path(out)) {
    throw std::runtime_error(
        "idempotent_path: sweep collided; the input path was not minimal");
  }
  return out;
}

std::string CommutingGraph::to_dot() const {
  if (verts_.size() > 10000) {
    throw std::runtime_error("to_dot: graph exceeds the export guard");
  }
  std::string out = "graph commuting {\n";
  for (uint32_t v = 0; v < verts_.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + vertex_label(v) +
           "\"];\n";
  }
  for (uint32_t u = 0; u < verts_.size(); ++u) {
    for (uint32_t v = u + 1; v < verts_.size(); ++v) {
      if (adjacent(u, v)) {
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

std::string CommutingGraph::to_json() const {
  if (verts_.size() > 10000) {
    throw std::runtime_error("to_json: graph exceeds the export guard");
  }
  nlohmann::json j;
  auto& vs = j["vertices"] = nlohmann::json::array();
  for (uint32_t v = 0; v < verts_.size(); ++v) {
    vs.push_back(vertex_label(v));
  }
  auto& es = j["edges"] = nlohmann::json::array();
  for (uint32_t u = 0; u < verts_.size(); ++u) {
    for (uint32_t v = u + 1; v < verts_.size(); ++v) {
      if (adjacent(u, v)) {
        es.push_back({u, v});
      }
    }
  }
  return j.dump(2);
}

LabeledGraph graph_from_json(std::string const& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (nlohmann::json::parse_error const& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("expected keys \"vertices\" and \"edges\"");
  }
  LabeledGraph g;
  g.vertices = j["vertices"].get<std::vector<std::string>>();
  for (auto const& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("edge entries must be index pairs");
    }
    uint32_t u = e[0].get<uint32_t>(), v = e[1].get<uint32_t>();
    if (u >= g.vertices.size() || v >= g.vertices.size() || u >= v) {
      throw std::invalid_argument("edge indices out of range or unordered");
    }
    g.edges.emplace_back(u, v);
  }
  return g;
}

std::vector<Transformation> all_idempotents(int n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("all_idempotents: 1 <= n <= 10 required");
  }
  std::vector<Transformation> out;
  std::vector<Point> img(n);
  // Choose the image set I, fix it pointwise, and send every point
  // outside I anywhere into I.
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Point> image, outside;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        image.push_back(static_cast<Point>(i));
        img[i] = static_cast<Point>(i);
      } else {
        outside.push_back(static_cast<Point>(i));
      }
    }
    std::vector<size_t> choice(outside.size(), 0);
    while (true) {
      for (size_t k = 0; k < outside.size(); ++k) {
        img[outside[k]] = image[choice[k]];
      }
      out.emplace_back(img);
      size_t k = outside.size();
      while (k > 0 && ++choice[k - 1] == image.size()) {
        choice[--k] = 0;
      }
      if (k == 0) {
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Transformation> all_permutations(int n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("all_permutations: 1 <= n <= 10 required");
  }
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Transformation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Transformation> idempotents_and_perms(int n) {
  std::vector<Transformation> out = all_idempotents(n);
  auto perms = all_permutations(n);
  out.insert(out.end(), perms.begin(), perms.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, Transformation::identity(n));
  return out;
}

std::vector<Transformation> c_operator(int n,
                                       std::vector<Transformation> const& A) {
  for (auto const& a : A) {
    if (a.degree() != n) {
      throw std::invalid_argument("c_operator: degree mismatch");
    }
  }
  std::vector<Transformation> out;
  for (auto const& f : idempotents_and_perms(n)) {
    for (auto const& a : A) {
      if (commutes_raw(f.data(), a.data(), n)) {
        out.push_back(f);
        break;
      }
    }
  }
  return out;
}

bool lower_bound_certificate(int n, Transformation const& a,
                             Transformation const& b) {
  if (a.degree() != n || b.degree() != n) {
    throw std::invalid_argument("lower_bound_certificate: degree mismatch");
  }
  Transformation id = Transformation::identity(n);
  if (a == id || b == id) {
    throw std::invalid_argument(
        "lower_bound_certificate: endpoints must be non-identity");
  }
  if (a == b || a.commutes(b)) {
    return false;
  }
  // Paths of length <= 4 between a and b can be normalized so the
  // interior lies in E u G; then the second vertex lies in C(C({a})) and
  // the second-to-last in C({b}), and those two commute (possibly being
  // equal). Absence of such a commuting pair forces d(a,b) >= 5.
  auto cca = c_operator(n, c_operator(n, {a}));
  auto cb = c_operator(n, {b});
  for (auto const& c : cca) {
    for (auto const& d : cb) {
      if (commutes_raw(c.data(), d.data(), n)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Transformation> connect_idempotents(Transformation const& e,
                                                Transformation const& f,
                                                int r) {
  int n = e.degree();
  if (f.degree() != n) {
    throw std::invalid_argument("connect_idempotents: degree mismatch");
  }
  if (!e.is_idempotent() || !f.is_idempotent()) {
    throw std::invalid_argument("connect_idempotents: inputs must be idempotent");
  }
  if (r < 2 || r >= n) {
    throw std::invalid_argument("connect_idempotents: need 2 <= r < n");
  }
  if (e.rank() > r || f.rank() > r) {
    throw std::invalid_argument("connect_idempotents: rank exceeds r");
  }
  if (e == f) {
    throw std::invalid_argument("connect_idempotents: endpoints coincide");
  }

  auto finish = [&](std::vector<Transformation> path) {
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      if (!path[i].commutes(path[i + 1])) {
        throw std::logic_error("connect_idempotents: bridge does not commute");
      }
      for (size_t j = i + 1; j < path.size(); ++j) {
        if (path[i] == path[j]) {
          throw std::logic_error("connect_idempotents: bridge collided");
        }
      }
    }
    return path;
  };

  if (e.commutes(f)) {
    return finish({e, f});
  }

  std::vector<Point> ime = e.image(), imf = f.image();
  std::vector<Point> shared;
  std::set_intersection(ime.begin(), ime.end(), imf.begin(), imf.end(),
                        std::back_inserter(shared));
  if (!shared.empty()) {
    // A shared image point is fixed by both, so its constant map
    // commutes with both.
    return finish({e, Transformation::constant(n, shared.front() + 1), f});
  }

  // Disjoint images: look for x in im(e), y in im(f) lying in the same
  // kernel class on both sides; then the rank-2 map im(e) -> x,
  // elsewhere -> y commutes with both.
  for (Point y : imf) {
    Point x = e[y];
    if (f[x] == y) {
      std::vector<Point> img(n);
      std::vector<bool> in_ime(n, false);
      for (Point p : ime) {
        in_ime[p] = true;
      }
      for (int i = 0; i < n; ++i) {
        img[i] = in_ime[i] ? x : y;
      }
      return finish({e, Transformation(img), f});
    }
  }

  // No such pair: route through a rank-2 map pinning one image point of
  // f and a constant at that point.
  Point y1 = imf.front();
  Point xi = e[y1];
  std::vector<Point> img(n, xi);
  img[y1] = y1;
  return finish(
      {e, Transformation(img), Transformation::constant(n, y1 + 1), f});
}

}  // namespace commsemi
