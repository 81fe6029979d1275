#include "commsemi/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace commsemi {

namespace {

// Point layout for S0(k) on 4k+3 points (0-based):
//   y_0..y_k -> 0..k, v_1..v_k -> k+1..2k, x_1..x_k -> 2k+1..3k,
//   u_1..u_k -> 3k+1..4k, r -> 4k+1, s -> 4k+2.
// Note y_k doubles as v_0.
struct S0Points {
  int k;
  Point y(int i) const { return static_cast<Point>(i); }
  Point v(int i) const { return i == 0 ? y(k) : static_cast<Point>(k + i); }
  Point x(int i) const { return static_cast<Point>(2 * k + i); }
  Point u(int i) const { return static_cast<Point>(3 * k + i); }
  Point r() const { return static_cast<Point>(4 * k + 1); }
  Point s() const { return static_cast<Point>(4 * k + 2); }

  std::string name(Point p) const {
    int q = p;
    if (q <= k) return "y" + std::to_string(q);
    if (q <= 2 * k) return "v" + std::to_string(q - k);
    if (q <= 3 * k) return "x" + std::to_string(q - 2 * k);
    if (q <= 4 * k) return "u" + std::to_string(q - 3 * k);
    return q == 4 * k + 1 ? "r" : "s";
  }
};

std::vector<Point> image_a(S0Points const& pt, int i) {
  return {pt.y(i - 1), pt.x(i), pt.y(i)};
}
std::vector<Point> image_b(S0Points const& pt, int i) {
  return {pt.v(i - 1), pt.u(i), pt.v(i)};
}
std::vector<Point> image_e1(S0Points const& pt) {
  return {pt.v(pt.k), pt.r(), pt.s()};
}

// Kernel of a_i (shared by b_i, and by e_1 for i = 1) as three classes.
std::array<std::vector<Point>, 3> kernel_classes(S0Points const& pt, int i) {
  int k = pt.k;
  std::array<std::vector<Point>, 3> cls;
  auto add = [](std::vector<Point>& c, std::vector<Point> const& pts) {
    c.insert(c.end(), pts.begin(), pts.end());
  };
  if (i == 1) {
    for (int j = 2; j <= k; ++j) add(cls[0], image_a(pt, j));
    cls[0].push_back(pt.s());
    for (int j = 2; j <= k; ++j) add(cls[1], image_b(pt, j));
    cls[1].push_back(pt.y(0));
    cls[2] = {pt.x(1), pt.u(1), pt.r()};
  } else {
    for (int j = i + 1; j <= k; ++j) add(cls[0], image_a(pt, j));
    for (int j = 1; j < i; ++j) add(cls[0], image_b(pt, j));
    for (int j = i + 1; j <= k; ++j) add(cls[1], image_b(pt, j));
    add(cls[1], image_e1(pt));
    for (int j = 1; j < i; ++j) add(cls[1], image_a(pt, j));
    cls[2] = {pt.x(i), pt.u(i)};
  }
  for (auto& c : cls) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return cls;
}

// The idempotent with the given image whose kernel classes are cls:
// each class maps to its unique image point. Validates that cls is a
// partition of the n points and hits each image point exactly once.
Transformation generator_from(std::array<std::vector<Point>, 3> const& cls,
                              std::vector<Point> const& image, int n) {
  std::vector<Point> img(n, 255);
  for (auto const& c : cls) {
    Point target = 255;
    for (Point p : c) {
      if (std::find(image.begin(), image.end(), p) != image.end()) {
        if (target != 255) {
          throw std::logic_error(
              "band generator: two image points share a kernel class");
        }
        target = p;
      }
    }
    if (target == 255) {
      throw std::logic_error("band generator: kernel class misses the image");
    }
    for (Point p : c) {
      if (p >= n || img[p] != 255) {
        throw std::logic_error("band generator: classes do not partition");
      }
      img[p] = target;
    }
  }
  for (Point p : img) {
    if (p == 255) {
      throw std::logic_error("band generator: classes do not cover the set");
    }
  }
  Transformation t{img};
  if (!t.is_idempotent()) {
    throw std::logic_error("band generator: result is not idempotent");
  }
  return t;
}

std::vector<Transformation> s0_generators(int k) {
  S0Points pt{k};
  int n = 4 * k + 3;
  std::vector<Transformation> gens;
  for (int i = 1; i <= k; ++i) {
    gens.push_back(generator_from(kernel_classes(pt, i), image_a(pt, i), n));
  }
  for (int i = 1; i <= k; ++i) {
    gens.push_back(generator_from(kernel_classes(pt, i), image_b(pt, i), n));
  }
  gens.push_back(generator_from(kernel_classes(pt, 1), image_e1(pt), n));
  return gens;
}

void label_band(FiniteSemigroup& s, std::vector<Transformation> const& gens,
                std::vector<std::string> const& gen_names, S0Points const& pt) {
  std::vector<std::string> labels(s.size());
  for (uint32_t i = 0; i < s.size(); ++i) {
    Transformation const& t = s.element(i);
    auto g = std::find(gens.begin(), gens.end(), t);
    if (g != gens.end()) {
      labels[i] = gen_names[g - gens.begin()];
    } else if (t.is_constant()) {
      labels[i] = "c_" + pt.name(t[0]);
    } else {
      throw std::logic_error("band element is neither a generator nor constant");
    }
  }
  s.set_labels(std::move(labels));
}

std::vector<std::string> s0_gen_names(int k, bool with_e1) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= k; ++i) names.push_back("b" + std::to_string(i));
  if (with_e1) names.push_back("e1");
  return names;
}

}  // namespace

FiniteSemigroup s0_band(int k) {
  if (k < 2) {
    throw std::invalid_argument("s0_band: k >= 2 required");
  }
  auto gens = s0_generators(k);
  auto s = FiniteSemigroup::closure(4 * k + 3, gens);
  if (s.size() != static_cast<size_t>(4 * k + 3)) {
    throw std::logic_error("s0_band: unexpected closure size");
  }
  label_band(s, gens, s0_gen_names(k, true), S0Points{k});
  return s;
}

FiniteSemigroup s1_band(int k) {
  if (k < 2) {
    throw std::invalid_argument("s1_band: k >= 2 required");
  }
  // Drop e_1 and restrict the remaining generators to the first 4k+1
  // points; r and s never appear in their images.
  auto full = s0_generators(k);
  int n = 4 * k + 1;
  std::vector<Transformation> gens;
  for (size_t g = 0; g + 1 < full.size(); ++g) {
    std::vector<Point> img(full[g].img().begin(), full[g].img().begin() + n);
    gens.emplace_back(img);
  }
  auto s = FiniteSemigroup::closure(n, gens);
  if (s.size() != static_cast<size_t>(4 * k + 1)) {
    throw std::logic_error("s1_band: unexpected closure size");
  }
  label_band(s, gens, s0_gen_names(k, false), S0Points{k});
  return s;
}

S0Element S0Element::parse(std::string const& label, int k) {
  auto bad = [&] {
    return std::invalid_argument("not an element of S0(" + std::to_string(k) +
                                 "): " + label);
  };
  S0Element e;
  auto sub = [&](std::string const& digits, int lo) {
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw bad();
    }
    int v = std::stoi(digits);
    if (v < lo || v > k) {
      throw bad();
    }
    return v;
  };
  if (label == "e1") {
    e.kind = Kind::E1;
  } else if (label == "c_s") {
    e.kind = Kind::Cs;
  } else if (label.size() >= 2 && (label[0] == 'a' || label[0] == 'b')) {
    e.kind = label[0] == 'a' ? Kind::A : Kind::B;
    e.index = sub(label.substr(1), 1);
  } else if (label.rfind("c_y", 0) == 0) {
    e.kind = Kind::Cy;
    e.index = sub(label.substr(3), 0);
  } else if (label.rfind("c_v", 0) == 0) {
    e.kind = Kind::Cv;
    e.index = sub(label.substr(3), 1);
  } else {
    throw bad();
  }
  return e;
}

std::string S0Element::label() const {
  switch (kind) {
    case Kind::A:
      return "a" + std::to_string(index);
    case Kind::B:
      return "b" + std::to_string(index);
    case Kind::E1:
      return "e1";
    case Kind::Cy:
      return "c_y" + std::to_string(index);
    case Kind::Cv:
      return "c_v" + std::to_string(index);
    case Kind::Cs:
      return "c_s";
  }
  return {};
}

S0Element s0_mul_formula(int k, S0Element g, S0Element h) {
  using K = S0Element::Kind;
  auto cy = [&](int i) { return S0Element{K::Cy, i}; };
  // v_0 = y_k, so constants at those points coincide.
  auto cv = [&](int i) { return i == 0 ? cy(k) : S0Element{K::Cv, i}; };
  auto cs = [&] { return S0Element{K::Cs, 0}; };
  auto is_gen = [](S0Element const& t) {
    return t.kind == K::A || t.kind == K::B || t.kind == K::E1;
  };
  auto check = [&](S0Element const& t) {
    bool ok = false;
    switch (t.kind) {
      case K::A:
      case K::B:
      case K::Cv:
        ok = t.index >= 1 && t.index <= k;
        break;
      case K::Cy:
        ok = t.index >= 0 && t.index <= k;
        break;
      case K::E1:
      case K::Cs:
        ok = true;
        break;
    }
    if (!ok) {
      throw std::invalid_argument("s0_mul_formula: bad element " + t.label());
    }
  };
  check(g);
  check(h);

  // Anything times a constant is that constant.
  if (h.kind == K::Cy || h.kind == K::Cv || h.kind == K::Cs) {
    return h;
  }

  if (is_gen(g)) {
    // Generators with the same kernel form right-zero subsemigroups;
    // the kernel is shared exactly by equal subscripts, with e_1 in the
    // subscript-1 group.
    int gi = g.kind == K::E1 ? 1 : g.index;
    int hi = h.kind == K::E1 ? 1 : h.index;
    if (gi == hi) {
      return h;
    }
    int i = gi, j = hi;
    if (g.kind == K::E1) {  // j >= 2 here
      return h.kind == K::A ? cy(j - 1) : cv(j);
    }
    if (h.kind == K::E1) {  // i >= 2
      return g.kind == K::A ? cs() : cv(k);
    }
    if (g.kind == K::A && h.kind == K::A) {
      return i < j ? cy(j - 1) : cy(j);
    }
    if (g.kind == K::A && h.kind == K::B) {
      return i < j ? cv(j) : cv(j - 1);
    }
    if (g.kind == K::B && h.kind == K::A) {
      return i < j ? cy(j) : cy(j - 1);
    }
    return i < j ? cv(j - 1) : cv(j);  // B times B
  }

  // Constant times generator.
  int p = g.index, q = h.kind == K::E1 ? 1 : h.index;
  if (g.kind == K::Cy) {
    if (h.kind == K::A) {
      if (p < q) return cy(q - 1);
      return p == q ? cy(p) : cy(q);
    }
    if (h.kind == K::B) {
      if (p < q) return cv(q);
      return p == q ? cv(p - 1) : cv(q - 1);
    }
    return p == 0 ? cv(k) : cs();  // times e_1
  }
  if (g.kind == K::Cv) {
    if (h.kind == K::A) {
      if (p < q) return cy(q);
      return p == q ? cy(p - 1) : cy(q - 1);
    }
    if (h.kind == K::B) {
      if (p < q) return cv(q - 1);
      return p == q ? cv(p) : cv(q);
    }
    return cv(k);  // times e_1
  }
  // c_s times a generator.
  if (h.kind == K::A) {
    return q == 1 ? cy(1) : cy(q - 1);
  }
  if (h.kind == K::B) {
    return q == 1 ? cv(0) : cv(q);
  }
  return cs();  // times e_1
}

Transformation ndi5(int n, CycleTailSpec const& spec) {
  auto bad = [](std::string const& what) {
    return std::invalid_argument("ndi5: " + what);
  };
  if (spec.cycle.empty()) {
    throw bad("empty cycle");
  }
  std::vector<int> listed = spec.cycle;
  listed.insert(listed.end(), spec.tail.begin(), spec.tail.end());
  if (spec.exceptional_point != 0) {
    listed.push_back(spec.exceptional_point);
  }
  for (int p : listed) {
    if (p < 1 || p > n) {
      throw bad("point out of range");
    }
  }
  std::vector<int> sorted = listed;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw bad("listed points are not pairwise distinct");
  }
  if (spec.default_to != 0) {
    bool in_tail = std::find(spec.tail.begin(), spec.tail.end(),
                             spec.default_to) != spec.tail.end();
    bool in_cycle = std::find(spec.cycle.begin(), spec.cycle.end(),
                              spec.default_to) != spec.cycle.end();
    if (!in_tail && !in_cycle) {
      throw bad("default target is not a listed point");
    }
  } else if (listed.size() != static_cast<size_t>(n)) {
    throw bad("without a default, the listed points must cover the set");
  }
  if (spec.exceptional_point != 0) {
    bool in_tail = std::find(spec.tail.begin(), spec.tail.end(),
                             spec.exceptional_to) != spec.tail.end();
    if (!in_tail || spec.exceptional_to == spec.default_to) {
      throw bad("exceptional target must be a tail point other than the "
                "default");
    }
  }

  std::vector<Point> img(n);
  for (int x = 0; x < n; ++x) {
    img[x] = static_cast<Point>(spec.default_to - 1);
  }
  for (size_t i = 0; i + 1 < spec.tail.size(); ++i) {
    img[spec.tail[i] - 1] = static_cast<Point>(spec.tail[i + 1] - 1);
  }
  if (!spec.tail.empty()) {
    img[spec.tail.back() - 1] = static_cast<Point>(spec.cycle.front() - 1);
  }
  for (size_t i = 0; i < spec.cycle.size(); ++i) {
    img[spec.cycle[i] - 1] =
        static_cast<Point>(spec.cycle[(i + 1) % spec.cycle.size()] - 1);
  }
  if (spec.exceptional_point != 0) {
    img[spec.exceptional_point - 1] =
        static_cast<Point>(spec.exceptional_to - 1);
  }
  return Transformation{img};
}

namespace {

std::pair<Transformation, Transformation> checked_pair(Transformation a,
                                                       Transformation b,
                                                       int r) {
  if (a.rank() > r || b.rank() > r || a.commutes(b)) {
    throw std::logic_error("witness pair violates its own invariants");
  }
  return {std::move(a), std::move(b)};
}

std::vector<int> iota1(int from, int to) {  // {from, ..., to}, 1-based
  std::vector<int> v;
  for (int i = from; i <= to; ++i) {
    v.push_back(i);
  }
  return v;
}

}  // namespace

std::pair<Transformation, Transformation> tdia2_witnesses(int n, int r) {
  if (n == 3 && r == 2) {
    return checked_pair(Transformation::parse("[2,1,1]"),
                        Transformation::parse("[3,1,1]"), r);
  }
  if (n < 4 || r < 2 || r >= n) {
    throw std::invalid_argument("tdia2_witnesses: need n >= 4, 2 <= r < n");
  }
  if (r == 4 && n >= 5 && n <= 7) {
    throw std::invalid_argument(
        "tdia2_witnesses: no distance-5 pair exists for r = 4, n in 5..7");
  }
  if (r == 2) {
    std::vector<int> a(n, 1), b(n, 3);
    a[0] = 2;
    a[1] = 1;
    a[2] = 2;
    a[3] = 1;
    b[0] = 3;
    b[1] = 4;
    b[2] = 4;
    b[3] = 3;
    return checked_pair(Transformation::from_one_based(a),
                        Transformation::from_one_based(b), r);
  }
  if (r == 4) {  // n >= 8
    std::vector<int> a(n, 1), b(n, 1);
    int pa[8] = {2, 3, 4, 1, 2, 3, 4, 1};
    int pb[8] = {5, 6, 7, 8, 6, 7, 8, 5};
    for (int i = 0; i < 8; ++i) {
      a[i] = pa[i];
      b[i] = pb[i];
    }
    return checked_pair(Transformation::from_one_based(a),
                        Transformation::from_one_based(b), r);
  }
  if (r % 2 == 1) {
    // r = 2m-1: interleave an m-cycle over x_1..x_m with a tail through
    // y_1..y_m, and the reversed arrangement.
    int m = (r + 1) / 2;
    auto x = [&](int i) { return i; };
    auto y = [&](int i) { return m + i; };
    CycleTailSpec sa;
    sa.cycle = iota1(x(1), x(m));
    sa.tail = iota1(y(1), y(m));
    sa.default_to = y(2);
    CycleTailSpec sb;
    sb.cycle = iota1(y(1), y(m));
    for (int i = 2; i <= m; ++i) {
      sb.tail.push_back(x(i));
    }
    sb.tail.push_back(x(1));
    sb.default_to = m >= 3 ? x(3) : x(1);
    return checked_pair(ndi5(n, sa), ndi5(n, sb), r);
  }
  if (n == 7 && r == 6) {
    // On 7 points with r = n - 1 the generic interleaved pair falls to
    // distance 4 (near-identity idempotents bridge it); this pair of
    // covering cycle-tail maps is at distance exactly 5.
    return checked_pair(Transformation::parse("[2,3,1,1,4,5,6]"),
                        Transformation::parse("[2,3,4,7,7,5,6]"), r);
  }
  // r = 2m with m >= 3: as above with an extra point z riding along.
  int m = r / 2;
  auto x = [&](int i) { return i; };
  auto y = [&](int i) { return m + i; };
  int z = 2 * m + 1;
  CycleTailSpec sa;
  sa.cycle = iota1(x(1), x(m));
  sa.tail = {z};
  for (int i = 1; i <= m; ++i) {
    sa.tail.push_back(y(i));
  }
  sa.default_to = y(2);
  CycleTailSpec sb;
  sb.cycle = iota1(y(1), y(m));
  for (int i = 2; i <= m; ++i) {
    sb.tail.push_back(x(i));
  }
  sb.tail.push_back(x(1));
  sb.default_to = x(1);
  sb.exceptional_point = z;
  sb.exceptional_to = x(3);
  return checked_pair(ndi5(n, sa), ndi5(n, sb), r);
}

std::pair<Transformation, Transformation> distance4_witnesses(int n) {
  if (n < 5 || n > 7) {
    throw std::invalid_argument("distance4_witnesses: n in 5..7 required");
  }
  // Extremal pairs of the n = 5, 6 diameter searches, the n = 6 pair
  // extended to n = 7; each is at distance exactly 4 in G(J_4).
  switch (n) {
    case 5:
      return checked_pair(Transformation::parse("[2,3,3,1,4]"),
                          Transformation::parse("[1,1,2,2,4]"), 4);
    case 6:
      return checked_pair(Transformation::parse("[3,3,4,4,3,5]"),
                          Transformation::parse("[1,1,1,2,2,5]"), 4);
    default:
      return checked_pair(Transformation::parse("[3,3,4,4,3,5,3]"),
                          Transformation::parse("[1,1,1,2,2,5,1]"), 4);
  }
}

std::pair<Transformation, Transformation> tdia3_witnesses(int n) {
  auto pair_of = [](std::vector<int> const& a, std::vector<int> const& b) {
    Transformation ta = Transformation::from_one_based(a);
    Transformation tb = Transformation::from_one_based(b);
    if (ta.commutes(tb)) {
      throw std::logic_error("witness pair commutes");
    }
    return std::pair{ta, tb};
  };
  if (n == 6) {
    return pair_of({2, 3, 4, 5, 6, 1}, {2, 3, 5, 1, 2, 4});
  }
  if (n == 8) {
    return pair_of({2, 3, 4, 5, 6, 7, 8, 1}, {2, 3, 1, 1, 4, 8, 6, 5});
  }
  auto composite = [](int v) {
    for (int d = 2; d * d <= v; ++d) {
      if (v % d == 0) {
        return true;
      }
    }
    return false;
  };
  if (n < 9 || !composite(n)) {
    throw std::invalid_argument(
        "tdia3_witnesses: n must be 6, 8, or a composite >= 9");
  }
  if (n % 2 == 1) {
    int m = (n - 1) / 2;
    auto x = [&](int i) { return i; };
    auto y = [&](int i) { return m + i; };
    int z = 2 * m + 1;
    CycleTailSpec sa;
    sa.cycle = iota1(x(1), x(m));
    sa.tail = {z};
    for (int i = 1; i <= m; ++i) {
      sa.tail.push_back(y(i));
    }
    CycleTailSpec sb;
    // Cycle rotated to start at the chain's entry point y_2.
    for (int i = 2; i <= m; ++i) {
      sb.cycle.push_back(y(i));
    }
    sb.cycle.push_back(y(1));
    for (int i = 2; i <= m; ++i) {
      sb.tail.push_back(x(i));
    }
    sb.tail.push_back(x(1));
    sb.tail.push_back(z);
    auto a = ndi5(n, sa), b = ndi5(n, sb);
    if (a.commutes(b)) {
      throw std::logic_error("witness pair commutes");
    }
    return {a, b};
  }
  int m = (n - 2) / 2;
  auto x = [&](int i) { return i; };
  auto y = [&](int i) { return m + i; };
  int z = 2 * m + 1, w = 2 * m + 2;
  CycleTailSpec sa;
  for (int i = 2; i <= m; ++i) {
    sa.cycle.push_back(x(i));
  }
  sa.cycle.push_back(x(1));
  sa.tail = {z};
  for (int i = 1; i <= m; ++i) {
    sa.tail.push_back(y(i));
  }
  sa.tail.push_back(w);
  CycleTailSpec sb;
  for (int i = 2; i <= m; ++i) {
    sb.cycle.push_back(y(i));
  }
  sb.cycle.push_back(y(1));
  // z enters at the head of the chain so that the listed points cover
  // the set (the chain body and the blocks near the cycle are unchanged).
  sb.tail = {z, w};
  for (int i = 2; i <= m - 2; ++i) {
    sb.tail.push_back(x(i));
  }
  sb.tail.push_back(x(m));
  sb.tail.push_back(x(1));
  sb.tail.push_back(x(m - 1));
  auto a = ndi5(n, sa), b = ndi5(n, sb);
  if (a.commutes(b)) {
    throw std::logic_error("witness pair commutes");
  }
  return {a, b};
}

std::pair<IdempotentForm, IdempotentForm> lja2_configuration(
    int n, int r, InterleavedVariant variant) {
  if (n < 4 || r < 2 || r >= n || (n == 5 && r == 4)) {
    throw std::invalid_argument(
        "lja2_configuration: need n >= 4, 2 <= r < n, (n,r) != (5,4)");
  }
  auto x = [](int i) { return static_cast<Point>(i - 1); };
  std::vector<std::pair<std::vector<Point>, Point>> ep, fp;
  if (variant == InterleavedVariant::A) {
    int m = r / 2 + 1;  // least m with r < 2m; needs m <= r and 2m <= n
    if (m > r || 2 * m > n) {
      throw std::invalid_argument(
          "lja2_configuration: no m with m <= r < 2m <= n");
    }
    auto y = [&](int i) { return static_cast<Point>(m + i - 1); };
    for (int i = 1; i <= m; ++i) {
      std::vector<Point> ai = {x(i), y(i)};
      std::vector<Point> bi = {y(i), x(i % m + 1)};
      if (i == 1) {  // leftover points ride in the first blocks
        for (int p = 2 * m + 1; p <= n; ++p) {
          ai.push_back(x(p));
          bi.push_back(x(p));
        }
      }
      ep.emplace_back(std::move(ai), x(i));
      fp.emplace_back(std::move(bi), y(i));
    }
  } else {
    if (r != n - 1 || n % 2 == 0 || n < 7) {
      throw std::invalid_argument(
          "lja2_configuration: variant B needs r = n-1 with n odd, n >= 7");
    }
    int m = (n - 1) / 2;
    auto y = [&](int i) { return static_cast<Point>(m + i - 1); };
    Point z = static_cast<Point>(n - 1);
    for (int i = 1; i <= m; ++i) {
      std::vector<Point> ai = {x(i), y(i)};
      std::vector<Point> bi = {y(i), x(i % m + 1)};
      if (i == m) {
        ai.push_back(z);
      }
      if (i == 1) {
        bi.push_back(z);
      }
      ep.emplace_back(std::move(ai), x(i));
      fp.emplace_back(std::move(bi), y(i));
    }
  }
  IdempotentForm e(std::move(ep), n), f(std::move(fp), n);
  if (e.to_transformation().rank() > r || f.to_transformation().rank() > r) {
    throw std::logic_error("lja2_configuration: rank escaped the ideal");
  }
  return {std::move(e), std::move(f)};
}

std::vector<std::string> small_semigroup_names() {
  return {"teve4", "tald4", "zeroband3"};
}

FiniteSemigroup small_semigroup(std::string const& name) {
  CayleyTable t;
  auto row = [&](std::vector<uint32_t> r) { t.table.push_back(std::move(r)); };
  if (name == "teve4") {
    t.names = {"a", "b", "c", "d"};
    row({0, 1, 2, 3});
    row({1, 1, 1, 1});
    row({0, 1, 2, 3});
    row({3, 3, 3, 3});
  } else if (name == "tald4") {
    t.names = {"a", "b", "c", "d"};
    row({0, 0, 0, 0});
    row({0, 1, 2, 2});
    row({2, 2, 2, 2});
    row({2, 3, 2, 2});
  } else if (name == "zeroband3") {
    t.names = {"e", "f", "0"};
    row({0, 1, 2});
    row({0, 1, 2});
    row({2, 2, 2});
  } else {
    throw std::invalid_argument("unknown catalog semigroup: " + name);
  }
  return FiniteSemigroup::from_table(std::move(t));
}

}  // namespace commsemi
