#include "commsemi/transform.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace commsemi {

Transformation::Transformation(std::vector<Point> img) : img_(std::move(img)) {
  if (img_.empty()) {
    throw std::invalid_argument("transformation must have degree >= 1");
  }
  int n = degree();
  for (Point p : img_) {
    if (p >= n) {
      throw std::invalid_argument("image entry out of range");
    }
  }
}

Transformation Transformation::from_one_based(std::vector<int> const& img) {
  std::vector<Point> v;
  v.reserve(img.size());
  int n = static_cast<int>(img.size());
  for (int x : img) {
    if (x < 1 || x > n) {
      throw std::invalid_argument("image entry out of range");
    }
    v.push_back(static_cast<Point>(x - 1));
  }
  return Transformation(std::move(v));
}

Transformation Transformation::identity(int n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point(0));
  return Transformation(std::move(v));
}

Transformation Transformation::constant(int n, int x_one_based) {
  if (x_one_based < 1 || x_one_based > n) {
    throw std::invalid_argument("constant value out of range");
  }
  return Transformation(
      std::vector<Point>(n, static_cast<Point>(x_one_based - 1)));
}

Transformation Transformation::parse(std::string const& literal) {
  std::string s = literal;
  if (s.size() < 3 || s.front() != '[' || s.back() != ']') {
    throw std::invalid_argument("expected literal of the form [2,1,1]");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<int> entries;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) {
      ++pos;
    }
    if (pos != tok.size()) {
      throw std::invalid_argument("bad entry in transformation literal");
    }
    entries.push_back(v);
  }
  if (entries.empty()) {
    throw std::invalid_argument("empty transformation literal");
  }
  return from_one_based(entries);
}

Transformation Transformation::operator*(Transformation const& other) const {
  if (degree() != other.degree()) {
    throw std::invalid_argument("degree mismatch in composition");
  }
  std::vector<Point> v(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) {
    v[x] = other.img_[img_[x]];
  }
  return Transformation(std::move(v));
}

int Transformation::rank() const {
  if (degree() <= 64) {
    uint64_t seen = 0;
    for (Point p : img_) {
      seen |= uint64_t(1) << p;
    }
    return __builtin_popcountll(seen);
  }
  std::vector<bool> b(degree(), false);
  int r = 0;
  for (Point p : img_) {
    if (!b[p]) {
      b[p] = true;
      ++r;
    }
  }
  return r;
}

std::vector<Point> Transformation::image() const {
  std::vector<Point> v(img_);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

KernelPartition Transformation::kernel() const {
  std::map<Point, std::vector<Point>> by_value;
  for (int x = 0; x < degree(); ++x) {
    by_value[img_[x]].push_back(static_cast<Point>(x));
  }
  std::vector<std::vector<Point>> blocks;
  blocks.reserve(by_value.size());
  for (auto& [v, blk] : by_value) {
    blocks.push_back(std::move(blk));
  }
  return KernelPartition(std::move(blocks), degree());
}

bool Transformation::is_idempotent() const {
  for (size_t x = 0; x < img_.size(); ++x) {
    if (img_[img_[x]] != img_[x]) {
      return false;
    }
  }
  return true;
}

Transformation Transformation::power(uint64_t p) const {
  Transformation result = *this;
  Transformation base = *this;
  --p;
  while (p > 0) {
    if (p & 1) {
      result = result * base;
    }
    base = base * base;
    p >>= 1;
  }
  return result;
}

Transformation Transformation::idempotent_power() const {
  // a^p is idempotent iff p >= index(a) and period(a) divides p, where
  // the index is the longest tail length of the functional graph and the
  // period is the lcm of the cycle lengths.
  int n = degree();
  std::vector<int> tail(n, -1);
  // Periodic points: those still in the image of a^n.
  Transformation an = power(std::max(n, 1));
  std::vector<bool> periodic(n, false);
  for (Point p : an.img_) {
    periodic[p] = true;
  }
  uint64_t period = 1;
  std::vector<bool> visited(n, false);
  for (int x = 0; x < n; ++x) {
    if (periodic[x] && !visited[x]) {
      uint64_t len = 0;
      int y = x;
      do {
        visited[y] = true;
        y = img_[y];
        ++len;
      } while (y != x);
      period = std::lcm(period, len);
    }
  }
  uint64_t index = 0;
  for (int x = 0; x < n; ++x) {
    uint64_t steps = 0;
    int y = x;
    while (!periodic[y]) {
      y = img_[y];
      ++steps;
    }
    index = std::max(index, steps);
  }
  uint64_t p = std::max<uint64_t>(index, 1);
  p = ((p + period - 1) / period) * period;
  return power(p);
}

bool Transformation::commutes(Transformation const& other) const {
  if (degree() != other.degree()) {
    throw std::invalid_argument("degree mismatch in commuting test");
  }
  return commutes_raw(img_.data(), other.img_.data(), degree());
}

CycleSet Transformation::cycles() const {
  int n = degree();
  Transformation an = power(std::max(n, 1));
  std::vector<bool> periodic(n, false);
  for (Point p : an.img_) {
    periodic[p] = true;
  }
  std::vector<bool> visited(n, false);
  std::vector<std::vector<Point>> cycles;
  for (int x = 0; x < n; ++x) {
    if (periodic[x] && !visited[x]) {
      std::vector<Point> cyc;
      int y = x;
      do {
        visited[y] = true;
        cyc.push_back(static_cast<Point>(y));
        y = img_[y];
      } while (y != x);
      cycles.push_back(std::move(cyc));
    }
  }
  return CycleSet(std::move(cycles));
}

std::optional<std::vector<Point>> Transformation::unique_cycle() const {
  CycleSet cs = cycles();
  if (cs.size() != 1) {
    return std::nullopt;
  }
  return cs.cycles()[0];
}

uint64_t Transformation::pack() const {
  if (degree() > 12) {
    throw std::invalid_argument("pack() requires degree <= 12");
  }
  uint64_t v = 0;
  for (Point p : img_) {
    v = v * degree() + p;
  }
  return v;
}

std::string Transformation::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i > 0) {
      s += ',';
    }
    s += std::to_string(img_[i] + 1);
  }
  s += ']';
  return s;
}

KernelPartition::KernelPartition(std::vector<std::vector<Point>> blocks, int n)
    : blocks_(std::move(blocks)), block_of_(n, UINT32_MAX), n_(n) {
  for (auto& blk : blocks_) {
    if (blk.empty()) {
      throw std::invalid_argument("empty kernel block");
    }
    std::sort(blk.begin(), blk.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](auto const& a, auto const& b) { return a[0] < b[0]; });
  size_t covered = 0;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    for (Point x : blocks_[i]) {
      if (x >= n_ || block_of_[x] != UINT32_MAX) {
        throw std::invalid_argument("kernel blocks do not partition the set");
      }
      block_of_[x] = static_cast<uint32_t>(i);
      ++covered;
    }
  }
  if (covered != static_cast<size_t>(n_)) {
    throw std::invalid_argument("kernel blocks do not cover the set");
  }
}

std::string KernelPartition::to_string() const {
  std::string s;
  for (auto const& blk : blocks_) {
    s += '{';
    for (size_t i = 0; i < blk.size(); ++i) {
      if (i > 0) {
        s += ',';
      }
      s += std::to_string(blk[i] + 1);
    }
    s += '}';
  }
  return s;
}

IdempotentForm::IdempotentForm(
    std::vector<std::pair<std::vector<Point>, Point>> pairs, int n)
    : pairs_(std::move(pairs)), n_(n) {
  for (auto& [blk, rep] : pairs_) {
    std::sort(blk.begin(), blk.end());
    if (std::find(blk.begin(), blk.end(), rep) == blk.end()) {
      throw std::invalid_argument("representative not in its block");
    }
  }
  std::sort(pairs_.begin(), pairs_.end(),
            [](auto const& a, auto const& b) { return a.second < b.second; });
  std::vector<bool> seen(n_, false);
  size_t covered = 0;
  for (size_t i = 0; i + 1 < pairs_.size(); ++i) {
    if (pairs_[i].second == pairs_[i + 1].second) {
      throw std::invalid_argument("duplicate representative");
    }
  }
  for (auto const& [blk, rep] : pairs_) {
    for (Point x : blk) {
      if (x >= n_ || seen[x]) {
        throw std::invalid_argument("blocks do not partition the set");
      }
      seen[x] = true;
      ++covered;
    }
  }
  if (covered != static_cast<size_t>(n_)) {
    throw std::invalid_argument("blocks do not cover the set");
  }
}

IdempotentForm IdempotentForm::of(Transformation const& e) {
  if (!e.is_idempotent()) {
    throw std::invalid_argument("idempotent form of a non-idempotent");
  }
  std::map<Point, std::vector<Point>> by_rep;
  for (int x = 0; x < e.degree(); ++x) {
    by_rep[e[x]].push_back(static_cast<Point>(x));
  }
  std::vector<std::pair<std::vector<Point>, Point>> pairs;
  pairs.reserve(by_rep.size());
  for (auto& [rep, blk] : by_rep) {
    pairs.emplace_back(std::move(blk), rep);
  }
  return IdempotentForm(std::move(pairs), e.degree());
}

Transformation IdempotentForm::to_transformation() const {
  std::vector<Point> img(n_);
  for (auto const& [blk, rep] : pairs_) {
    for (Point x : blk) {
      img[x] = rep;
    }
  }
  return Transformation(std::move(img));
}

bool IdempotentForm::commutes_with(Transformation const& b) const {
  if (b.degree() != n_) {
    throw std::invalid_argument("degree mismatch");
  }
  // Block index of every point.
  std::vector<uint32_t> block_of(n_);
  for (size_t i = 0; i < pairs_.size(); ++i) {
    for (Point x : pairs_[i].first) {
      block_of[x] = static_cast<uint32_t>(i);
    }
  }
  for (auto const& [blk, rep] : pairs_) {
    Point rb = b[rep];
    // xi b must be some representative xj...
    uint32_t j = block_of[rb];
    if (pairs_[j].second != rb) {
      return false;
    }
    for (Point x : blk) {
      if (block_of[b[x]] != j) {
        return false;
      }
    }
  }
  return true;
}

std::string IdempotentForm::to_string() const {
  std::string s;
  for (auto const& [blk, rep] : pairs_) {
    s += "({";
    for (size_t i = 0; i < blk.size(); ++i) {
      if (i > 0) {
        s += ',';
      }
      s += std::to_string(blk[i] + 1);
    }
    s += "},";
    s += std::to_string(rep + 1);
    s += '>';
  }
  return s;
}

CycleSet::CycleSet(std::vector<std::vector<Point>> cycles)
    : cycles_(std::move(cycles)) {
  for (auto& cyc : cycles_) {
    if (cyc.empty()) {
      throw std::invalid_argument("empty cycle");
    }
    auto min_it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), min_it, cyc.end());
  }
  std::sort(cycles_.begin(), cycles_.end(),
            [](auto const& a, auto const& b) { return a[0] < b[0]; });
}

std::string CycleSet::to_string() const {
  std::string s;
  for (auto const& cyc : cycles_) {
    s += '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) {
        s += ' ';
      }
      s += std::to_string(cyc[i] + 1);
    }
    s += ')';
  }
  return s;
}

}  // namespace commsemi
