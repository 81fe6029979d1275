#include "commsemi/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace commsemi {

namespace {

// Lexicographic enumeration of all maps on n points, filtered by rank.
std::vector<Transformation> enumerate_maps(int n, int max_rank) {
  if (n < 1 || n > 7) {
    throw std::invalid_argument(
        "materialized universes are limited to 1 <= n <= 7");
  }
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= n;
  }
  std::vector<Transformation> out;
  std::vector<Point> img(n, 0);
  for (uint64_t v = 0; v < total; ++v) {
    uint64_t x = v;
    for (int i = n - 1; i >= 0; --i) {
      img[i] = static_cast<Point>(x % n);
      x /= n;
    }
    Transformation t(img);
    if (t.rank() <= max_rank) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

uint64_t count_rank_k(int n, int k) {
  // Stirling numbers of the second kind.
  std::vector<std::vector<uint64_t>> s(n + 1, std::vector<uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    }
  }
  uint64_t binom = 1;
  for (int i = 0; i < k; ++i) {
    binom = binom * (n - i) / (i + 1);
  }
  uint64_t fact = 1;
  for (int i = 2; i <= k; ++i) {
    fact *= i;
  }
  return binom * fact * s[n][k];
}

void FiniteSemigroup::index_elements() {
  packed_index_.reserve(elems_.size() * 2);
  for (uint32_t i = 0; i < elems_.size(); ++i) {
    TransformationHash h;
    packed_index_.emplace(h(elems_[i]), i);
  }
}

FiniteSemigroup FiniteSemigroup::full(int n) {
  FiniteSemigroup s;
  s.backend_ = Backend::FullTn;
  s.n_ = n;
  s.r_ = n;
  s.elems_ = enumerate_maps(n, n);
  s.size_ = s.elems_.size();
  return s;
}

FiniteSemigroup FiniteSemigroup::ideal(int n, int r) {
  if (r < 1 || r > n) {
    throw std::invalid_argument("ideal rank r must satisfy 1 <= r <= n");
  }
  FiniteSemigroup s;
  s.backend_ = (r == n) ? Backend::FullTn : Backend::Ideal;
  s.n_ = n;
  s.r_ = r;
  s.elems_ = enumerate_maps(n, r);
  s.size_ = s.elems_.size();
  if (s.backend_ == Backend::Ideal) {
    s.index_elements();
  }
  return s;
}

FiniteSemigroup FiniteSemigroup::closure(
    int n, std::vector<Transformation> const& generators, size_t max_size) {
  if (generators.empty()) {
    throw std::invalid_argument("closure of an empty generator list");
  }
  for (auto const& g : generators) {
    if (g.degree() != n) {
      throw std::invalid_argument("generator degree mismatch");
    }
  }
  FiniteSemigroup s;
  s.backend_ = Backend::Generated;
  s.n_ = n;
  s.r_ = n;

  std::unordered_map<Transformation, uint32_t, TransformationHash> index;
  std::vector<Transformation>& elems = s.elems_;
  for (auto const& g : generators) {
    if (index.emplace(g, static_cast<uint32_t>(elems.size())).second) {
      elems.push_back(g);
    }
  }
  // Frontier passes: products frontier x all and all x frontier, in
  // index order, until closed.
  size_t frontier_begin = 0;
  while (frontier_begin < elems.size()) {
    size_t frontier_end = elems.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (size_t j = 0; j < frontier_end; ++j) {
        for (Transformation const& p :
             {elems[i] * elems[j], elems[j] * elems[i]}) {
          if (index.emplace(p, static_cast<uint32_t>(elems.size())).second) {
            elems.push_back(p);
            if (elems.size() > max_size) {
              throw std::runtime_error("closure exceeded size guard");
            }
          }
        }
      }
    }
    frontier_begin = frontier_end;
  }
  s.size_ = elems.size();
  s.index_elements();
  if (s.size_ <= 4096) {
    s.table_.resize(s.size_ * s.size_);
    for (uint32_t i = 0; i < s.size_; ++i) {
      for (uint32_t j = 0; j < s.size_; ++j) {
        s.table_[i * s.size_ + j] = index.at(elems[i] * elems[j]);
      }
    }
  }
  return s;
}

FiniteSemigroup FiniteSemigroup::from_table(CayleyTable t) {
  if (auto bad = associativity_counterexample(t)) {
    auto [i, j, k] = *bad;
    throw std::invalid_argument("table is not associative: (" + t.names[i] +
                                "*" + t.names[j] + ")*" + t.names[k] +
                                " != " + t.names[i] + "*(" + t.names[j] + "*" +
                                t.names[k] + ")");
  }
  FiniteSemigroup s;
  s.backend_ = Backend::Table;
  s.size_ = t.size();
  s.labels_ = t.names;
  s.table_.resize(s.size_ * s.size_);
  for (size_t i = 0; i < s.size_; ++i) {
    for (size_t j = 0; j < s.size_; ++j) {
      s.table_[i * s.size_ + j] = t.table[i][j];
    }
  }
  for (uint32_t i = 0; i < s.size_; ++i) {
    s.name_index_.emplace(s.labels_[i], i);
  }
  return s;
}

uint32_t FiniteSemigroup::mul(uint32_t i, uint32_t j) const {
  if (i >= size_ || j >= size_) {
    throw std::out_of_range("element index out of range");
  }
  if (!table_.empty()) {
    return table_[i * size_ + j];
  }
  Transformation p = elems_[i] * elems_[j];
  if (backend_ == Backend::FullTn) {
    uint64_t v = 0;
    for (Point x : p.img()) {
      v = v * n_ + x;
    }
    return static_cast<uint32_t>(v);
  }
  auto idx = index_of(p);
  if (!idx) {
    throw std::logic_error("product escaped the declared universe");
  }
  return *idx;
}

Transformation const& FiniteSemigroup::element(uint32_t i) const {
  if (!is_transformational()) {
    throw std::logic_error("table backend has no transformation elements");
  }
  return elems_.at(i);
}

std::optional<uint32_t> FiniteSemigroup::index_of(
    Transformation const& t) const {
  if (!is_transformational() || t.degree() != n_) {
    return std::nullopt;
  }
  if (backend_ == Backend::FullTn) {
    uint64_t v = 0;
    for (Point x : t.img()) {
      v = v * n_ + x;
    }
    return static_cast<uint32_t>(v);
  }
  TransformationHash h;
  auto range = packed_index_.equal_range(h(t));
  for (auto it = range.first; it != range.second; ++it) {
    if (elems_[it->second] == t) {
      return it->second;
    }
  }
  return std::nullopt;
}

std::optional<uint32_t> FiniteSemigroup::index_of_label(
    std::string const& label) const {
  auto it = name_index_.find(label);
  if (it != name_index_.end()) {
    return it->second;
  }
  if (!labels_.empty()) {
    for (uint32_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) {
        return i;
      }
    }
  }
  if (is_transformational()) {
    try {
      return index_of(Transformation::parse(label));
    } catch (std::invalid_argument const&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string FiniteSemigroup::label(uint32_t i) const {
  if (!labels_.empty()) {
    return labels_.at(i);
  }
  return elems_.at(i).to_string();
}

void FiniteSemigroup::set_labels(std::vector<std::string> labels) {
  if (labels.size() != size_) {
    throw std::invalid_argument("label count mismatch");
  }
  labels_ = std::move(labels);
}

bool FiniteSemigroup::is_idempotent_element(uint32_t i) const {
  if (is_transformational()) {
    return elems_[i].is_idempotent();
  }
  return mul(i, i) == i;
}

uint32_t FiniteSemigroup::idempotent_power_of(uint32_t i) const {
  if (is_transformational()) {
    auto idx = index_of(elems_[i].idempotent_power());
    if (!idx) {
      throw std::logic_error("idempotent power escaped the universe");
    }
    return *idx;
  }
  uint32_t p = i;
  for (size_t steps = 0; steps <= size_; ++steps) {
    if (mul(p, p) == p) {
      return p;
    }
    p = mul(p, i);
  }
  throw std::logic_error("no idempotent power found");
}

std::vector<uint32_t> FiniteSemigroup::center() const {
  std::vector<uint32_t> z;
  bool raw = is_transformational();
  for (uint32_t i = 0; i < size_; ++i) {
    bool central = true;
    for (uint32_t j = 0; j < size_; ++j) {
      bool c = raw ? commutes_raw(elems_[i].data(), elems_[j].data(), n_)
                   : mul(i, j) == mul(j, i);
      if (!c) {
        central = false;
        break;
      }
    }
    if (central) {
      z.push_back(i);
    }
  }
  return z;
}

bool FiniteSemigroup::is_band() const {
  for (uint32_t i = 0; i < size_; ++i) {
    if (!is_idempotent_element(i)) {
      return false;
    }
  }
  return true;
}

bool FiniteSemigroup::is_commutative() const {
  bool raw = is_transformational();
  for (uint32_t i = 0; i < size_; ++i) {
    for (uint32_t j = i + 1; j < size_; ++j) {
      bool c = raw ? commutes_raw(elems_[i].data(), elems_[j].data(), n_)
                   : mul(i, j) == mul(j, i);
      if (!c) {
        return false;
      }
    }
  }
  return true;
}

CayleyTable FiniteSemigroup::cayley_table() const {
  if (size_ > 10000) {
    throw std::runtime_error("cayley_table size guard exceeded (|S| > 10^4)");
  }
  CayleyTable t;
  t.names.reserve(size_);
  for (uint32_t i = 0; i < size_; ++i) {
    t.names.push_back(label(i));
  }
  t.table.assign(size_, std::vector<uint32_t>(size_));
  for (uint32_t i = 0; i < size_; ++i) {
    for (uint32_t j = 0; j < size_; ++j) {
      t.table[i][j] = mul(i, j);
    }
  }
  return t;
}

std::optional<std::array<uint32_t, 3>> associativity_counterexample(
    CayleyTable const& t) {
  uint32_t k = static_cast<uint32_t>(t.size());
  for (uint32_t i = 0; i < k; ++i) {
    for (uint32_t j = 0; j < k; ++j) {
      for (uint32_t l = 0; l < k; ++l) {
        if (t.table[t.table[i][j]][l] != t.table[i][t.table[j][l]]) {
          return std::array<uint32_t, 3>{i, j, l};
        }
      }
    }
  }
  return std::nullopt;
}

std::string CayleyTable::to_json() const {
  nlohmann::json j;
  j["elements"] = names;
  j["table"] = table;
  return j.dump(2);
}

CayleyTable CayleyTable::from_json(std::string const& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (nlohmann::json::parse_error const& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("elements") || !j.contains("table")) {
    throw std::invalid_argument("expected keys \"elements\" and \"table\"");
  }
  CayleyTable t;
  t.names = j["elements"].get<std::vector<std::string>>();
  t.table = j["table"].get<std::vector<std::vector<uint32_t>>>();
  size_t k = t.names.size();
  if (k == 0 || t.table.size() != k) {
    throw std::invalid_argument("table shape mismatch");
  }
  for (auto const& row : t.table) {
    if (row.size() != k) {
      throw std::invalid_argument("table shape mismatch");
    }
    for (uint32_t v : row) {
      if (v >= k) {
        throw std::invalid_argument("table entry out of range");
      }
    }
  }
  return t;
}

}  // namespace commsemi
