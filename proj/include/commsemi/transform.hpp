// Core arithmetic for total transformations on a finite point set.
//
// Points are 1-based in all I/O and printed forms; internally they are
// 0-based. Transformations are immutable value objects with structural
// equality and a total (lexicographic) order.

#ifndef COMMSEMI_TRANSFORM_HPP
#define COMMSEMI_TRANSFORM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace commsemi {

using Point = uint8_t;  // 0-based internal point

class KernelPartition;
class IdempotentForm;
class CycleSet;

class Transformation {
 public:
  Transformation() = default;

  // img is 0-based: img[i] is the image of point i.
  explicit Transformation(std::vector<Point> img);

  // entries 1-based, as written in transformation literals.
  static Transformation from_one_based(std::vector<int> const& img);

  static Transformation identity(int n);
  static Transformation constant(int n, int x_one_based);

  // Parses a literal like "[2,1,1]"; throws std::invalid_argument on
  // malformed input or out-of-range entries.
  static Transformation parse(std::string const& literal);

  int degree() const { return static_cast<int>(img_.size()); }

  Point operator[](size_t i) const { return img_[i]; }
  std::vector<Point> const& img() const { return img_; }
  uint8_t const* data() const { return img_.data(); }

  // Left-to-right composition: x(ab) = (xa)b, with *this = a.
  Transformation operator*(Transformation const& other) const;

  int rank() const;
  std::vector<Point> image() const;  // sorted, 0-based
  KernelPartition kernel() const;

  bool is_idempotent() const;
  bool is_permutation() const { return rank() == degree(); }
  bool is_constant() const { return rank() == 1; }

  // a^p for the least p >= 1 with a^p idempotent.
  Transformation idempotent_power() const;

  Transformation power(uint64_t p) const;  // p >= 1

  bool commutes(Transformation const& other) const;

  CycleSet cycles() const;
  std::optional<std::vector<Point>> unique_cycle() const;

  // Mixed-radix packing over img; requires degree() <= 12.
  uint64_t pack() const;

  std::string to_string() const;  // "[2,1,1]", 1-based

  bool operator==(Transformation const& o) const { return img_ == o.img_; }
  auto operator<=>(Transformation const& o) const {
    return img_ <=> o.img_;
  }

 private:
  std::vector<Point> img_;
};

// The partition of {1..n} induced by equal function values. Blocks are
// sorted internally and ordered by minimum element.
class KernelPartition {
 public:
  explicit KernelPartition(std::vector<std::vector<Point>> blocks, int n);

  std::vector<std::vector<Point>> const& blocks() const { return blocks_; }
  size_t num_blocks() const { return blocks_.size(); }
  int degree() const { return n_; }

  // 0-based block lookup: which block contains point x.
  size_t block_of(Point x) const { return block_of_[x]; }

  bool operator==(KernelPartition const& o) const = default;

  std::string to_string() const;  // "{1}{2,3}", 1-based

 private:
  std::vector<std::vector<Point>> blocks_;
  std::vector<uint32_t> block_of_;
  int n_ = 0;
};

// The block/representative decomposition (A1,x1>(A2,x2>...(Ak,xk> of an
// idempotent: blocks partition the point set and each rep lies in its
// block. Pairs are sorted by representative.
class IdempotentForm {
 public:
  // Throws std::invalid_argument if e is not idempotent.
  static IdempotentForm of(Transformation const& e);

  // Constructs from explicit (block, rep) pairs; validates that they
  // define an idempotent.
  IdempotentForm(std::vector<std::pair<std::vector<Point>, Point>> pairs,
                 int n);

  std::vector<std::pair<std::vector<Point>, Point>> const& pairs() const {
    return pairs_;
  }
  int degree() const { return n_; }

  Transformation to_transformation() const;

  // Lemma-style commuting test on the form: b commutes iff every block
  // maps rep-to-rep with the block carried along. Agrees with the direct
  // composition test on all inputs.
  bool commutes_with(Transformation const& b) const;

  bool operator==(IdempotentForm const& o) const = default;

  std::string to_string() const;  // "({1},1>({2,3},2>", 1-based

 private:
  std::vector<std::pair<std::vector<Point>, Point>> pairs_;
  int n_ = 0;
};

// The cycles of a transformation restricted to its periodic points. Each
// cycle is rotated so its minimum point comes first; cycles are ordered
// by minimum point.
class CycleSet {
 public:
  explicit CycleSet(std::vector<std::vector<Point>> cycles);

  std::vector<std::vector<Point>> const& cycles() const { return cycles_; }
  size_t size() const { return cycles_.size(); }

  bool operator==(CycleSet const& o) const = default;

  std::string to_string() const;  // "(1 2)(3 4)", 1-based

 private:
  std::vector<std::vector<Point>> cycles_;
};

// Raw-pointer commuting test used in hot scans: images a, b of length n.
inline bool commutes_raw(uint8_t const* a, uint8_t const* b, int n) {
  for (int x = 0; x < n; ++x) {
    if (b[a[x]] != a[b[x]]) {
      return false;
    }
  }
  return true;
}

struct TransformationHash {
  size_t operator()(Transformation const& t) const {
    // FNV-1a over the image bytes.
    uint64_t h = 1469598103934665603ull;
    for (Point p : t.img()) {
      h = (h ^ p) * 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace commsemi

#endif
