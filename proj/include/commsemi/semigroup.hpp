// Finite-semigroup abstraction over four backends: the full
// transformation semigroup T(n), its ideals J_r, generated (closure)
// subsemigroups of T(n), and abstract Cayley tables.

#ifndef COMMSEMI_SEMIGROUP_HPP
#define COMMSEMI_SEMIGROUP_HPP

#include <array>
#include <memory>
#include <optional>
#include <unordered_map>

#include "commsemi/transform.hpp"

namespace commsemi {

struct CayleyTable {
  std::vector<std::string> names;
  std::vector<std::vector<uint32_t>> table;  // table[i][j] = index of product

  size_t size() const { return names.size(); }

  std::string to_json() const;
  // Validates shape and associativity; throws std::invalid_argument.
  static CayleyTable from_json(std::string const& json_text);
};

// Returns the first failing triple (i,j,k) in scan order, with
// (i*j)*k != i*(j*k), or nullopt if the table is associative.
std::optional<std::array<uint32_t, 3>> associativity_counterexample(
    CayleyTable const& t);

class FiniteSemigroup {
 public:
  enum class Backend { FullTn, Ideal, Generated, Table };

  // T(n), all n^n maps in lexicographic order. Materialized; n <= 7.
  static FiniteSemigroup full(int n);

  // J_r = transformations of rank <= r, lexicographic order; n <= 7.
  static FiniteSemigroup ideal(int n, int r);

  // Breadth-first closure of the generators, in deterministic discovery
  // order (generators first, in the given order).
  static FiniteSemigroup closure(int n,
                                 std::vector<Transformation> const& generators,
                                 size_t max_size = 1000000);

  // Validates associativity on ingest; throws with the counterexample.
  static FiniteSemigroup from_table(CayleyTable t);

  Backend backend() const { return backend_; }
  size_t size() const { return size_; }
  int degree() const { return n_; }  // 0 for table backends
  int ideal_rank() const { return r_; }

  uint32_t mul(uint32_t i, uint32_t j) const;

  bool is_transformational() const { return backend_ != Backend::Table; }

  Transformation const& element(uint32_t i) const;
  std::vector<Transformation> const& elements() const { return elems_; }

  std::optional<uint32_t> index_of(Transformation const& t) const;
  std::optional<uint32_t> index_of_label(std::string const& label) const;

  std::string label(uint32_t i) const;
  void set_labels(std::vector<std::string> labels);

  bool is_idempotent_element(uint32_t i) const;

  // Least idempotent power of element i, as an element index.
  uint32_t idempotent_power_of(uint32_t i) const;

  // Exact center Z(S) = {a : ab = ba for all b}, by scan.
  std::vector<uint32_t> center() const;

  bool is_band() const;
  bool is_commutative() const;

  // Materializes the full table; |S| <= 10^4.
  CayleyTable cayley_table() const;

 private:
  FiniteSemigroup() = default;
  void index_elements();

  Backend backend_ = Backend::Table;
  int n_ = 0;
  int r_ = 0;
  size_t size_ = 0;
  std::vector<Transformation> elems_;
  std::vector<std::string> labels_;  // optional custom labels
  std::vector<uint32_t> table_;      // flat, Table backend and small closures
  std::unordered_multimap<uint64_t, uint32_t> packed_index_;
  std::unordered_map<std::string, uint32_t> name_index_;
};

// Number of maps of rank exactly k on n points: C(n,k) * k! * S(n,k).
uint64_t count_rank_k(int n, int k);

}  // namespace commsemi

#endif
