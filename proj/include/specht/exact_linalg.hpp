#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace specht {

using Int = mpz_class;
using IntVec = std::vector<Int>;
using Dense = std::vector<IntVec>;

struct ContainmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse integer matrix; rows are kept as column-sorted (col, value) lists
// with zeros dropped.
class IntMatrix {
 public:
  using Entry = std::pair<std::size_t, Int>;
  using Row = std::vector<Entry>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_dense(const Dense& rows, std::size_t cols);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  Int get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Int& v);
  void add(std::size_t r, std::size_t c, const Int& v);

  const Row& row(std::size_t r) const { return data_[r]; }
  // Replaces a row wholesale; entries must be sorted and in range.
  void set_row(std::size_t r, Row row);

  Dense to_dense() const;
  IntVec column(std::size_t c) const;
  std::vector<IntVec> columns() const;
  IntMatrix transpose() const;

  IntVec operator*(const IntVec& x) const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const;
  bool is_zero() const;

  nlohmann::json to_json() const;
  static IntMatrix from_json(const nlohmann::json& j);

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

// Lattice in Z^ambient. The stored basis is a list of linearly independent
// vectors; the canonical form (row-echelon HNF of the basis, i.e. the
// transposed column HNF) is computed on first use and drives equality,
// membership and index computations.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient);

  static Lattice from_generators(std::size_t ambient, const std::vector<IntVec>& gens);
  // Caller guarantees independence; the HNF is deferred until needed.
  static Lattice from_independent(std::size_t ambient, std::vector<IntVec> basis);
  static Lattice from_columns(const IntMatrix& generators);
  static Lattice full(std::size_t ambient);
  static Lattice scaled_full(std::size_t ambient, const Int& m);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVec>& basis_vectors() const { return basis_; }
  IntMatrix basis() const;
  const Dense& hnf_rows() const;
  const std::vector<std::size_t>& pivots() const;

  bool contains(const IntVec& v) const;
  bool contains(const Lattice& other) const;
  // Coordinates with respect to hnf_rows().
  std::optional<IntVec> coordinates(const IntVec& v) const;
  // Canonical representative of v modulo the lattice.
  IntVec reduce(const IntVec& v) const;

  Lattice operator+(const Lattice& other) const;
  Lattice scaled(const Int& k) const;
  bool operator==(const Lattice& other) const;
  bool operator!=(const Lattice& other) const { return !(*this == other); }

 private:
  struct Canonical {
    Dense rows;
    std::vector<std::size_t> pivots;
  };
  const Canonical& canonical() const;

  std::size_t ambient_ = 0;
  std::vector<IntVec> basis_;
  mutable std::shared_ptr<const Canonical> canon_;
};

struct SnfResult {
  IntVec divisors;  // length min(rows, cols); zeros at the end
  Dense u, u_inv, v;  // u * A * v = diag(divisors); filled when requested
};

// Row HNF of the lattice spanned by `rows` (zero rows dropped, positive
// pivots, entries above pivots reduced into [0, pivot)).
Dense row_hnf(const Dense& rows, std::size_t cols);

std::vector<Int> snf(const IntMatrix& a);
SnfResult snf_with_transforms(const Dense& a, std::size_t rows, std::size_t cols, bool want_transforms = true);

Lattice kernel_basis(const IntMatrix& a);
// Same kernel with the basis kept sparse: row k is the k-th basis vector.
IntMatrix kernel_rows(const IntMatrix& a);
// Dense helper with the same contract.
Lattice kernel_basis(const Dense& a, std::size_t cols);

struct Index {
  bool infinite = false;
  Int value;
  std::string to_string() const { return infinite ? "infinite" : value.get_str(); }
};
Index lattice_index(const Lattice& sub, const Lattice& sup);

std::optional<IntVec> solve(const IntMatrix& a, const IntVec& b, std::optional<Int> modulus = std::nullopt);

std::size_t rank(const IntMatrix& a);

// Solution lattice of a mixed system: row r of `rows` must satisfy
// row . x == 0 (mod moduli[r]), modulus 0 meaning an exact equation.
// Rows are small machine integers; everything else is exact.
Lattice congruence_lattice(std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows,
                           const std::vector<std::int64_t>& moduli);

// Some x with row_r . x == b_r (mod moduli[r]) for every r, all moduli positive.
std::optional<IntVec> solve_congruences(std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows,
                                        const std::vector<std::int64_t>& moduli, const IntVec& b);

// Utility
Int floor_mod(const Int& a, const Int& m);
IntVec zero_vec(std::size_t n);
bool is_zero(const IntVec& v);
std::string vec_to_string(const IntVec& v);

}  // namespace specht
