#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specht/sym_modules.hpp"

namespace specht {

struct SizeLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TorsionViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Complex { P, R };

// Generating cells. P: *, e_i, c_i, b_i, d_ij. R: *, x_ij, ct_ij, dt_ijkl, et_ikj
// (the tilde cells).
enum class CellKind { Star, E, C, B, D, StarR, X, CT, DT, ET };

struct Cell {
  CellKind kind = CellKind::Star;
  std::array<int, 4> idx{};

  static Cell make(CellKind kind, std::vector<int> idx, int n);
  static Cell parse(const std::string& label, int n, Complex cx = Complex::P);

  Complex complex() const;
  int dim() const;
  std::string label() const;
  auto operator<=>(const Cell&) const = default;
};

// Generating cells of the given dimension, sorted by (kind, indices).
const std::vector<Cell>& cells(Complex cx, int dim, int n);
std::size_t cell_position(const Cell& c, int n);

struct ChainTerm {
  std::int64_t coef;
  Permutation g;
  Cell cell;
};

// Formal Z S_n-combination of cells of one dimension and complex.
class GroupChain {
 public:
  GroupChain() = default;
  explicit GroupChain(int n) : n_(n) {}
  static GroupChain of(const Cell& c, int n, std::int64_t coef = 1);

  int n() const { return n_; }
  const std::vector<ChainTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::int64_t coef, const Permutation& g, const Cell& c);
  GroupChain& operator+=(const GroupChain& o);
  GroupChain operator+(const GroupChain& o) const;
  GroupChain operator-(const GroupChain& o) const;
  // Left multiplication by a group element, and integer scaling.
  GroupChain left(const Permutation& g) const;
  GroupChain scaled(std::int64_t k) const;
  bool operator==(const GroupChain& o) const;
  std::string to_string() const;

 private:
  void normalize();
  int n_ = 0;
  std::vector<ChainTerm> terms_;
};

GroupChain boundary(const Cell& c, int n);
GroupChain boundary(const GroupChain& x);

// Chain map P -> R, extended Z S_n-linearly.
GroupChain psi(const Cell& c, int n);
GroupChain psi(const GroupChain& x);

// Integer matrix of the boundary from dimension dim to dim - 1 on the Z-bases
// {(g, cell)}, index cell_position * n! + group index.
IntMatrix boundary_matrix(Complex cx, int dim, int n);
std::size_t chain_index(const Cell& c, std::size_t g, int n);

// Z S_n-linear map from the generating cells of one dimension into a module.
class Cochain {
 public:
  Cochain(Complex cx, int degree, ModulePtr target);

  Complex complex() const { return cx_; }
  int degree() const { return degree_; }
  int n() const { return target_->n(); }
  const ModulePtr& target() const { return target_; }
  const std::map<Cell, ModuleElement>& values() const { return values_; }

  const ModuleElement& at(const Cell& c) const;
  void set(const Cell& c, const IntVec& ambient);
  ModuleElement evaluate(const GroupChain& x) const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain scaled(const Int& k) const;
  bool operator==(const Cochain& o) const;
  bool is_zero() const;

  nlohmann::json to_json() const;
  static Cochain from_json(const nlohmann::json& j);

 private:
  void check_same(const Cochain& o) const;
  Complex cx_;
  int degree_;
  ModulePtr target_;
  std::map<Cell, ModuleElement> values_;
};

Cochain zero_cochain(Complex cx, int degree, ModulePtr target);

const std::vector<std::string>& cocycle_families();
// Families kappa*, alpha*, beta* and zeta live on P; phi lives on R (degree 2).
// Default targets: S0 (trivial), M1, M2, and K12 for zeta.
Cochain named_cocycle(const std::string& family, const Int& r, int n, RingSpec ring);
Cochain named_cocycle(const std::string& family, const Int& r, ModulePtr target);

// (delta f)(c) = f(boundary c).
Cochain coboundary(const Cochain& f);
// f o psi for a cochain on R.
Cochain pull_back_along_psi(const Cochain& f);

// ---------------------------------------------------------------- kernel oracle

// Cache directory: explicit setting, else SPECHT_LAB_CACHE, else ".specht-cache".
void set_cache_dir(std::optional<std::string> dir);
std::string cache_dir();
void set_kernel_limit(int n_max);
int kernel_limit();

// Saturated integer kernel of the P boundary from dimension 2 to 1, on the
// basis of boundary_matrix(P, 2, n). Rows of the result form a Z-basis.
const IntMatrix& kernel_d2(int n);
Lattice kernel_d2_lattice(int n);
std::string kernel_cache_file(int n);
// Reads and validates a cache file; nullopt when missing or invalid.
std::optional<IntMatrix> read_kernel_cache(const std::string& file, int n);
bool is_cocycle(const Cochain& f);

}  // namespace specht
