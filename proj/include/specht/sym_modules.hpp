#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "specht/exact_linalg.hpp"

namespace specht {

struct SizeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbientMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInModule : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- permutations

// Bijection of {1..n}. Products are function composition: (p*q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation s(int n, int i);
  static Permutation transposition(int n, int i, int j);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }
  Permutation inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation operator*(const Permutation& p, const Permutation& q);

// S_n enumerated in lexicographic order of image arrays.
class SymmetricGroup {
 public:
  static const SymmetricGroup& get(int n);

  int n() const { return n_; }
  std::size_t order() const { return elems_.size(); }
  const Permutation& element(std::size_t i) const { return elems_[i]; }
  std::size_t index(const Permutation& p) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t identity() const { return 0; }
  std::size_t s(int i) const { return s_[i - 1]; }

 private:
  explicit SymmetricGroup(int n);
  int n_;
  std::vector<Permutation> elems_;
  std::vector<std::size_t> inv_, s_;
  std::vector<std::uint16_t> table_;  // filled for n <= 6
};

// ---------------------------------------------------------------- rings

// Z (m == 0) or Z/m.
struct RingSpec {
  long m = 0;

  static RingSpec Z() { return {}; }
  static RingSpec Zmod(long m);
  // Accepts "Z", "Zmod:m" and "Z/m".
  static RingSpec parse(const std::string& text);

  bool is_z() const { return m == 0; }
  std::string to_string() const;
  Int reduce(const Int& x) const;
  // Generator of the k-torsion R[k] (0 when trivial).
  Int torsion_generator(long k) const;
  bool in_torsion(const Int& r, long k) const;
  // Modulus for "x == y (mod k)" read inside R: gcd(k, m), or k over Z.
  long congruence_modulus(long k) const;
  bool operator==(const RingSpec& o) const { return m == o.m; }
};

// Integer products of the half-integral constants a and b.
struct Constants {
  long na, two_a, b_n1, b_n1_n2, two_b;
};
Constants constants(int n);

// ---------------------------------------------------------------- ambient bases

std::size_t pair_count(int n);
// Position of v_ij (i != j, either order) in the (min, max) order.
std::size_t pair_index(int n, int i, int j);
std::pair<int, int> pair_at(int n, std::size_t idx);

enum class Block { Trivial, M1, M2 };

// Named ambient vectors (M1 has basis t_i, M2 has basis v_ij).
IntVec t_vec(int n, int i);
IntVec sum_t(int n);
IntVec v_vec(int n, int i, int j);
IntVec u_vec(int n);
IntVec w_vec(int n, int i);
// Standard polytabloid: (2, i) for i >= 4 or (i, j) with 3 <= i < j.
IntVec e_vec(int n, int i, int j);
std::vector<std::pair<int, int>> standard_polytabloid_indices(int n);
std::vector<IntVec> standard_polytabloids(int n);
// v12, v1j - v12 (j >= 3), v23 - v12, then the standard polytabloids.
std::vector<IntVec> m2_polytabloid_basis(int n);

// ---------------------------------------------------------------- modules

// Module L / Rel with L, Rel sublattices of a permutation-module ambient
// (a direct sum of trivial, M1 and M2 blocks). Elements are ambient vectors
// taken modulo Rel. Internally the module is also diagonalised as a direct
// sum of cyclic groups: coordinates c_k live in Z/q_k (q_k = 0 meaning Z).
class Module {
 public:
  Module(std::string id, int n, RingSpec ring, std::vector<Block> blocks, const std::vector<IntVec>& sub_gens,
         bool whole_ambient, const std::vector<IntVec>& rel_gens);

  const std::string& id() const { return id_; }
  int n() const { return n_; }
  const RingSpec& ring() const { return ring_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t ambient_dim() const { return dim_; }
  std::vector<std::string> labels() const;

  IntVec act(const Permutation& s, const IntVec& x) const;
  IntVec act(std::size_t perm_index, const IntVec& x) const;
  // Ambient coordinate permutation for a group element: (act x)[map[k]] = x[k].
  const std::vector<std::uint32_t>& ambient_perm(std::size_t perm_index) const;

  const Lattice& lattice() const { return lattice_; }
  const Lattice& relations() const { return relations_; }
  bool contains(const IntVec& x) const { return lattice_.contains(x); }
  IntVec canonical(const IntVec& x) const { return relations_.reduce(x); }
  bool is_zero(const IntVec& x) const { return relations_.contains(x); }

  std::size_t coord_count() const { return moduli_.size(); }
  const std::vector<Int>& moduli() const { return moduli_; }
  IntVec to_coords(const IntVec& x) const;
  IntVec from_coords(const IntVec& c) const;
  IntVec reduce_coords(IntVec c) const;
  // Row-major coordinate action matrix of a group element.
  const std::vector<std::int64_t>& coord_action(std::size_t perm_index) const;

  // Checks the S_n relations on the ambient generator action and invariance
  // of the lattices; throws on failure.
  void check_invariants() const;

 private:
  void build_coordinates();
  void build_actions() const;

  std::string id_;
  int n_;
  RingSpec ring_;
  std::vector<Block> blocks_;
  std::size_t dim_ = 0;
  Lattice lattice_, relations_;
  std::vector<Int> moduli_;
  Dense to_coord_;          // kept rows of U (in L-HNF coordinates)
  std::vector<IntVec> coord_basis_;  // ambient vectors b_k
  bool identity_coords_ = false;
  mutable std::vector<std::vector<std::uint32_t>> perm_maps_;
  mutable std::vector<std::vector<std::int64_t>> actions_;
  mutable std::once_flag perm_once_, action_once_;
};

using ModulePtr = std::shared_ptr<const Module>;

// Ids: S0, M1, M2, S1, S2, K12, IM_F0, IM_F1, IM_F2, IM_F01, IM_F02, IM_F12,
// M2_EQUIV. Results are cached per (id, n, ring).
ModulePtr make_module(const std::string& id, int n, RingSpec ring);
// Base module modulo an extra ambient sublattice (must be invariant).
ModulePtr quotient_module(const ModulePtr& base, const Lattice& sub, const std::string& id);

struct ModuleElement {
  ModulePtr module;
  IntVec coords;  // ambient vector, canonical modulo relations

  static ModuleElement make(ModulePtr m, const IntVec& ambient);
  bool operator==(const ModuleElement& o) const { return module == o.module && coords == o.coords; }
  nlohmann::json to_json() const;
};

ModuleElement act(const Permutation& s, const ModuleElement& v);

// kind: "u", "w" (i), "e" (i, j), "t" (i), "v" (i, j). M1 kinds land in M1, others in M2.
ModuleElement special_element(const std::string& kind, const std::vector<int>& idx, int n, RingSpec ring);

// ---------------------------------------------------------------- maps

using QVec = std::vector<mpq_class>;
QVec project(int i, const IntVec& v, int n);
std::string qvec_to_string(const QVec& v);

// Ambient integer matrices (rows = target ambient, cols = M2 ambient).
IntMatrix f_matrix(int i, int n);
IntMatrix mu_matrix(int n);
IntMatrix nu_matrix(int n);
// f^i for a multi-index such as "01" stacks the blocks.
IntMatrix f_stack_matrix(const std::string& which, int n);

ModuleElement f_map(int i, const ModuleElement& v);
ModuleElement mu(const ModuleElement& v);

// ---------------------------------------------------------------- membership

// Congruence-system tests on an ambient vector (M1 ambient for S1 / IM_F1,
// M2 ambient otherwise); coordinates are read in the ring.
bool membership(const IntVec& v, const std::string& target, int n, RingSpec ring);
bool membership(const ModuleElement& v, const std::string& target);

// Values v . e mod (n - 2) on the standard polytabloids.
IntVec epsilon_bar(const IntVec& v, int n);

// Label of the Specht subgroup whose rational span matches the submodule
// generated by gens: PBn, N0, N1, N2, N01, N02, N12 or PBn'.
std::string classify_submodule(const std::vector<IntVec>& gens, int n);

std::string ambient_label(int n, const std::vector<Block>& blocks, std::size_t k);

}  // namespace specht
