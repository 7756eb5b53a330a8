#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specht/braids.hpp"
#include "specht/resolution.hpp"

namespace specht {

struct NotACocycle : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// H^k(S_n; M) for k = 0, 1, 2, read off the resolution P. The group is
// Z^free_rank + sum Z/torsion[i]; generators list the torsion classes first
// (in divisor order) and then the free ones.
struct CohomologyGroup {
  int degree = 0;
  ModulePtr module;
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  std::vector<Cochain> generators;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  // Coordinates of the class of a cocycle against `generators`; torsion
  // entries are reduced into [0, d). Throws NotACocycle.
  std::vector<Int> class_of(const Cochain& f) const;
  // True when the classes of the given cocycles generate the whole group.
  bool generated_by(const std::vector<Cochain>& cocycles) const;
  nlohmann::json to_json() const;

  struct Detail;
  std::shared_ptr<const Detail> detail;
};

CohomologyGroup cohomology_group(int degree, const ModulePtr& module);

// Cochains as integer vectors: the value on the k-th generating cell sits in
// block k, written in the module's cyclic coordinates.
IntVec cochain_coordinates(const Cochain& f);
Cochain cochain_from_coordinates(int degree, const ModulePtr& module, const IntVec& x);

struct CoboundaryResult {
  std::optional<Cochain> witness;  // g with coboundary(g) == f
  nlohmann::json certificate;      // class of f in H^2 when no witness exists
};

// Works in degrees 1 and 2 on P. Throws NotACocycle.
CoboundaryResult is_coboundary(const Cochain& f);

// Value-wise composition with a module map. Map ids: "id", "f0", "f1", "f2",
// "f01", "f02", "f12", "mu", "reduce", "include". The target defaults to
// S0 / M1 / M2 (f-maps and mu, same ring), the full ambient module (include)
// and must be given for "reduce". Throws DomainMismatch when the map is not
// defined on the cochain's module or does not land in the target.
Cochain pushforward(const std::string& map_id, const Cochain& f, ModulePtr target = nullptr);
// "reduce" shorthand: same module id over Z/m.
Cochain reduce_mod(const Cochain& f, long m);

// ---------------------------------------------------------------- extensions

// B_n modulo the kernel of PB_n -> M2_Z -> Q, where the last map is the
// reduction mod m (pi_m) or an f-map (f0, f1, f2, f01, f02, f12) over ring.
struct QuotientSpec {
  int n = 4;
  RingSpec ring;
  std::string map_id = "pi_m";

  // Accepts "pi:m", "pi_m" (with ring Z/m), "f0", ..., "f12".
  static QuotientSpec make(int n, RingSpec ring, const std::string& map_id);
  std::string to_string() const;
};

// Module Q of the quotient and the ambient matrix of PB_n/PB_n' = M2_Z -> Q.
ModulePtr extension_kernel(const QuotientSpec& q);
const IntMatrix& extension_projection(const QuotientSpec& q);

struct SplittingResult {
  bool splits = false;
  Cochain structure_class;         // pushforward of hat_alpha2(1) into Q
  std::optional<Cochain> witness;  // 1-cochain with coboundary = structure_class
  nlohmann::json certificate;
  nlohmann::json to_json() const;
};

SplittingResult splitting_check(const QuotientSpec& q);

struct ExtensionElement {
  Permutation perm;
  ModuleElement wind;
  bool operator==(const ExtensionElement& o) const { return perm == o.perm && wind == o.wind; }
};

// Shortlex-least positive braid word with the given permutation.
const BraidWord& section_word(const Permutation& p);

ExtensionElement extension_identity(const QuotientSpec& q);
// Image of a braid: (rho(w), image of the winding of w * s(rho(w))^-1).
ExtensionElement extension_image(const QuotientSpec& q, const BraidWord& w);
ExtensionElement extension_multiply(const QuotientSpec& q, const ExtensionElement& x, const ExtensionElement& y);
ExtensionElement extension_inverse(const QuotientSpec& q, const ExtensionElement& x);

// Section s_i -> (s_i, -g(e_i)) checked against every defining relation of S_n.
bool verify_splitting_witness(const QuotientSpec& q, const Cochain& g);

}  // namespace specht
