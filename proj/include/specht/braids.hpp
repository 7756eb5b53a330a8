#pragma once

#include <string>
#include <vector>

#include "specht/sym_modules.hpp"

namespace specht {

struct NotPure : std::runtime_error {
  NotPure(const Permutation& p)
      : std::runtime_error("braid is not pure; its permutation is " + p.to_string()), perm(p) {}
  Permutation perm;
};

struct UnsupportedAtN3 : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word in the Artin generators: letter k > 0 is sigma_k, k < 0 its inverse.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int n, std::vector<int> letters);
  // Whitespace-separated signed integers, e.g. "1 2 -1 -2".
  static BraidWord parse(const std::string& text, int n);

  int n() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  std::string to_string() const;

  BraidWord inverse() const;
  BraidWord power(int k) const;
  BraidWord operator*(const BraidWord& o) const;
  bool operator==(const BraidWord& o) const { return n_ == o.n_ && letters_ == o.letters_; }

 private:
  int n_ = 0;
  std::vector<int> letters_;
};

Permutation rho(const BraidWord& w);

// Winding numbers omega_ij of a pure braid as an M2 ambient vector.
IntVec winding_vector(const BraidWord& w);
ModuleElement winding_element(const BraidWord& w);

// kind "a" (i, j), "y" (i), "z" (), "lift" (i, j) for a standard polytabloid index.
BraidWord named_braid(const std::string& kind, const std::vector<int>& idx, int n);

// Specht subgroup ids: N0, N1, N2, N01, N02, N12 (only N0, N1 when n = 3).
const std::vector<std::string>& specht_ids(int n);
// Linear equations on winding vectors cutting out the subgroup.
std::vector<std::vector<std::int64_t>> specht_equations(const std::string& id, int n);
bool specht_membership(const IntVec& winding, const std::string& id, int n);
bool specht_membership(const BraidWord& w, const std::string& id);
// Image of the subgroup in M2_Z, as the solution lattice of its equations.
Lattice specht_lattice(const std::string& id, int n);
// Finite list of pure braids that, together with the commutator subgroup,
// generate the subgroup.
std::vector<BraidWord> specht_generators(const std::string& id, int n);

}  // namespace specht
