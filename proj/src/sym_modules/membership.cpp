#include <numeric>

#include "specht/sym_modules.hpp"

namespace specht {
namespace {

// x == 0 in R (k == 0) or x in kR.
bool holds(const Int& x, long k, const RingSpec& ring) {
  long mod = k == 0 ? ring.m : ring.congruence_modulus(k);
  if (mod == 0) return x == 0;
  if (mod == 1) return true;
  return floor_mod(x, Int(mod)) == 0;
}

Int sum(const IntVec& v) {
  Int s;
  for (const auto& x : v) s += x;
  return s;
}

bool in_s1(const IntVec& v, const RingSpec& ring) { return holds(sum(v), 0, ring); }

bool in_k12(const IntVec& v, const RingSpec& ring) { return holds(sum(v), 0, ring); }

bool in_s2(const IntVec& v, int n, const RingSpec& ring) {
  if (!in_k12(v, ring)) return false;
  IntVec m = mu_matrix(n) * v;
  for (const auto& x : m)
    if (!holds(x, 0, ring)) return false;
  return true;
}

bool coeff_congruence(const IntVec& v, int n, const RingSpec& ring) {
  long k = constants(n).b_n1;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!holds(v[i] - v[0], k, ring)) return false;
  return true;
}

bool polytabloid_congruence(const IntVec& v, int n, const RingSpec& ring) {
  auto c = [&](int i, int j) -> const Int& { return v[pair_index(n, i, j)]; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          if (!holds(c(i, j) + c(k, l) - c(i, l) - c(k, j), n - 2, ring)) return false;
        }
  return true;
}

bool parity_condition(const IntVec& v, int n, const RingSpec& ring) {
  auto c = [&](int i, int j) -> const Int& { return v[pair_index(n, i, j)]; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (!holds(c(i, j) + c(i, k) + c(j, k), 2, ring)) return false;
  return true;
}

}  // namespace

bool membership(const IntVec& v, const std::string& target, int n, RingSpec ring) {
  bool m1 = target == "S1" || target == "IM_F1";
  bool m2 = target == "S2" || target == "K12" || target == "IM_F2" || target == "M2_EQUIV";
  if (!m1 && !m2) throw IndexError("unknown membership target " + target);
  std::size_t want = m1 ? static_cast<std::size_t>(n) : pair_count(n);
  if (v.size() != want)
    throw AmbientMismatch("target " + target + " needs a vector in the " + (m1 ? "M1" : "M2") + " ambient");
  if (target == "S1") return in_s1(v, ring);
  if (target == "IM_F1") {
    if (!in_s1(v, ring)) return false;
    long na = constants(n).na;
    for (int i = 1; i < n; ++i)
      if (!holds(v[i] - v[0], na, ring)) return false;
    return true;
  }
  if (target == "K12") return in_k12(v, ring);
  if (target == "S2") return in_s2(v, n, ring);
  if (target == "M2_EQUIV") return coeff_congruence(v, n, ring) && polytabloid_congruence(v, n, ring);
  // IM_F2
  if (!in_s2(v, n, ring) || !coeff_congruence(v, n, ring) || !polytabloid_congruence(v, n, ring)) return false;
  if (n % 2 == 0 && !ring.is_z() && std::gcd(static_cast<long>((n - 2) / 2), ring.m) != 1)
    return parity_condition(v, n, ring);
  return true;
}

bool membership(const ModuleElement& v, const std::string& target) {
  const Module& m = *v.module;
  return membership(v.coords, target, m.n(), m.ring());
}

IntVec epsilon_bar(const IntVec& v, int n) {
  if (n < 4) throw SizeMismatch("epsilon_bar needs n >= 4");
  if (v.size() != pair_count(n)) throw AmbientMismatch("epsilon_bar input must lie in M2");
  IntVec out;
  Int mod(n - 2);
  for (const auto& e : standard_polytabloids(n)) {
    Int s;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) s += e[k] * v[k];
    out.push_back(floor_mod(s, mod));
  }
  return out;
}

std::string classify_submodule(const std::vector<IntVec>& gens, int n) {
  bool hit[3] = {false, false, false};
  for (const auto& g : gens)
    for (int i = 0; i < 3; ++i) {
      if (hit[i]) continue;
      for (const auto& x : project(i, g, n))
        if (x != 0) {
          hit[i] = true;
          break;
        }
    }
  std::string full = n == 3 ? "PB3" : "PBn";
  if (n == 3 && hit[0] && hit[1]) return full;
  if (hit[0] && hit[1] && hit[2]) return full;
  std::string digits;
  for (int i = 0; i < 3; ++i)
    if (hit[i]) digits += static_cast<char>('0' + i);
  if (digits.empty()) return full + "'";
  return "N" + digits;
}

}  // namespace specht
