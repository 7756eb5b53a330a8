#include <sstream>

#include "specht/sym_modules.hpp"

namespace specht {

QVec project(int i, const IntVec& v, int n) {
  if (n < 3) throw SizeMismatch("projections need n >= 3");
  std::size_t d = pair_count(n);
  if (v.size() != d) throw AmbientMismatch("projection input must lie in M2");
  if (i < 0 || i > 2) throw IndexError("projection index must be 0, 1 or 2");
  mpq_class total = 0;
  std::vector<mpq_class> tsum(n + 1, 0);  // coefficient of w_k before scaling
  for (std::size_t k = 0; k < d; ++k) {
    if (v[k] == 0) continue;
    auto [a, b] = pair_at(n, k);
    total += v[k];
    tsum[a] += v[k];
    tsum[b] += v[k];
  }
  const mpq_class nn(n);
  QVec out(d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    auto [a, b] = pair_at(n, k);
    mpq_class u0 = 2 * total / (nn * (nn - 1));
    mpq_class u1 = (tsum[a] + tsum[b]) / (nn - 2) - 4 * total / (nn * (nn - 2));
    if (i == 0)
      out[k] = u0;
    else if (i == 1)
      out[k] = u1;
    else
      out[k] = mpq_class(v[k]) - u0 - u1;
  }
  for (auto& x : out) x.canonicalize();
  return out;
}

std::string qvec_to_string(const QVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k].get_str();
  os << ')';
  return os.str();
}

IntMatrix f_matrix(int i, int n) {
  std::size_t d = pair_count(n);
  Constants c = constants(n);
  if (i == 0) {
    IntMatrix m(1, d);
    for (std::size_t k = 0; k < d; ++k) m.set(0, k, 1);
    return m;
  }
  if (i == 1) {
    IntMatrix m(n, d);
    for (std::size_t k = 0; k < d; ++k) {
      auto [a, b] = pair_at(n, k);
      for (int t = 1; t <= n; ++t) m.set(t - 1, k, Int(-c.two_a) + ((t == a || t == b) ? Int(c.na) : Int(0)));
    }
    return m;
  }
  if (i == 2) {
    IntMatrix m(d, d);
    if (n < 4) return m;
    for (std::size_t k = 0; k < d; ++k) {
      auto [a, b] = pair_at(n, k);
      for (std::size_t r = 0; r < d; ++r) {
        auto [p, q] = pair_at(n, r);
        int shared = (p == a || p == b) + (q == a || q == b);
        long val = c.two_b;
        if (shared == 2)
          val += c.b_n1_n2 - 2 * c.b_n1;
        else if (shared == 1)
          val -= c.b_n1;
        m.set(r, k, val);
      }
    }
    return m;
  }
  throw IndexError("f-map index must be 0, 1 or 2");
}

IntMatrix f_stack_matrix(const std::string& which, int n) {
  std::vector<IntMatrix> parts;
  std::size_t rows = 0;
  for (char ch : which) {
    if (ch < '0' || ch > '2') throw IndexError("f-map index must be 0, 1 or 2");
    parts.push_back(f_matrix(ch - '0', n));
    rows += parts.back().rows();
  }
  IntMatrix m(rows, pair_count(n));
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r) m.set_row(off + r, p.row(r));
    off += p.rows();
  }
  return m;
}

IntMatrix mu_matrix(int n) {
  std::size_t d = pair_count(n);
  IntMatrix m(n, d);
  for (std::size_t k = 0; k < d; ++k) {
    auto [a, b] = pair_at(n, k);
    m.set(a - 1, k, 1);
    m.set(b - 1, k, 1);
  }
  return m;
}

IntMatrix nu_matrix(int n) { return mu_matrix(n).transpose(); }

namespace {

void require_m2(const ModuleElement& v) {
  const auto& bl = v.module->blocks();
  if (bl.size() != 1 || bl[0] != Block::M2) throw AmbientMismatch("map input must lie in the M2 ambient");
}

}  // namespace

ModuleElement f_map(int i, const ModuleElement& v) {
  require_m2(v);
  static const char* targets[] = {"S0", "S1", "S2"};
  if (i < 0 || i > 2) throw IndexError("f-map index must be 0, 1 or 2");
  const Module& m = *v.module;
  return ModuleElement::make(make_module(targets[i], m.n(), m.ring()), f_matrix(i, m.n()) * v.coords);
}

ModuleElement mu(const ModuleElement& v) {
  require_m2(v);
  const Module& m = *v.module;
  return ModuleElement::make(make_module("M1", m.n(), m.ring()), mu_matrix(m.n()) * v.coords);
}

}  // namespace specht
