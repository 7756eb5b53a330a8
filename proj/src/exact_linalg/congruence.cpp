#include <numeric>

#include "detail.hpp"

namespace specht {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mod(i128 a, i64 m) {
  i64 r = static_cast<i64>(a % m);
  return r < 0 ? r + m : r;
}

i64 xgcd(i64 a, i64 b, i64& s, i64& t) {
  i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    i64 q = a / b;
    i64 r = a - q * b;
    a = b;
    b = r;
    i64 ns = s0 - q * s1, nt = t0 - q * t1;
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  s = s0;
  t = t0;
  return a;
}

// Row lattice of a congruence system modulo D, kept in echelon form where
// row c has zeros before c and pivot h[c] dividing D. The lattice always
// contains D*Z^N; pushing (D/h)*row back in keeps the echelon form closed.
// Vectors may carry extra trailing columns that are reduced alongside but never
// hold a pivot.
class ModEchelon {
 public:
  ModEchelon(std::size_t n, i64 d, std::size_t width = 0)
      : n_(n), w_(std::max(n, width)), d_(d), h_(n, d), rows_(n, std::vector<i64>(w_, 0)) {}

  void insert(std::vector<i64> v) {
    for (auto& x : v) x = mod(x, d_);
    std::vector<std::vector<i64>> stack;
    stack.push_back(std::move(v));
    while (!stack.empty()) {
      std::vector<i64> x = std::move(stack.back());
      stack.pop_back();
      for (std::size_t c = 0; c < n_; ++c) {
        if (x[c] == 0) continue;
        i64 a = h_[c], b = x[c];
        auto& row = rows_[c];
        if (b % a == 0) {
          i64 q = b / a;
          x[c] = 0;
          for (std::size_t j = c + 1; j < w_; ++j)
            if (row[j] != 0) x[j] = mod(static_cast<i128>(x[j]) - static_cast<i128>(q) * row[j], d_);
          continue;
        }
        i64 s, t;
        i64 g = xgcd(a, b, s, t);
        i64 ag = a / g, bg = b / g;
        std::vector<i64> nrow(w_, 0);
        for (std::size_t j = c + 1; j < w_; ++j) {
          nrow[j] = mod(static_cast<i128>(s) * row[j] + static_cast<i128>(t) * x[j], d_);
          x[j] = mod(static_cast<i128>(ag) * x[j] - static_cast<i128>(bg) * row[j], d_);
        }
        x[c] = 0;
        row = nrow;
        h_[c] = g;
        std::vector<i64> extra(w_, 0);
        i64 k = d_ / g;
        bool any = false;
        for (std::size_t j = c + 1; j < w_; ++j) {
          extra[j] = mod(static_cast<i128>(k) * row[j], d_);
          any = any || extra[j] != 0;
        }
        if (any) stack.push_back(std::move(extra));
      }
    }
  }

  // Writes the first n entries of b as a combination of the rows; returns the
  // matching combination of the trailing columns.
  std::optional<std::vector<i64>> express(std::vector<i64> b) const {
    std::vector<i64> tail(w_ - n_, 0);
    for (auto& x : b) x = mod(x, d_);
    for (std::size_t c = 0; c < n_; ++c) {
      if (b[c] == 0) continue;
      if (b[c] % h_[c] != 0) return std::nullopt;
      i64 q = b[c] / h_[c];
      const auto& row = rows_[c];
      for (std::size_t j = c + 1; j < n_; ++j)
        if (row[j] != 0) b[j] = mod(static_cast<i128>(b[j]) - static_cast<i128>(q) * row[j], d_);
      for (std::size_t j = n_; j < w_; ++j)
        if (row[j] != 0) tail[j - n_] = mod(static_cast<i128>(tail[j - n_]) + static_cast<i128>(q) * row[j], d_);
    }
    return tail;
  }

  // Basis of {x : H x == 0 mod D}: the columns of D * H^{-1}, with column k
  // reduced against the earlier columns during back-substitution so that its
  // entry in slot c < k lies in [0, D / h[c]).
  std::vector<IntVec> solution_basis() const {
    std::vector<IntVec> cols(n_, IntVec(n_));
    Int acc, q;
    for (std::size_t k = 0; k < n_; ++k) {
      IntVec& x = cols[k];
      for (std::size_t ci = k + 1; ci-- > 0;) {
        acc = (ci == k) ? Int(d_) : Int(0);
        for (std::size_t j = ci + 1; j <= k; ++j)
          if (rows_[ci][j] != 0 && x[j] != 0) acc -= Int(static_cast<long>(rows_[ci][j])) * x[j];
        Int hc(static_cast<long>(h_[ci]));
        if (!mpz_divisible_p(acc.get_mpz_t(), hc.get_mpz_t()))
          throw std::logic_error("congruence echelon lost closure under D-multiples");
        mpz_divexact(x[ci].get_mpz_t(), acc.get_mpz_t(), hc.get_mpz_t());
        if (ci < k) {
          Int p(static_cast<long>(d_ / h_[ci]));
          mpz_fdiv_q(q.get_mpz_t(), x[ci].get_mpz_t(), p.get_mpz_t());
          if (q != 0) x[ci] -= q * p;
        }
      }
    }
    return cols;
  }

 private:
  std::size_t n_, w_;
  i64 d_;
  std::vector<i64> h_;
  std::vector<std::vector<i64>> rows_;
};

constexpr i64 kPrime = 2147483647;

// Greedy choice of rows that are independent modulo a large prime.
class PrimeEchelon {
 public:
  explicit PrimeEchelon(std::size_t n) : n_(n), rows_(n) {}
  std::size_t rank() const { return rank_; }
  bool add(const std::vector<i64>& r) {
    std::vector<i64> x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = mod(r[j], kPrime);
    for (std::size_t c = 0; c < n_; ++c) {
      if (x[c] == 0) continue;
      if (rows_[c].empty()) {
        i64 inv = inverse(x[c]);
        for (std::size_t j = c; j < n_; ++j) x[j] = mod(static_cast<i128>(x[j]) * inv, kPrime);
        rows_[c] = std::move(x);
        ++rank_;
        return true;
      }
      i64 f = x[c];
      const auto& p = rows_[c];
      for (std::size_t j = c; j < n_; ++j)
        if (p[j] != 0) x[j] = mod(static_cast<i128>(x[j]) - static_cast<i128>(f) * p[j], kPrime);
    }
    return false;
  }

 private:
  static i64 inverse(i64 a) {
    i64 s, t;
    xgcd(a, kPrime, s, t);
    return mod(s, kPrime);
  }
  std::size_t n_;
  std::size_t rank_ = 0;
  std::vector<std::vector<i64>> rows_;
};

i64 modulus_lcm(const std::vector<i64>& moduli) {
  i64 d = 1;
  for (i64 m : moduli) {
    if (m < 0) throw DimensionError("congruence modulus must be non-negative");
    if (m > 1) {
      i64 g = std::gcd(d, m);
      if (static_cast<i128>(d / g) * m > (static_cast<i128>(1) << 40))
        throw DimensionError("congruence modulus lcm too large");
      d = d / g * m;
    }
  }
  return d;
}

}  // namespace

std::optional<IntVec> solve_congruences(std::size_t n, const std::vector<std::vector<i64>>& rows,
                                        const std::vector<i64>& moduli, const IntVec& b) {
  if (rows.size() != moduli.size() || rows.size() != b.size())
    throw DimensionError("solve_congruences: one modulus and one value per row");
  const std::size_t m = rows.size();
  for (i64 q : moduli)
    if (q == 0) throw DimensionError("solve_congruences: every modulus must be positive");
  i64 d = modulus_lcm(moduli);
  if (d == 1) return IntVec(n);
  // the columns of the scaled system, each tagged with a unit vector
  ModEchelon me(m, d, m + n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<i64> v(m + n, 0);
    for (std::size_t r = 0; r < m; ++r) {
      if (rows[r].size() != n) throw DimensionError("solve_congruences: row has wrong length");
      v[r] = mod(static_cast<i128>(rows[r][j]) * (d / moduli[r]), d);
    }
    v[m + j] = 1;
    me.insert(std::move(v));
  }
  std::vector<i64> target(m);
  for (std::size_t r = 0; r < m; ++r) {
    Int s = b[r] % Int(static_cast<long>(moduli[r]));
    target[r] = mod(static_cast<i128>(s.get_si()) * (d / moduli[r]), d);
  }
  auto x = me.express(std::move(target));
  if (!x) return std::nullopt;
  IntVec out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = Int(static_cast<long>((*x)[j]));
  return out;
}

Lattice congruence_lattice(std::size_t n, const std::vector<std::vector<i64>>& rows, const std::vector<i64>& moduli) {
  if (rows.size() != moduli.size()) throw DimensionError("congruence_lattice: one modulus per row");
  i64 d = modulus_lcm(moduli);
  std::vector<IntVec> base;
  if (d > 1) {
    ModEchelon me(n, d);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (moduli[r] <= 1) continue;
      std::vector<i64> v = rows[r];
      if (v.size() != n) throw DimensionError("congruence_lattice: row has wrong length");
      i64 scale = d / moduli[r];
      for (auto& x : v) x = mod(static_cast<i128>(x) * scale, d);
      me.insert(std::move(v));
    }
    base = me.solution_basis();
  } else {
    base.assign(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i) base[i][i] = 1;
  }

  std::vector<std::size_t> exact;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (moduli[r] == 0) exact.push_back(r);
  if (exact.empty()) return Lattice::from_generators(n, base);

  PrimeEchelon pe(n);
  std::vector<std::size_t> chosen;
  for (std::size_t r : exact) {
    if (pe.rank() == n) break;
    if (pe.add(rows[r])) chosen.push_back(r);
  }
  auto row_times = [&](const std::vector<i64>& row, const IntVec& v) {
    Int s;
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] != 0 && v[j] != 0) s += Int(static_cast<long>(row[j])) * v[j];
    return s;
  };
  for (;;) {
    // kernel of (chosen rows) * base, mapped back through base
    Dense cm;
    for (std::size_t r : chosen) {
      IntVec line(n);
      for (std::size_t k = 0; k < n; ++k) line[k] = row_times(rows[r], base[k]);
      cm.push_back(std::move(line));
    }
    std::vector<IntVec> ys = cm.empty() ? std::vector<IntVec>() : kernel_basis(cm, n).basis_vectors();
    if (cm.empty())
      for (std::size_t k = 0; k < n; ++k) {
        IntVec e(n);
        e[k] = 1;
        ys.push_back(std::move(e));
      }
    std::vector<IntVec> sol;
    for (const auto& y : ys) {
      IntVec f(n);
      for (std::size_t k = 0; k < n; ++k)
        if (y[k] != 0)
          for (std::size_t j = 0; j < n; ++j) f[j] += y[k] * base[k][j];
      sol.push_back(std::move(f));
    }
    std::size_t bad = rows.size();
    for (std::size_t r : exact) {
      for (const auto& f : sol)
        if (row_times(rows[r], f) != 0) {
          bad = r;
          break;
        }
      if (bad != rows.size()) break;
    }
    if (bad == rows.size()) return Lattice::from_generators(n, sol);
    chosen.push_back(bad);
  }
}

}  // namespace specht
