#include <algorithm>
#include <cstdint>
#include <map>

#include "detail.hpp"

namespace specht {
namespace {

using SRow = std::vector<std::pair<std::uint32_t, Int>>;

// x - f*y; `fresh` receives columns present in the result but not in x.
SRow sub_scaled(const SRow& x, const Int& f, const SRow& y, std::vector<std::uint32_t>& fresh) {
  SRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Int t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      mpz_mul(t.get_mpz_t(), f.get_mpz_t(), y[j].second.get_mpz_t());
      out.emplace_back(y[j].first, -t);
      fresh.push_back(y[j].first);
      ++j;
    } else {
      t = x[i].second;
      mpz_submul(t.get_mpz_t(), f.get_mpz_t(), y[j].second.get_mpz_t());
      if (t != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Lattice kernel_basis(const Dense& a, std::size_t cols) {
  std::size_t m = a.size();
  detail::HnfBuilder b(m + cols);
  for (std::size_t j = 0; j < cols; ++j) {
    IntVec row(m + cols);
    for (std::size_t i = 0; i < m; ++i) row[i] = a[i][j];
    row[m + j] = 1;
    b.insert(std::move(row));
  }
  std::vector<IntVec> ker;
  for (auto& r : b.finish()) {
    bool top_zero = true;
    for (std::size_t i = 0; i < m && top_zero; ++i)
      if (r[i] != 0) top_zero = false;
    if (top_zero) ker.emplace_back(r.begin() + static_cast<long>(m), r.end());
  }
  return Lattice::from_independent(cols, std::move(ker));
}

// Gauss-Jordan elimination restricted to unit pivots (row operations leave the
// kernel unchanged), followed by a dense Hermite step on whatever block is
// left without unit entries. Pivot unknowns are then integral functions of
// the free unknowns, so the resulting basis spans the full integer kernel.
IntMatrix kernel_rows(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<SRow> rows(m);
  std::vector<std::vector<std::uint32_t>> col_rows(n);
  for (std::size_t r = 0; r < m; ++r) {
    for (const auto& [c, v] : a.row(r)) {
      rows[r].emplace_back(static_cast<std::uint32_t>(c), v);
      col_rows[c].push_back(static_cast<std::uint32_t>(r));
    }
  }
  std::vector<long> row_pivot(m, -1), col_pivot(n, -1);
  std::vector<std::uint32_t> fresh;
  for (;;) {
    long best_r = -1;
    std::size_t best_len = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (row_pivot[r] >= 0 || rows[r].empty()) continue;
      if (best_r >= 0 && rows[r].size() >= best_len) continue;
      bool has_unit = false;
      for (const auto& e : rows[r])
        if (e.second == 1 || e.second == -1) {
          has_unit = true;
          break;
        }
      if (has_unit) {
        best_r = static_cast<long>(r);
        best_len = rows[r].size();
      }
    }
    if (best_r < 0) break;
    std::uint32_t pc = 0;
    std::size_t pc_count = SIZE_MAX;
    Int pv;
    for (const auto& [c, v] : rows[best_r])
      if ((v == 1 || v == -1) && col_rows[c].size() < pc_count) {
        pc = c;
        pc_count = col_rows[c].size();
        pv = v;
      }
    row_pivot[best_r] = pc;
    col_pivot[pc] = best_r;
    std::vector<std::uint32_t> touched = col_rows[pc];
    for (std::uint32_t r2 : touched) {
      if (static_cast<long>(r2) == best_r) continue;
      auto& row2 = rows[r2];
      auto it = std::lower_bound(row2.begin(), row2.end(), pc,
                                 [](const auto& e, std::uint32_t k) { return e.first < k; });
      if (it == row2.end() || it->first != pc) continue;
      Int f = it->second * pv;
      fresh.clear();
      row2 = sub_scaled(row2, f, rows[best_r], fresh);
      for (auto c : fresh) col_rows[c].push_back(r2);
    }
    col_rows[pc].assign(1, static_cast<std::uint32_t>(best_r));
  }

  std::vector<std::uint32_t> free_cols;
  std::vector<long> free_index(n, -1);
  for (std::size_t c = 0; c < n; ++c)
    if (col_pivot[c] < 0) {
      free_index[c] = static_cast<long>(free_cols.size());
      free_cols.push_back(static_cast<std::uint32_t>(c));
    }
  const std::size_t f = free_cols.size();

  // Kernel of the leftover block on the free columns.
  std::vector<IntVec> ys;
  Dense rest;
  for (std::size_t r = 0; r < m; ++r) {
    if (row_pivot[r] >= 0 || rows[r].empty()) continue;
    IntVec d(f);
    for (const auto& [c, v] : rows[r]) d[free_index[c]] = v;
    rest.push_back(std::move(d));
  }
  bool identity = rest.empty();
  if (!identity) ys = kernel_basis(rest, f).basis_vectors();

  // For each free column, the pivot unknowns it feeds: x_c = -p * sum v * x_free.
  std::vector<std::vector<std::pair<std::uint32_t, Int>>> feeds(f);
  for (std::size_t r = 0; r < m; ++r) {
    if (row_pivot[r] < 0) continue;
    auto c = static_cast<std::uint32_t>(row_pivot[r]);
    Int p;
    for (const auto& e : rows[r])
      if (e.first == c) p = e.second;
    for (const auto& [j, v] : rows[r])
      if (j != c) feeds[free_index[j]].emplace_back(c, -(p * v));
  }

  std::size_t count = identity ? f : ys.size();
  IntMatrix out(count, n);
  std::map<std::size_t, Int> x;
  for (std::size_t k = 0; k < count; ++k) {
    x.clear();
    if (identity) {
      x[free_cols[k]] += 1;
      for (const auto& [c, v] : feeds[k]) x[c] += v;
    } else {
      for (std::size_t i = 0; i < f; ++i) {
        const Int& yi = ys[k][i];
        if (yi == 0) continue;
        x[free_cols[i]] += yi;
        for (const auto& [c, v] : feeds[i]) x[c] += v * yi;
      }
    }
    IntMatrix::Row row;
    for (auto& [c, v] : x)
      if (v != 0) row.emplace_back(c, std::move(v));
    out.set_row(k, std::move(row));
  }
  return out;
}

Lattice kernel_basis(const IntMatrix& a) {
  IntMatrix k = kernel_rows(a);
  std::vector<IntVec> basis;
  basis.reserve(k.rows());
  for (std::size_t r = 0; r < k.rows(); ++r) {
    IntVec x(a.cols());
    for (const auto& [c, v] : k.row(r)) x[c] = v;
    basis.push_back(std::move(x));
  }
  return Lattice::from_independent(a.cols(), std::move(basis));
}

std::optional<IntVec> solve(const IntMatrix& a, const IntVec& b, std::optional<Int> modulus) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side has wrong length");
  const std::size_t m = a.rows(), k = a.cols();
  std::size_t kk = k + (modulus ? m : 0);
  if (modulus && *modulus <= 0) throw DimensionError("solve: modulus must be positive");
  detail::HnfBuilder hb(m + kk);
  Dense cols = a.transpose().to_dense();
  for (std::size_t j = 0; j < kk; ++j) {
    IntVec row(m + kk);
    if (j < k)
      for (std::size_t i = 0; i < m; ++i) row[i] = cols[j][i];
    else
      row[j - k] = *modulus;
    row[m + j] = 1;
    hb.insert(std::move(row));
  }
  Dense h = hb.finish();
  IntVec res = b, x(kk);
  Int q;
  for (const auto& r : h) {
    std::size_t p = 0;
    while (p < m + kk && r[p] == 0) ++p;
    if (p >= m) break;
    if (res[p] == 0) continue;
    if (!mpz_divisible_p(res[p].get_mpz_t(), r[p].get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), res[p].get_mpz_t(), r[p].get_mpz_t());
    for (std::size_t i = p; i < m; ++i)
      if (r[i] != 0) mpz_submul(res[i].get_mpz_t(), q.get_mpz_t(), r[i].get_mpz_t());
    for (std::size_t j = 0; j < kk; ++j)
      if (r[m + j] != 0) mpz_addmul(x[j].get_mpz_t(), q.get_mpz_t(), r[m + j].get_mpz_t());
  }
  if (!is_zero(res)) return std::nullopt;
  x.resize(k);
  if (modulus)
    for (auto& v : x) v = floor_mod(v, *modulus);
  return x;
}

}  // namespace specht
