#include <algorithm>

#include "detail.hpp"

namespace specht {
namespace detail {

void combine(IntVec& x, const Int& a, const IntVec& y, const Int& b, std::size_t from) {
  Int t;
  for (std::size_t k = from; k < x.size(); ++k) {
    if (y[k] == 0) {
      if (x[k] != 0) x[k] *= a;
      continue;
    }
    mpz_mul(t.get_mpz_t(), x[k].get_mpz_t(), a.get_mpz_t());
    mpz_addmul(t.get_mpz_t(), y[k].get_mpz_t(), b.get_mpz_t());
    mpz_swap(t.get_mpz_t(), x[k].get_mpz_t());
  }
}

void submul(IntVec& x, const Int& q, const IntVec& y, std::size_t from) {
  if (q == 0) return;
  for (std::size_t k = from; k < x.size(); ++k)
    if (y[k] != 0) mpz_submul(x[k].get_mpz_t(), q.get_mpz_t(), y[k].get_mpz_t());
}

void HnfBuilder::insert(IntVec v) {
  if (v.size() != cols_) throw DimensionError("HnfBuilder: wrong row length");
  Int g, s, t, q;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    if (slot_[c] < 0) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      slot_[c] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(v));
      return;
    }
    IntVec& p = rows_[slot_[c]];
    if (mpz_divisible_p(v[c].get_mpz_t(), p[c].get_mpz_t())) {
      mpz_divexact(q.get_mpz_t(), v[c].get_mpz_t(), p[c].get_mpz_t());
      submul(v, q, p, c);
      continue;
    }
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p[c].get_mpz_t(), v[c].get_mpz_t());
    Int a_g = p[c] / g, b_g = v[c] / g;
    IntVec np = p;
    combine(np, s, v, t, c);
    combine(v, a_g, p, -b_g, c);
    p = std::move(np);
  }
}

Dense HnfBuilder::finish() {
  Dense out;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < cols_; ++c)
    if (slot_[c] >= 0) {
      out.push_back(std::move(rows_[slot_[c]]));
      piv.push_back(c);
    }
  Int q;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      std::size_t c = piv[j];
      if (out[i][c] == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), out[i][c].get_mpz_t(), out[j][c].get_mpz_t());
      submul(out[i], q, out[j], c);
    }
  rows_.clear();
  std::fill(slot_.begin(), slot_.end(), -1);
  return out;
}

}  // namespace detail

Dense row_hnf(const Dense& rows, std::size_t cols) {
  detail::HnfBuilder b(cols);
  for (const auto& r : rows) b.insert(r);
  return b.finish();
}

namespace {

struct SnfWork {
  Dense a;
  std::size_t m, n;
  bool track;
  Dense u, uinv, v;

  // Row op on rows i, j: [ri; rj] <- [[s, t], [x, y]] [ri; rj] with det 1.
  void row_op(std::size_t i, std::size_t j, const Int& s, const Int& t, const Int& x, const Int& y) {
    apply_rows(a, i, j, s, t, x, y);
    if (track) {
      apply_rows(u, i, j, s, t, x, y);
      // inverse [[y, -t], [-x, s]] applied on the right of uinv
      apply_cols(uinv, i, j, y, -x, -t, s);
    }
  }
  // Column op on cols i, j: [ci cj] <- [ci cj] [[s, x], [t, y]].
  void col_op(std::size_t i, std::size_t j, const Int& s, const Int& t, const Int& x, const Int& y) {
    apply_cols(a, i, j, s, t, x, y);
    if (track) apply_cols(v, i, j, s, t, x, y);
  }

  static void apply_rows(Dense& d, std::size_t i, std::size_t j, const Int& s, const Int& t, const Int& x,
                         const Int& y) {
    IntVec ri = d[i];
    detail::combine(d[i], s, d[j], t, 0);
    detail::combine(d[j], y, ri, x, 0);
  }
  // new ci = s*ci + t*cj ; new cj = x*ci + y*cj
  static void apply_cols(Dense& d, std::size_t i, std::size_t j, const Int& s, const Int& t, const Int& x,
                         const Int& y) {
    for (auto& row : d) {
      Int ci = row[i], cj = row[j];
      row[i] = s * ci + t * cj;
      row[j] = x * ci + y * cj;
    }
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (track) {
      std::swap(u[i], u[j]);
      for (auto& row : uinv) std::swap(row[i], row[j]);
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    if (track)
      for (auto& row : v) std::swap(row[i], row[j]);
  }
};

Dense identity_dense(std::size_t n) {
  Dense d(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

}  // namespace

SnfResult snf_with_transforms(const Dense& input, std::size_t m, std::size_t n, bool want) {
  SnfWork w{input, m, n, want, {}, {}, {}};
  if (want) {
    w.u = identity_dense(m);
    w.uinv = identity_dense(m);
    w.v = identity_dense(n);
  }
  Dense& a = w.a;
  std::size_t lim = std::min(m, n);
  Int g, s, t, q;
  std::size_t k = 0;
  for (; k < lim; ++k) {
    // smallest nonzero entry of the trailing block
    std::size_t bi = m, bj = n;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    w.swap_rows(k, bi);
    w.swap_cols(k, bj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (a[i][k] == 0) continue;
        if (mpz_divisible_p(a[i][k].get_mpz_t(), a[k][k].get_mpz_t())) {
          q = a[i][k] / a[k][k];
          w.row_op(k, i, 1, 0, -q, 1);
        } else {
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[k][k].get_mpz_t(), a[i][k].get_mpz_t());
          Int x = -(a[i][k] / g), y = a[k][k] / g;
          w.row_op(k, i, s, t, x, y);
        }
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j] == 0) continue;
        if (mpz_divisible_p(a[k][j].get_mpz_t(), a[k][k].get_mpz_t())) {
          q = a[k][j] / a[k][k];
          w.col_op(k, j, 1, 0, -q, 1);
        } else {
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[k][k].get_mpz_t(), a[k][j].get_mpz_t());
          Int x = -(a[k][j] / g), y = a[k][k] / g;
          w.col_op(k, j, s, t, x, y);
          dirty = true;
        }
      }
      if (dirty) {
        bool col_clear = true;
        for (std::size_t i = k + 1; i < m; ++i)
          if (a[i][k] != 0) col_clear = false;
        if (!col_clear) continue;
      }
      // divisibility of the trailing block by the pivot
      std::size_t bad = m;
      for (std::size_t i = k + 1; i < m && bad == m; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[k][k].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      w.row_op(k, bad, 1, 1, 0, 1);
    }
    if (a[k][k] < 0) {
      a[k][k] = -a[k][k];
      if (want) {
        for (auto& x : w.u[k]) x = -x;
        for (auto& row : w.uinv) row[k] = -row[k];
      }
    }
  }
  SnfResult r;
  r.divisors.assign(lim, Int(0));
  for (std::size_t i = 0; i < k; ++i) r.divisors[i] = a[i][i];
  if (want) {
    r.u = std::move(w.u);
    r.u_inv = std::move(w.uinv);
    r.v = std::move(w.v);
  }
  return r;
}

std::vector<Int> snf(const IntMatrix& a) {
  return snf_with_transforms(a.to_dense(), a.rows(), a.cols(), false).divisors;
}

std::size_t rank(const IntMatrix& a) { return row_hnf(a.to_dense(), a.cols()).size(); }

}  // namespace specht
