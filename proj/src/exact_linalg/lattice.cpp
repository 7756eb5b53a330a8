#include <algorithm>

#include "detail.hpp"

namespace specht {

Lattice::Lattice(std::size_t ambient) : ambient_(ambient) {}

Lattice Lattice::from_generators(std::size_t ambient, const std::vector<IntVec>& gens) {
  detail::HnfBuilder b(ambient);
  for (const auto& g : gens) {
    if (g.size() != ambient) throw DimensionError("lattice generator has wrong length");
    b.insert(g);
  }
  Lattice l(ambient);
  auto canon = std::make_shared<Canonical>();
  canon->rows = b.finish();
  for (const auto& r : canon->rows)
    for (std::size_t c = 0; c < ambient; ++c)
      if (r[c] != 0) {
        canon->pivots.push_back(c);
        break;
      }
  l.basis_ = canon->rows;
  l.canon_ = std::move(canon);
  return l;
}

Lattice Lattice::from_independent(std::size_t ambient, std::vector<IntVec> basis) {
  Lattice l(ambient);
  for (const auto& v : basis)
    if (v.size() != ambient) throw DimensionError("lattice basis vector has wrong length");
  l.basis_ = std::move(basis);
  return l;
}

Lattice Lattice::from_columns(const IntMatrix& generators) {
  return from_generators(generators.rows(), generators.columns());
}

Lattice Lattice::full(std::size_t ambient) { return scaled_full(ambient, 1); }

Lattice Lattice::scaled_full(std::size_t ambient, const Int& m) {
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < ambient; ++i) {
    IntVec e(ambient);
    e[i] = m;
    gens.push_back(std::move(e));
  }
  return from_generators(ambient, gens);
}

const Lattice::Canonical& Lattice::canonical() const {
  if (!canon_) {
    auto canon = std::make_shared<Canonical>();
    canon->rows = row_hnf(basis_, ambient_);
    if (canon->rows.size() != basis_.size()) throw DimensionError("lattice basis is not independent");
    for (const auto& r : canon->rows)
      for (std::size_t c = 0; c < ambient_; ++c)
        if (r[c] != 0) {
          canon->pivots.push_back(c);
          break;
        }
    canon_ = std::move(canon);
  }
  return *canon_;
}

const Dense& Lattice::hnf_rows() const { return canonical().rows; }
const std::vector<std::size_t>& Lattice::pivots() const { return canonical().pivots; }

IntMatrix Lattice::basis() const { return IntMatrix::from_columns(ambient_, basis_); }

std::optional<IntVec> Lattice::coordinates(const IntVec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match lattice ambient");
  const auto& c = canonical();
  IntVec x = v, coords(c.rows.size());
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    std::size_t p = c.pivots[i];
    if (x[p] == 0) continue;
    if (!mpz_divisible_p(x[p].get_mpz_t(), c.rows[i][p].get_mpz_t())) return std::nullopt;
    mpz_divexact(coords[i].get_mpz_t(), x[p].get_mpz_t(), c.rows[i][p].get_mpz_t());
    detail::submul(x, coords[i], c.rows[i], p);
  }
  if (!is_zero(x)) return std::nullopt;
  return coords;
}

bool Lattice::contains(const IntVec& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

IntVec Lattice::reduce(const IntVec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match lattice ambient");
  const auto& c = canonical();
  IntVec x = v;
  Int q;
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    std::size_t p = c.pivots[i];
    mpz_fdiv_q(q.get_mpz_t(), x[p].get_mpz_t(), c.rows[i][p].get_mpz_t());
    detail::submul(x, q, c.rows[i], p);
  }
  return x;
}

Lattice Lattice::operator+(const Lattice& o) const {
  if (o.ambient_ != ambient_) throw DimensionError("lattice sum of different ambients");
  std::vector<IntVec> g = basis_;
  g.insert(g.end(), o.basis_.begin(), o.basis_.end());
  return from_generators(ambient_, g);
}

Lattice Lattice::scaled(const Int& k) const {
  if (k == 0) return Lattice(ambient_);
  std::vector<IntVec> g = basis_;
  for (auto& v : g)
    for (auto& x : v) x *= k;
  return from_independent(ambient_, std::move(g));
}

bool Lattice::operator==(const Lattice& o) const {
  return ambient_ == o.ambient_ && rank() == o.rank() && hnf_rows() == o.hnf_rows();
}

Index lattice_index(const Lattice& sub, const Lattice& sup) {
  if (sub.ambient_rank() != sup.ambient_rank()) throw ContainmentError("lattices live in different ambients");
  Dense coords;
  for (const auto& b : sub.basis_vectors()) {
    auto c = sup.coordinates(b);
    if (!c) throw ContainmentError("sublattice is not contained in the superlattice");
    coords.push_back(std::move(*c));
  }
  Index idx;
  if (sub.rank() != sup.rank()) {
    idx.infinite = true;
    return idx;
  }
  Dense h = row_hnf(coords, sup.rank());
  idx.value = 1;
  for (std::size_t i = 0; i < h.size(); ++i) idx.value *= h[i][i];
  return idx;
}

}  // namespace specht
