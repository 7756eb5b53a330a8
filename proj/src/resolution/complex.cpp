#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "specht/resolution.hpp"

namespace specht {
namespace {

int arity(CellKind k) {
  switch (k) {
    case CellKind::Star:
    case CellKind::StarR:
      return 0;
    case CellKind::E:
    case CellKind::C:
    case CellKind::B:
      return 1;
    case CellKind::D:
    case CellKind::X:
    case CellKind::CT:
      return 2;
    case CellKind::ET:
      return 3;
    case CellKind::DT:
      return 4;
  }
  return 0;
}

const char* prefix(CellKind k) {
  switch (k) {
    case CellKind::Star:
    case CellKind::StarR:
      return "*";
    case CellKind::E:
      return "e";
    case CellKind::C:
      return "c";
    case CellKind::B:
      return "b";
    case CellKind::D:
      return "d";
    case CellKind::X:
      return "x";
    case CellKind::CT:
      return "ct";
    case CellKind::DT:
      return "dt";
    case CellKind::ET:
      return "et";
  }
  return "?";
}

Cell mk(CellKind k, std::vector<int> idx, int n) { return Cell::make(k, std::move(idx), n); }

}  // namespace

Cell Cell::make(CellKind kind, std::vector<int> idx, int n) {
  if (static_cast<int>(idx.size()) != arity(kind))
    throw IndexError(std::string("cell ") + prefix(kind) + " takes " + std::to_string(arity(kind)) + " indices");
  for (int x : idx)
    if (x < 1 || x > n) throw IndexError("cell index out of range");
  bool ok = true;
  switch (kind) {
    case CellKind::E:
    case CellKind::C:
      ok = idx[0] <= n - 1;
      break;
    case CellKind::B:
      ok = idx[0] <= n - 2;
      break;
    case CellKind::D:
      ok = idx[1] <= n - 1 && idx[1] >= idx[0] + 2;
      break;
    case CellKind::X:
    case CellKind::CT:
      ok = idx[0] < idx[1];
      break;
    case CellKind::DT:
      ok = idx[0] < idx[1] && idx[2] < idx[3] && idx[0] != idx[2] && idx[0] != idx[3] && idx[1] != idx[2] &&
           idx[1] != idx[3];
      break;
    case CellKind::ET:
      ok = idx[0] != idx[1] && idx[1] != idx[2] && idx[0] != idx[2];
      break;
    default:
      break;
  }
  if (!ok) throw IndexError(std::string("invalid indices for cell ") + prefix(kind));
  Cell c;
  c.kind = kind;
  std::copy(idx.begin(), idx.end(), c.idx.begin());
  return c;
}

Cell Cell::parse(const std::string& label, int n, Complex cx) {
  if (label == "*") return make(cx == Complex::P ? CellKind::Star : CellKind::StarR, {}, n);
  std::vector<std::string> parts;
  std::stringstream ss(label);
  for (std::string p; std::getline(ss, p, '_');) parts.push_back(p);
  static const std::vector<std::pair<std::string, CellKind>> kinds = {
      {"e", CellKind::E},  {"c", CellKind::C},   {"b", CellKind::B},   {"d", CellKind::D},
      {"x", CellKind::X},  {"ct", CellKind::CT}, {"dt", CellKind::DT}, {"et", CellKind::ET}};
  for (const auto& [name, kind] : kinds) {
    if (parts.empty() || parts[0] != name) continue;
    std::vector<int> idx;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(parts[i], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != parts[i].size()) throw IndexError("bad cell label '" + label + "'");
      idx.push_back(v);
    }
    return make(kind, idx, n);
  }
  throw IndexError("bad cell label '" + label + "'");
}

Complex Cell::complex() const { return kind < CellKind::StarR ? Complex::P : Complex::R; }

int Cell::dim() const {
  switch (kind) {
    case CellKind::Star:
    case CellKind::StarR:
      return 0;
    case CellKind::E:
    case CellKind::X:
      return 1;
    default:
      return 2;
  }
}

std::string Cell::label() const {
  std::string s = prefix(kind);
  for (int i = 0; i < arity(kind); ++i) s += "_" + std::to_string(idx[i]);
  return s;
}

const std::vector<Cell>& cells(Complex cx, int dim, int n) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<Cell>> cache;
  if (n < 2) throw SizeMismatch("cells need n >= 2");
  if (dim < 0 || dim > 2) throw IndexError("only dimensions 0, 1, 2 are materialised");
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(static_cast<int>(cx), dim, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Cell> out;
  if (cx == Complex::P) {
    if (dim == 0) out.push_back(mk(CellKind::Star, {}, n));
    if (dim == 1)
      for (int i = 1; i < n; ++i) out.push_back(mk(CellKind::E, {i}, n));
    if (dim == 2) {
      for (int i = 1; i < n; ++i) out.push_back(mk(CellKind::C, {i}, n));
      for (int i = 1; i + 1 < n; ++i) out.push_back(mk(CellKind::B, {i}, n));
      for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) out.push_back(mk(CellKind::D, {i, j}, n));
    }
  } else {
    if (dim == 0) out.push_back(mk(CellKind::StarR, {}, n));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (dim == 1) out.push_back(mk(CellKind::X, {i, j}, n));
        if (dim == 2) out.push_back(mk(CellKind::CT, {i, j}, n));
      }
    if (dim == 2) {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
              if (k != i && k != j && l != i && l != j) out.push_back(mk(CellKind::DT, {i, j, k, l}, n));
      for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
          for (int j = 1; j <= n; ++j)
            if (i != k && k != j && i != j) out.push_back(mk(CellKind::ET, {i, k, j}, n));
    }
  }
  std::sort(out.begin(), out.end());
  return cache.emplace(key, std::move(out)).first->second;
}

std::size_t cell_position(const Cell& c, int n) {
  const auto& cs = cells(c.complex(), c.dim(), n);
  auto it = std::lower_bound(cs.begin(), cs.end(), c);
  if (it == cs.end() || *it != c) throw IndexError("cell " + c.label() + " does not exist for this n");
  return static_cast<std::size_t>(it - cs.begin());
}

std::size_t chain_index(const Cell& c, std::size_t g, int n) {
  return cell_position(c, n) * SymmetricGroup::get(n).order() + g;
}

// ---------------------------------------------------------------- chains

GroupChain GroupChain::of(const Cell& c, int n, std::int64_t coef) {
  GroupChain x(n);
  x.add(coef, Permutation::identity(n), c);
  return x;
}

void GroupChain::add(std::int64_t coef, const Permutation& g, const Cell& c) {
  if (g.n() != n_) throw SizeMismatch("group element has the wrong degree");
  if (!terms_.empty() && (terms_.front().cell.dim() != c.dim() || terms_.front().cell.complex() != c.complex()))
    throw SizeMismatch("chain terms must share complex and dimension");
  terms_.push_back({coef, g, c});
  normalize();
}

void GroupChain::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const ChainTerm& a, const ChainTerm& b) {
    return std::tie(a.g, a.cell) < std::tie(b.g, b.cell);
  });
  std::vector<ChainTerm> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().g == t.g && out.back().cell == t.cell)
      out.back().coef += t.coef;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const ChainTerm& t) { return t.coef == 0; });
  terms_ = std::move(out);
}

GroupChain& GroupChain::operator+=(const GroupChain& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != 0 && o.n_ != n_) throw SizeMismatch("adding chains for different n");
  if (!terms_.empty() && !o.terms_.empty() &&
      (terms_.front().cell.dim() != o.terms_.front().cell.dim() ||
       terms_.front().cell.complex() != o.terms_.front().cell.complex()))
    throw SizeMismatch("chain terms must share complex and dimension");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

GroupChain GroupChain::operator+(const GroupChain& o) const {
  GroupChain x = *this;
  return x += o;
}

GroupChain GroupChain::operator-(const GroupChain& o) const {
  GroupChain x = *this;
  return x += o.scaled(-1);
}

GroupChain GroupChain::left(const Permutation& g) const {
  GroupChain x(n_);
  for (const auto& t : terms_) x.terms_.push_back({t.coef, g * t.g, t.cell});
  x.normalize();
  return x;
}

GroupChain GroupChain::scaled(std::int64_t k) const {
  GroupChain x(n_);
  for (const auto& t : terms_) x.terms_.push_back({t.coef * k, t.g, t.cell});
  x.normalize();
  return x;
}

bool GroupChain::operator==(const GroupChain& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != o.terms_[i].coef || terms_[i].g != o.terms_[i].g || terms_[i].cell != o.terms_[i].cell)
      return false;
  return true;
}

std::string GroupChain::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) os << (t.coef < 0 ? " - " : " + ");
    else if (t.coef < 0) os << "-";
    std::int64_t a = t.coef < 0 ? -t.coef : t.coef;
    if (a != 1) os << a << "*";
    os << t.g.to_string() << "." << t.cell.label();
  }
  return os.str();
}

// ---------------------------------------------------------------- boundaries

namespace {

struct Builder {
  int n;
  GroupChain out;
  explicit Builder(int n_) : n(n_), out(n_) {}
  Permutation id() const { return Permutation::identity(n); }
  Permutation s(int i) const { return Permutation::s(n, i); }
  Permutation t(int i, int j) const { return Permutation::transposition(n, i, j); }
  void add(std::int64_t k, const Permutation& g, const Cell& c) { out.add(k, g, c); }
};

Cell x_cell(int i, int j, int n) { return mk(CellKind::X, {std::min(i, j), std::max(i, j)}, n); }

}  // namespace

GroupChain boundary(const Cell& c, int n) {
  Builder b(n);
  const auto& x = c.idx;
  switch (c.kind) {
    case CellKind::Star:
    case CellKind::StarR:
      throw IndexError("boundary of a 0-cell is not defined");
    case CellKind::E: {
      Cell star = mk(CellKind::Star, {}, n);
      b.add(1, b.s(x[0]), star);
      b.add(-1, b.id(), star);
      break;
    }
    case CellKind::C: {
      Cell e = mk(CellKind::E, {x[0]}, n);
      b.add(1, b.s(x[0]), e);
      b.add(1, b.id(), e);
      break;
    }
    case CellKind::B: {
      int i = x[0];
      Cell ei = mk(CellKind::E, {i}, n), ej = mk(CellKind::E, {i + 1}, n);
      b.add(1, b.id(), ej);
      b.add(-1, b.s(i), ej);
      b.add(1, b.s(i + 1) * b.s(i), ej);
      b.add(-1, b.id(), ei);
      b.add(1, b.s(i + 1), ei);
      b.add(-1, b.s(i) * b.s(i + 1), ei);
      break;
    }
    case CellKind::D: {
      int i = x[0], j = x[1];
      Cell ei = mk(CellKind::E, {i}, n), ej = mk(CellKind::E, {j}, n);
      b.add(1, b.s(j), ei);
      b.add(-1, b.id(), ei);
      b.add(-1, b.s(i), ej);
      b.add(1, b.id(), ej);
      break;
    }
    case CellKind::X: {
      Cell star = mk(CellKind::StarR, {}, n);
      b.add(1, b.t(x[0], x[1]), star);
      b.add(-1, b.id(), star);
      break;
    }
    case CellKind::CT: {
      Cell e = x_cell(x[0], x[1], n);
      b.add(1, b.t(x[0], x[1]), e);
      b.add(1, b.id(), e);
      break;
    }
    case CellKind::DT: {
      int i = x[0], j = x[1], k = x[2], l = x[3];
      Cell xij = x_cell(i, j, n), xkl = x_cell(k, l, n);
      b.add(1, b.id(), xij);
      b.add(-1, b.t(k, l), xij);
      b.add(-1, b.id(), xkl);
      b.add(1, b.t(i, j), xkl);
      break;
    }
    case CellKind::ET: {
      int i = x[0], k = x[1], j = x[2];
      b.add(1, b.t(i, j), x_cell(j, k, n));
      b.add(1, b.id(), x_cell(i, j, n));
      b.add(-1, b.t(i, k), x_cell(i, j, n));
      b.add(-1, b.id(), x_cell(i, k, n));
      break;
    }
  }
  return b.out;
}

GroupChain boundary(const GroupChain& x) {
  GroupChain out(x.n());
  for (const auto& t : x.terms()) out += boundary(t.cell, x.n()).left(t.g).scaled(t.coef);
  return out;
}

GroupChain psi(const Cell& c, int n) {
  Builder b(n);
  const auto& x = c.idx;
  switch (c.kind) {
    case CellKind::Star:
      b.add(1, b.id(), mk(CellKind::StarR, {}, n));
      break;
    case CellKind::E:
      b.add(1, b.id(), mk(CellKind::X, {x[0], x[0] + 1}, n));
      break;
    case CellKind::C:
      b.add(1, b.id(), mk(CellKind::CT, {x[0], x[0] + 1}, n));
      break;
    case CellKind::D:
      b.add(1, b.id(), mk(CellKind::DT, {x[1], x[1] + 1, x[0], x[0] + 1}, n));
      break;
    case CellKind::B: {
      int i = x[0];
      b.add(1, b.id(), mk(CellKind::ET, {i + 2, i, i + 1}, n));
      b.add(-1, b.id(), mk(CellKind::ET, {i, i + 2, i + 1}, n));
      b.add(-1, b.s(i) * b.s(i + 1), mk(CellKind::CT, {i, i + 1}, n));
      b.add(1, b.s(i + 1) * b.s(i), mk(CellKind::CT, {i + 1, i + 2}, n));
      break;
    }
    default:
      throw DomainMismatch("psi is defined on cells of P");
  }
  return b.out;
}

GroupChain psi(const GroupChain& x) {
  GroupChain out(x.n());
  for (const auto& t : x.terms()) out += psi(t.cell, x.n()).left(t.g).scaled(t.coef);
  return out;
}

IntMatrix boundary_matrix(Complex cx, int dim, int n) {
  if (dim < 1) throw IndexError("boundary matrices start in dimension 1");
  const auto& G = SymmetricGroup::get(n);
  const auto& src = cells(cx, dim, n);
  const auto& dst = cells(cx, dim - 1, n);
  std::size_t N = G.order();
  IntMatrix m(dst.size() * N, src.size() * N);
  for (std::size_t p = 0; p < src.size(); ++p) {
    GroupChain d = boundary(src[p], n);
    std::vector<std::tuple<std::int64_t, std::size_t, std::size_t>> terms;
    for (const auto& t : d.terms()) terms.emplace_back(t.coef, G.index(t.g), cell_position(t.cell, n));
    for (std::size_t g = 0; g < N; ++g)
      for (const auto& [k, h, q] : terms) m.add(q * N + G.mul(g, h), p * N + g, Int(static_cast<long>(k)));
  }
  return m;
}

}  // namespace specht
