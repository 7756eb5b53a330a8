#include <algorithm>

#include "specht/resolution.hpp"

namespace specht {

Cochain::Cochain(Complex cx, int degree, ModulePtr target) : cx_(cx), degree_(degree), target_(std::move(target)) {
  if (!target_) throw DomainMismatch("cochain needs a target module");
  if (degree < 0 || degree > 2) throw IndexError("cochains exist in degrees 0, 1, 2");
  IntVec zero(target_->ambient_dim());
  for (const auto& c : cells(cx, degree, target_->n())) values_.emplace(c, ModuleElement{target_, zero});
}

const ModuleElement& Cochain::at(const Cell& c) const {
  auto it = values_.find(c);
  if (it == values_.end()) throw IndexError("cell " + c.label() + " is not a generating cell of this cochain");
  return it->second;
}

void Cochain::set(const Cell& c, const IntVec& ambient) {
  auto it = values_.find(c);
  if (it == values_.end()) throw IndexError("cell " + c.label() + " is not a generating cell of this cochain");
  it->second = ModuleElement::make(target_, ambient);
}

ModuleElement Cochain::evaluate(const GroupChain& x) const {
  IntVec sum(target_->ambient_dim());
  if (x.n() != 0 && x.n() != n()) throw SizeMismatch("chain and cochain have different n");
  for (const auto& t : x.terms()) {
    IntVec y = target_->act(t.g, at(t.cell).coords);
    Int k(static_cast<long>(t.coef));
    for (std::size_t i = 0; i < sum.size(); ++i)
      if (y[i] != 0) mpz_addmul(sum[i].get_mpz_t(), k.get_mpz_t(), y[i].get_mpz_t());
  }
  return ModuleElement{target_, target_->canonical(sum)};
}

void Cochain::check_same(const Cochain& o) const {
  if (cx_ != o.cx_ || degree_ != o.degree_ || target_ != o.target_)
    throw DomainMismatch("cochains live in different groups");
}

Cochain Cochain::operator+(const Cochain& o) const {
  check_same(o);
  Cochain out = *this;
  for (auto& [c, v] : out.values_) {
    const IntVec& w = o.at(c).coords;
    IntVec s = v.coords;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += w[i];
    v.coords = target_->canonical(s);
  }
  return out;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + o.scaled(-1); }

Cochain Cochain::scaled(const Int& k) const {
  Cochain out = *this;
  for (auto& [c, v] : out.values_) {
    IntVec s = v.coords;
    for (auto& x : s) x *= k;
    v.coords = target_->canonical(s);
  }
  return out;
}

bool Cochain::operator==(const Cochain& o) const {
  if (cx_ != o.cx_ || degree_ != o.degree_ || target_ != o.target_) return false;
  for (const auto& [c, v] : values_)
    if (v.coords != o.at(c).coords) return false;
  return true;
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [&](const auto& kv) { return target_->is_zero(kv.second.coords); });
}

nlohmann::json Cochain::to_json() const {
  nlohmann::json vals = nlohmann::json::object();
  for (const auto& [c, v] : values_) vals[c.label()] = v.to_json().at("coords");
  return {{"degree", degree_},
          {"complex", cx_ == Complex::P ? "P" : "R"},
          {"module", target_->id()},
          {"n", n()},
          {"ring", target_->ring().to_string()},
          {"values", vals}};
}

Cochain Cochain::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  Complex cx = j.value("complex", std::string("P")) == "R" ? Complex::R : Complex::P;
  auto m = make_module(j.at("module").get<std::string>(), n, RingSpec::parse(j.at("ring").get<std::string>()));
  Cochain f(cx, j.at("degree").get<int>(), m);
  auto labels = m->labels();
  for (const auto& [label, coords] : j.at("values").items()) {
    IntVec v(m->ambient_dim());
    for (const auto& [name, x] : coords.items()) {
      auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end()) throw IndexError("unknown coordinate '" + name + "'");
      v[static_cast<std::size_t>(it - labels.begin())] =
          x.is_string() ? Int(x.get<std::string>()) : Int(static_cast<long>(x.get<std::int64_t>()));
    }
    f.set(Cell::parse(label, n, cx), v);
  }
  return f;
}

Cochain zero_cochain(Complex cx, int degree, ModulePtr target) { return Cochain(cx, degree, std::move(target)); }

// ---------------------------------------------------------------- named families

const std::vector<std::string>& cocycle_families() {
  static const std::vector<std::string> f = {"kappa0", "kappa1",   "kappa2", "hat_kappa2", "alpha0",
                                             "alpha1", "alpha2",   "hat_alpha2", "beta0",  "beta1",
                                             "beta2",  "hat_beta2", "phi",    "zeta"};
  return f;
}

namespace {

Block family_block(const std::string& family) {
  if (family.back() == '0') return Block::Trivial;
  if (family.back() == '1') return Block::M1;
  return Block::M2;
}

IntVec scaled(IntVec v, const Int& r) {
  for (auto& x : v) x *= r;
  return v;
}

IntVec sum(std::initializer_list<std::pair<int, IntVec>> parts) {
  IntVec out;
  for (const auto& [k, v] : parts) {
    if (out.empty()) out.assign(v.size(), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += k * v[i];
  }
  return out;
}

}  // namespace

Cochain named_cocycle(const std::string& family, const Int& r, int n, RingSpec ring) {
  const auto& fams = cocycle_families();
  if (std::find(fams.begin(), fams.end(), family) == fams.end())
    throw IndexError("unknown cocycle family '" + family + "'");
  std::string id = family == "zeta" ? "K12" : family_block(family) == Block::Trivial ? "S0"
                                          : family_block(family) == Block::M1       ? "M1"
                                                                                     : "M2";
  return named_cocycle(family, r, make_module(id, n, ring));
}

Cochain named_cocycle(const std::string& family, const Int& r, ModulePtr target) {
  const auto& fams = cocycle_families();
  if (std::find(fams.begin(), fams.end(), family) == fams.end())
    throw IndexError("unknown cocycle family '" + family + "'");
  const int n = target->n();
  const Block block = family_block(family);
  if (target->blocks() != std::vector<Block>{block})
    throw DomainMismatch("family " + family + " needs a target inside " +
                         (block == Block::Trivial ? std::string("the trivial module")
                          : block == Block::M1    ? std::string("M1")
                                                  : std::string("M2")));
  const RingSpec ring = target->ring();
  bool two_torsion = family.find("kappa") != std::string::npos || family.find("beta") != std::string::npos;
  if (two_torsion && !ring.in_torsion(r, 2))
    throw TorsionViolation("family " + family + " needs r in R[2]; " + r.get_str() + " is not 2-torsion in " +
                           ring.to_string());
  if (family.find("beta") != std::string::npos && n < 4) throw SizeMismatch("beta families need n >= 4");
  if (family == "zeta" && n % 2 != 0) throw DomainMismatch("zeta is defined only for even n");

  IntVec invariant = block == Block::Trivial ? IntVec{Int(1)} : block == Block::M1 ? sum_t(n) : u_vec(n);
  auto v = [&](int i, int j) { return v_vec(n, i, j); };

  if (family == "phi") {
    Cochain f(Complex::R, 2, target);
    for (const auto& c : cells(Complex::R, 2, n)) {
      const auto& x = c.idx;
      IntVec val(pair_count(n));
      if (c.kind == CellKind::CT) {
        val = v(x[0], x[1]);
      } else if (c.kind == CellKind::DT) {
        int i = x[0], j = x[1], k = x[2], l = x[3];
        if (i < k && k < j && j < l)
          val = sum({{1, v(i, k)}, {-1, v(i, l)}, {-1, v(k, j)}, {1, v(j, l)}});
        else if (k < i && i < l && l < j)
          val = sum({{-1, v(i, k)}, {1, v(k, j)}, {1, v(i, l)}, {-1, v(l, j)}});
      } else {
        int i = x[0], k = x[1], j = x[2];
        if ((i < k && k < j) || (j < i && i < k) || (k < j && j < i)) val = sum({{1, v(i, j)}, {-1, v(k, j)}});
      }
      f.set(c, scaled(val, r));
    }
    return f;
  }

  bool degree_one = family.find("kappa") != std::string::npos || family == "zeta";
  Cochain f(Complex::P, degree_one ? 1 : 2, target);
  for (const auto& c : cells(Complex::P, degree_one ? 1 : 2, n)) {
    const auto& x = c.idx;
    IntVec val(target->ambient_dim());
    if (degree_one) {
      if (family == "hat_kappa2")
        val = v(x[0], x[0] + 1);
      else if (family == "zeta") {
        long c2 = static_cast<long>(n - 1) * (n - 2) / 2;
        val = sum({{static_cast<int>(c2), v(x[0], x[0] + 1)}, {-(n - 1), w_vec(n, x[0])}, {1, u_vec(n)}});
      } else
        val = invariant;
    } else if (c.kind == CellKind::C && family.find("alpha") != std::string::npos) {
      val = family == "hat_alpha2" ? v(x[0], x[0] + 1) : invariant;
    } else if (c.kind == CellKind::D && family.find("beta") != std::string::npos) {
      int i = x[0], j = x[1];
      val = family == "hat_beta2"
                ? sum({{1, v(i, i + 1)}, {1, v(j, j + 1)}, {1, v(i, j)}, {1, v(i, j + 1)}, {1, v(i + 1, j)},
                       {1, v(i + 1, j + 1)}})
                : invariant;
    }
    f.set(c, scaled(val, r));
  }
  return f;
}

Cochain coboundary(const Cochain& f) {
  if (f.degree() >= 2) throw IndexError("cochains of degree 3 are not materialised");
  Cochain out(f.complex(), f.degree() + 1, f.target());
  for (const auto& c : cells(f.complex(), f.degree() + 1, f.n())) out.set(c, f.evaluate(boundary(c, f.n())).coords);
  return out;
}

Cochain pull_back_along_psi(const Cochain& f) {
  if (f.complex() != Complex::R) throw DomainMismatch("pull-back along psi needs a cochain on R");
  Cochain out(Complex::P, f.degree(), f.target());
  for (const auto& c : cells(Complex::P, f.degree(), f.n())) out.set(c, f.evaluate(psi(c, f.n())).coords);
  return out;
}

}  // namespace specht
