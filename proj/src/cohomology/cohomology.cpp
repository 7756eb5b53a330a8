#include <set>

#include "specht/cohomology.hpp"

namespace specht {

struct CohomologyGroup::Detail {
  Lattice cocycles;              // Z^k in cochain coordinates
  Dense u;                       // class coordinates = u * (coordinates in the HNF basis of Z^k)
  std::vector<std::size_t> pick; // rows of u read as generator coordinates, torsion then free
  std::vector<Int> modulus;      // matching divisor, 0 for free generators
};

namespace {

using i64 = std::int64_t;

struct Space {
  ModulePtr M;
  int n;
  std::size_t d;
  std::vector<i64> q;
  const SymmetricGroup& G;

  explicit Space(const ModulePtr& m) : M(m), n(m->n()), d(m->coord_count()), G(SymmetricGroup::get(m->n())) {
    for (const auto& x : m->moduli()) {
      if (!x.fits_slong_p()) throw std::overflow_error("module modulus exceeds 64 bits");
      q.push_back(x.get_si());
    }
  }
  std::size_t cells_in(int k) const { return cells(Complex::P, k, n).size(); }
  std::size_t dim(int k) const { return cells_in(k) * d; }
  const std::vector<i64>& action(std::size_t g) const { return M->coord_action(g); }

  static i64 reduce(i64 x, i64 m) {
    if (m == 0) return x;
    i64 r = x % m;
    return r < 0 ? r + m : r;
  }

  // Rows of the coordinate matrix of the coboundary C^k -> C^{k+1}.
  std::vector<std::vector<i64>> delta_rows(int k) const {
    const auto& src = cells(Complex::P, k, n);
    const auto& dst = cells(Complex::P, k + 1, n);
    std::vector<std::vector<i64>> rows(dst.size() * d, std::vector<i64>(src.size() * d, 0));
    for (std::size_t p = 0; p < dst.size(); ++p) {
      GroupChain bd = boundary(dst[p], n);
      for (const auto& t : bd.terms()) {
        std::size_t b = cell_position(t.cell, n);
        const auto& a = action(G.index(t.g));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) rows[p * d + i][b * d + j] += t.coef * a[i * d + j];
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (auto& x : rows[r]) x = reduce(x, q[r % d]);
    return rows;
  }

  std::vector<i64> row_moduli(int k) const {
    std::vector<i64> m;
    for (std::size_t c = 0; c < cells_in(k); ++c) m.insert(m.end(), q.begin(), q.end());
    return m;
  }

  // Conditions "f kills every kernel vector of the 2-boundary".
  Lattice two_cocycles() const {
    const IntMatrix& ker = kernel_d2(n);
    const std::size_t N = G.order(), cols = dim(2);
    std::set<std::vector<i64>> seen;
    std::vector<std::vector<i64>> rows;
    std::vector<i64> mods;
    std::vector<i64> acc(d * cols);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      std::fill(acc.begin(), acc.end(), 0);
      for (const auto& [c, v] : ker.row(r)) {
        std::size_t p = c / N, g = c % N;
        i64 k = v.get_si();
        const auto& a = action(g);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            if (a[i * d + j] != 0) acc[i * cols + p * d + j] += k * a[i * d + j];
      }
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<i64> row(acc.begin() + static_cast<long>(i * cols), acc.begin() + static_cast<long>((i + 1) * cols));
        bool nz = false;
        for (auto& x : row) {
          x = reduce(x, q[i]);
          nz = nz || x != 0;
        }
        if (!nz) continue;
        row.push_back(q[i]);
        if (!seen.insert(row).second) continue;
        row.pop_back();
        rows.push_back(std::move(row));
        mods.push_back(q[i]);
      }
    }
    return congruence_lattice(cols, rows, mods);
  }

  Lattice cocycles(int k) const {
    if (k == 2) return two_cocycles();
    return congruence_lattice(dim(k), delta_rows(k), row_moduli(k + 1));
  }

  // Generators of B^k: images of the unit cochains of degree k - 1 plus the
  // torsion relations of each coordinate.
  std::vector<IntVec> coboundary_generators(int k) const {
    std::vector<IntVec> gens;
    if (k > 0) {
      auto rows = delta_rows(k - 1);
      std::size_t cols = dim(k - 1);
      for (std::size_t j = 0; j < cols; ++j) {
        IntVec v(rows.size());
        bool nz = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          v[r] = Int(static_cast<long>(rows[r][j]));
          nz = nz || rows[r][j] != 0;
        }
        if (nz) gens.push_back(std::move(v));
      }
    }
    std::size_t total = dim(k);
    for (std::size_t r = 0; r < total; ++r)
      if (q[r % d] != 0) {
        IntVec v(total);
        v[r] = Int(static_cast<long>(q[r % d]));
        gens.push_back(std::move(v));
      }
    return gens;
  }
};

void check_p_cochain(const Cochain& f) {
  if (f.complex() != Complex::P) throw DomainMismatch("cohomology is computed on the resolution P");
}

nlohmann::json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

}  // namespace

IntVec cochain_coordinates(const Cochain& f) {
  const Module& M = *f.target();
  std::size_t d = M.coord_count();
  const auto& cs = cells(f.complex(), f.degree(), f.n());
  IntVec x(cs.size() * d);
  for (std::size_t p = 0; p < cs.size(); ++p) {
    IntVec c = M.to_coords(f.at(cs[p]).coords);
    for (std::size_t i = 0; i < d; ++i) x[p * d + i] = c[i];
  }
  return x;
}

Cochain cochain_from_coordinates(int degree, const ModulePtr& module, const IntVec& x) {
  std::size_t d = module->coord_count();
  const auto& cs = cells(Complex::P, degree, module->n());
  if (x.size() != cs.size() * d) throw AmbientMismatch("coordinate vector does not match the cochain group");
  Cochain f(Complex::P, degree, module);
  for (std::size_t p = 0; p < cs.size(); ++p) {
    IntVec c(x.begin() + static_cast<long>(p * d), x.begin() + static_cast<long>((p + 1) * d));
    f.set(cs[p], module->from_coords(c));
  }
  return f;
}

CohomologyGroup cohomology_group(int degree, const ModulePtr& module) {
  if (degree < 0 || degree > 2) throw IndexError("cohomology is available in degrees 0, 1, 2");
  Space sp(module);
  auto detail = std::make_shared<CohomologyGroup::Detail>();
  detail->cocycles = sp.cocycles(degree);
  const Lattice& Z = detail->cocycles;
  const std::size_t r = Z.rank();

  std::vector<IntVec> bgens = sp.coboundary_generators(degree);
  Dense ct(r, IntVec(bgens.size()));
  for (std::size_t j = 0; j < bgens.size(); ++j) {
    auto c = Z.coordinates(bgens[j]);
    if (!c) throw std::logic_error("a coboundary is not a cocycle; the coordinate action is inconsistent");
    for (std::size_t i = 0; i < r; ++i) ct[i][j] = (*c)[i];
  }

  CohomologyGroup h;
  h.degree = degree;
  h.module = module;
  std::vector<std::size_t> free_rows;
  if (bgens.empty() || r == 0) {
    detail->u.assign(r, IntVec(r));
    for (std::size_t i = 0; i < r; ++i) {
      detail->u[i][i] = 1;
      free_rows.push_back(i);
    }
  } else {
    SnfResult s = snf_with_transforms(ct, r, bgens.size());
    detail->u = s.u;
    for (std::size_t i = 0; i < r; ++i) {
      Int di = i < s.divisors.size() ? Int(abs(s.divisors[i])) : Int(0);
      if (di == 0)
        free_rows.push_back(i);
      else if (di > 1) {
        detail->pick.push_back(i);
        detail->modulus.push_back(di);
        h.torsion.push_back(di);
      }
    }
    Dense uinv = s.u_inv;
    for (std::size_t k = 0; k < detail->pick.size(); ++k) {
      std::size_t col = detail->pick[k];
      IntVec zc(r);
      for (std::size_t i = 0; i < r; ++i) zc[i] = uinv[i][col];
      IntVec x(sp.dim(degree));
      const Dense& hb = Z.hnf_rows();
      for (std::size_t i = 0; i < r; ++i)
        if (zc[i] != 0)
          for (std::size_t j = 0; j < x.size(); ++j) x[j] += zc[i] * hb[i][j];
      h.generators.push_back(cochain_from_coordinates(degree, module, x));
    }
    for (std::size_t i : free_rows) {
      IntVec x(sp.dim(degree));
      const Dense& hb = Z.hnf_rows();
      for (std::size_t t = 0; t < r; ++t)
        if (uinv[t][i] != 0)
          for (std::size_t j = 0; j < x.size(); ++j) x[j] += uinv[t][i] * hb[t][j];
      h.generators.push_back(cochain_from_coordinates(degree, module, x));
    }
  }
  if (bgens.empty() || r == 0) {
    const Dense& hb = Z.hnf_rows();
    for (std::size_t i = 0; i < r; ++i) h.generators.push_back(cochain_from_coordinates(degree, module, hb[i]));
  }
  for (std::size_t i : free_rows) {
    detail->pick.push_back(i);
    detail->modulus.push_back(0);
  }
  h.free_rank = free_rows.size();
  h.detail = std::move(detail);
  return h;
}

std::vector<Int> CohomologyGroup::class_of(const Cochain& f) const {
  if (f.target() != module || f.degree() != degree) throw DomainMismatch("cochain lives in another cochain group");
  check_p_cochain(f);
  auto c = detail->cocycles.coordinates(cochain_coordinates(f));
  if (!c) throw NotACocycle("cochain is not a cocycle");
  std::vector<Int> out;
  for (std::size_t k = 0; k < detail->pick.size(); ++k) {
    const IntVec& row = detail->u[detail->pick[k]];
    Int a;
    for (std::size_t i = 0; i < c->size(); ++i)
      if (row[i] != 0) a += row[i] * (*c)[i];
    out.push_back(detail->modulus[k] == 0 ? a : floor_mod(a, detail->modulus[k]));
  }
  return out;
}

bool CohomologyGroup::generated_by(const std::vector<Cochain>& cocycles) const {
  std::size_t t = torsion.size(), k = t + free_rank;
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < t; ++i) {
    IntVec e(k);
    e[i] = torsion[i];
    gens.push_back(std::move(e));
  }
  for (const auto& f : cocycles) gens.push_back(class_of(f));
  return Lattice::from_generators(k, gens) == Lattice::full(k);
}

nlohmann::json CohomologyGroup::to_json() const {
  nlohmann::json tors = nlohmann::json::array(), gens = nlohmann::json::array();
  for (const auto& d : torsion) tors.push_back(int_json(d));
  for (const auto& g : generators) gens.push_back(g.to_json());
  return {{"H", degree},
          {"module", module->id()},
          {"n", module->n()},
          {"ring", module->ring().to_string()},
          {"free_rank", free_rank},
          {"torsion", tors},
          {"generators", gens}};
}

CoboundaryResult is_coboundary(const Cochain& f) {
  check_p_cochain(f);
  int k = f.degree();
  if (k < 1) throw IndexError("coboundaries exist in degrees 1 and 2");
  if (k == 1 ? !coboundary(f).is_zero() : !is_cocycle(f)) throw NotACocycle("cochain is not a cocycle");
  const ModulePtr& M = f.target();
  Space sp(M);
  auto rows = sp.delta_rows(k - 1);
  std::size_t cols = sp.dim(k - 1), total = sp.dim(k);
  std::vector<std::size_t> tors;
  for (std::size_t r = 0; r < total; ++r)
    if (sp.q[r % sp.d] != 0) tors.push_back(r);
  std::optional<IntVec> x;
  if (tors.size() == total) {
    std::vector<std::int64_t> moduli(total);
    for (std::size_t r = 0; r < total; ++r) moduli[r] = sp.q[r % sp.d];
    x = solve_congruences(cols, rows, moduli, cochain_coordinates(f));
  } else {
    IntMatrix a(total, cols + tors.size());
    for (std::size_t r = 0; r < total; ++r)
      for (std::size_t j = 0; j < cols; ++j)
        if (rows[r][j] != 0) a.set(r, j, Int(static_cast<long>(rows[r][j])));
    for (std::size_t t = 0; t < tors.size(); ++t)
      a.set(tors[t], cols + t, Int(static_cast<long>(sp.q[tors[t] % sp.d])));
    x = solve(a, cochain_coordinates(f));
    if (x) x->resize(cols);
  }

  CoboundaryResult out;
  if (x) {
    Cochain g = cochain_from_coordinates(k - 1, M, *x);
    if (!(coboundary(g) == f)) throw std::logic_error("coboundary witness failed its own check");
    out.witness = std::move(g);
    out.certificate = nullptr;
    return out;
  }
  CohomologyGroup h = cohomology_group(k, M);
  nlohmann::json cls = nlohmann::json::array(), tors_json = nlohmann::json::array();
  for (const auto& c : h.class_of(f)) cls.push_back(int_json(c));
  for (const auto& d : h.torsion) tors_json.push_back(int_json(d));
  out.certificate = {{"H", k}, {"free_rank", h.free_rank}, {"torsion", tors_json}, {"class", cls}};
  return out;
}

// ---------------------------------------------------------------- pushforward

namespace {

ModulePtr ambient_module(const Module& m) {
  if (m.blocks().size() != 1) throw DomainMismatch("no default ambient module for a stacked target");
  static const char* ids[] = {"S0", "M1", "M2"};
  return make_module(ids[static_cast<int>(m.blocks()[0])], m.n(), m.ring());
}

bool is_m2(const Module& m) { return m.blocks() == std::vector<Block>{Block::M2}; }

Cochain push_matrix(const IntMatrix& h, const Cochain& f, const ModulePtr& target) {
  const Module& src = *f.target();
  if (h.cols() != src.ambient_dim() || h.rows() != target->ambient_dim() || target->n() != src.n())
    throw DomainMismatch("module map does not fit the source and target ambients");
  for (const auto& b : src.lattice().basis_vectors())
    if (!target->contains(h * b)) throw DomainMismatch("module map does not land in " + target->id());
  for (const auto& b : src.relations().basis_vectors())
    if (!target->is_zero(h * b))
      throw DomainMismatch("module map is not defined on " + src.id() + " over " + src.ring().to_string());
  Cochain out(f.complex(), f.degree(), target);
  for (const auto& [c, v] : f.values()) out.set(c, h * v.coords);
  return out;
}

}  // namespace

Cochain pushforward(const std::string& map_id, const Cochain& f, ModulePtr target) {
  const Module& src = *f.target();
  const int n = src.n();
  if (map_id == "id") {
    if (target && target != f.target()) throw DomainMismatch("identity map needs the same module");
    return f;
  }
  if (map_id.size() >= 2 && map_id[0] == 'f' && map_id.find_first_not_of("012", 1) == std::string::npos) {
    if (!is_m2(src)) throw DomainMismatch("f-maps are defined on M2");
    std::string which = map_id.substr(1);
    if (!target) {
      static const char* singles[] = {"S0", "S1", "S2"};
      target = make_module(which.size() == 1 ? singles[which[0] - '0'] : "IM_F" + which, n, src.ring());
    }
    return push_matrix(f_stack_matrix(which, n), f, target);
  }
  if (map_id == "mu") {
    if (!is_m2(src)) throw DomainMismatch("mu is defined on M2");
    if (!target) target = make_module("M1", n, src.ring());
    return push_matrix(mu_matrix(n), f, target);
  }
  if (map_id == "reduce" || map_id == "include") {
    if (!target) {
      if (map_id == "reduce") throw DomainMismatch("reduction needs a target module");
      target = ambient_module(src);
    }
    if (target->blocks() != src.blocks()) throw DomainMismatch("source and target have different ambients");
    if (map_id == "reduce" && target->id() != src.id())
      throw DomainMismatch("reduction keeps the module and changes the ring");
    return push_matrix(IntMatrix::identity(src.ambient_dim()), f, target);
  }
  throw IndexError("unknown module map '" + map_id + "'");
}

Cochain reduce_mod(const Cochain& f, long m) {
  const Module& src = *f.target();
  return pushforward("reduce", f, make_module(src.id(), src.n(), RingSpec::Zmod(m)));
}

}  // namespace specht
