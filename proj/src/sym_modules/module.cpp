#include <map>
#include <tuple>

#include "specht/sym_modules.hpp"

namespace specht {
namespace {

std::size_t block_dim(Block b, int n) {
  switch (b) {
    case Block::Trivial:
      return 1;
    case Block::M1:
      return static_cast<std::size_t>(n);
    case Block::M2:
      return pair_count(n);
  }
  return 0;
}

std::vector<std::uint32_t> ambient_map(const Permutation& s, int n, const std::vector<Block>& blocks) {
  std::vector<std::uint32_t> map;
  std::uint32_t off = 0;
  for (Block b : blocks) {
    std::size_t d = block_dim(b, n);
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t to = k;
      if (b == Block::M1) {
        to = static_cast<std::size_t>(s(static_cast<int>(k) + 1) - 1);
      } else if (b == Block::M2) {
        auto [i, j] = pair_at(n, k);
        to = pair_index(n, s(i), s(j));
      }
      map.push_back(off + static_cast<std::uint32_t>(to));
    }
    off += static_cast<std::uint32_t>(d);
  }
  return map;
}

IntVec permute(const std::vector<std::uint32_t>& map, const IntVec& x) {
  IntVec y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[map[k]] = x[k];
  return y;
}

}  // namespace

Module::Module(std::string id, int n, RingSpec ring, std::vector<Block> blocks, const std::vector<IntVec>& sub_gens,
               bool whole_ambient, const std::vector<IntVec>& rel_gens)
    : id_(std::move(id)), n_(n), ring_(ring), blocks_(std::move(blocks)) {
  if (n < 2 || n > 7) throw SizeMismatch("module degree must satisfy 2 <= n <= 7");
  for (Block b : blocks_) dim_ += block_dim(b, n);
  for (const auto& g : sub_gens)
    if (g.size() != dim_) throw AmbientMismatch("generator length does not match the ambient");
  for (const auto& g : rel_gens)
    if (g.size() != dim_) throw AmbientMismatch("relation length does not match the ambient");
  relations_ = Lattice::from_generators(dim_, rel_gens);
  if (!ring_.is_z()) relations_ = relations_ + Lattice::scaled_full(dim_, Int(ring_.m));
  lattice_ = whole_ambient ? Lattice::full(dim_) : Lattice::from_generators(dim_, sub_gens);
  lattice_ = lattice_ + relations_;
  build_coordinates();
}

std::vector<std::string> Module::labels() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < dim_; ++k) out.push_back(ambient_label(n_, blocks_, k));
  return out;
}

const std::vector<std::uint32_t>& Module::ambient_perm(std::size_t perm_index) const {
  std::call_once(perm_once_, [this] {
    const auto& g = SymmetricGroup::get(n_);
    perm_maps_.resize(g.order());
    for (std::size_t a = 0; a < g.order(); ++a) perm_maps_[a] = ambient_map(g.element(a), n_, blocks_);
  });
  return perm_maps_.at(perm_index);
}

IntVec Module::act(std::size_t perm_index, const IntVec& x) const {
  if (x.size() != dim_) throw AmbientMismatch("vector length does not match the module ambient");
  return permute(ambient_perm(perm_index), x);
}

IntVec Module::act(const Permutation& s, const IntVec& x) const {
  if (s.n() != n_) throw SizeMismatch("permutation degree does not match the module");
  if (x.size() != dim_) throw AmbientMismatch("vector length does not match the module ambient");
  return permute(ambient_map(s, n_, blocks_), x);
}

void Module::build_coordinates() {
  bool whole = lattice_.rank() == dim_ && lattice_ == Lattice::full(dim_);
  bool plain_rel = relations_.rank() == 0 || (!ring_.is_z() && relations_ == Lattice::scaled_full(dim_, Int(ring_.m)));
  if (whole && plain_rel) {
    identity_coords_ = true;
    moduli_.assign(dim_, Int(ring_.m));
    for (std::size_t k = 0; k < dim_; ++k) {
      IntVec e(dim_);
      e[k] = 1;
      coord_basis_.push_back(std::move(e));
    }
    return;
  }
  const Dense& lb = lattice_.hnf_rows();
  std::size_t k = lb.size();
  const Dense& rb = relations_.hnf_rows();
  std::size_t s = rb.size();
  if (k == 0) return;
  // relation coordinates (in the L basis) as columns of a k x s matrix
  Dense rt(k, IntVec(s));
  for (std::size_t j = 0; j < s; ++j) {
    auto y = lattice_.coordinates(rb[j]);
    if (!y) throw std::logic_error("relations escape the module lattice");
    for (std::size_t i = 0; i < k; ++i) rt[i][j] = (*y)[i];
  }
  SnfResult r = snf_with_transforms(rt, k, s, true);
  for (std::size_t i = 0; i < k; ++i) {
    Int d = i < r.divisors.size() ? r.divisors[i] : Int(0);
    if (d == 1) continue;
    moduli_.push_back(d);
    to_coord_.push_back(r.u[i]);
    IntVec b(dim_);
    for (std::size_t j = 0; j < k; ++j)
      if (r.u_inv[j][i] != 0)
        for (std::size_t c = 0; c < dim_; ++c)
          if (lb[j][c] != 0) b[c] += r.u_inv[j][i] * lb[j][c];
    coord_basis_.push_back(std::move(b));
  }
}

IntVec Module::reduce_coords(IntVec c) const {
  if (c.size() != moduli_.size()) throw AmbientMismatch("coordinate vector has wrong length");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (moduli_[i] != 0) c[i] = floor_mod(c[i], moduli_[i]);
  return c;
}

IntVec Module::to_coords(const IntVec& x) const {
  if (x.size() != dim_) throw AmbientMismatch("vector length does not match the module ambient");
  if (identity_coords_) return reduce_coords(x);
  auto y = lattice_.coordinates(x);
  if (!y) throw NotInModule("vector is not in module " + id_);
  IntVec c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < y->size(); ++j)
      if (to_coord_[i][j] != 0 && (*y)[j] != 0) c[i] += to_coord_[i][j] * (*y)[j];
  return reduce_coords(std::move(c));
}

IntVec Module::from_coords(const IntVec& c) const {
  if (c.size() != moduli_.size()) throw AmbientMismatch("coordinate vector has wrong length");
  IntVec x(dim_);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0)
      for (std::size_t k = 0; k < dim_; ++k)
        if (coord_basis_[i][k] != 0) x[k] += c[i] * coord_basis_[i][k];
  return canonical(x);
}

void Module::build_actions() const {
  const auto& g = SymmetricGroup::get(n_);
  std::size_t q = moduli_.size();
  actions_.resize(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto& m = actions_[a];
    m.assign(q * q, 0);
    for (std::size_t j = 0; j < q; ++j) {
      IntVec img = to_coords(act(a, coord_basis_[j]));
      for (std::size_t i = 0; i < q; ++i) {
        if (!img[i].fits_slong_p()) throw std::overflow_error("coordinate action entry exceeds 64 bits");
        m[i * q + j] = img[i].get_si();
      }
    }
  }
}

const std::vector<std::int64_t>& Module::coord_action(std::size_t perm_index) const {
  std::call_once(action_once_, [this] { build_actions(); });
  return actions_.at(perm_index);
}

void Module::check_invariants() const {
  std::vector<std::vector<std::uint32_t>> gens;
  for (int i = 1; i < n_; ++i) gens.push_back(ambient_map(Permutation::s(n_, i), n_, blocks_));
  auto apply = [&](const std::vector<std::uint32_t>& map, std::vector<std::uint32_t> x) {
    for (auto& v : x) v = map[v];
    return x;
  };
  std::vector<std::uint32_t> id(dim_);
  for (std::size_t k = 0; k < dim_; ++k) id[k] = static_cast<std::uint32_t>(k);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (apply(gens[i], apply(gens[i], id)) != id) throw std::logic_error("s_i^2 fails on ambient labels");
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto ij = apply(gens[i], apply(gens[j], id)), ji = apply(gens[j], apply(gens[i], id));
      if (j == i + 1) {
        if (apply(ij, gens[i]) != apply(ji, gens[j])) throw std::logic_error("braid relation fails on ambient labels");
      } else if (ij != ji) {
        throw std::logic_error("far commutation fails on ambient labels");
      }
    }
  }
  for (const auto& map : gens) {
    for (const auto& b : lattice_.basis_vectors())
      if (!lattice_.contains(permute(map, b))) throw std::logic_error("module lattice of " + id_ + " is not invariant");
    for (const auto& b : relations_.basis_vectors())
      if (!relations_.contains(permute(map, b))) throw std::logic_error("relations of " + id_ + " are not invariant");
  }
}

namespace {

Lattice m2_equiv_lattice(int n, RingSpec ring) {
  Constants c = constants(n);
  std::size_t d = pair_count(n);
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> mods;
  long mc = ring.congruence_modulus(c.b_n1);
  for (std::size_t k = 1; k < d; ++k) {
    std::vector<std::int64_t> r(d, 0);
    r[k] = 1;
    r[0] = -1;
    rows.push_back(std::move(r));
    mods.push_back(mc);
  }
  long mp = ring.congruence_modulus(n - 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          std::vector<std::int64_t> r(d, 0);
          r[pair_index(n, i, j)] += 1;
          r[pair_index(n, k, l)] += 1;
          r[pair_index(n, i, l)] -= 1;
          r[pair_index(n, k, j)] -= 1;
          rows.push_back(std::move(r));
          mods.push_back(mp);
        }
  return congruence_lattice(d, rows, mods);
}

ModulePtr build(const std::string& id, int n, RingSpec ring) {
  const std::vector<IntVec> none;
  if (id == "S0") return std::make_shared<Module>(id, n, ring, std::vector<Block>{Block::Trivial}, none, true, none);
  if (id == "M1") return std::make_shared<Module>(id, n, ring, std::vector<Block>{Block::M1}, none, true, none);
  if (id == "M2") return std::make_shared<Module>(id, n, ring, std::vector<Block>{Block::M2}, none, true, none);
  if (id == "S1") {
    std::vector<IntVec> g;
    for (int i = 1; i < n; ++i) {
      IntVec v = t_vec(n, i);
      v[i] = -1;
      g.push_back(std::move(v));
    }
    return std::make_shared<Module>(id, n, ring, std::vector<Block>{Block::M1}, g, false, none);
  }
  if (id == "K12") {
    std::vector<IntVec> g;
    for (std::size_t k = 1; k < pair_count(n); ++k) {
      IntVec v(pair_count(n));
      v[k] = 1;
      v[0] = -1;
      g.push_back(std::move(v));
    }
    return std::make_shared<Module>(id, n, ring, std::vector<Block>{Block::M2}, g, false, none);
  }
  if (id == "S2")
    return std::make_shared<Module>(id, n, ring, std::vector<Block>{Block::M2}, standard_polytabloids(n), false, none);
  if (id == "M2_EQUIV") {
    return std::make_shared<Module>(id, n, ring, std::vector<Block>{Block::M2},
                                    m2_equiv_lattice(n, ring).basis_vectors(), false, none);
  }
  if (id.rfind("IM_F", 0) == 0) {
    std::string which = id.substr(4);
    std::vector<Block> blocks;
    for (char ch : which) {
      if (ch == '0')
        blocks.push_back(Block::Trivial);
      else if (ch == '1')
        blocks.push_back(Block::M1);
      else if (ch == '2')
        blocks.push_back(Block::M2);
      else
        throw IndexError("unknown module id " + id);
    }
    if (blocks.empty()) throw IndexError("unknown module id " + id);
    IntMatrix f = f_stack_matrix(which, n);
    return std::make_shared<Module>(id, n, ring, blocks, f.columns(), false, none);
  }
  throw IndexError("unknown module id " + id);
}

}  // namespace

ModulePtr make_module(const std::string& id, int n, RingSpec ring) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, int, long>, ModulePtr> cache;
  auto key = std::make_tuple(id, n, ring.m);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ModulePtr m = build(id, n, ring);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, m).first->second;
}

ModulePtr quotient_module(const ModulePtr& base, const Lattice& sub, const std::string& id) {
  if (sub.ambient_rank() != base->ambient_dim()) throw AmbientMismatch("quotient lattice lives in another ambient");
  if (!base->lattice().contains(sub)) throw AmbientMismatch("quotient lattice is not inside the module");
  std::vector<IntVec> rel = base->relations().basis_vectors();
  for (const auto& b : sub.basis_vectors()) rel.push_back(b);
  return std::make_shared<Module>(id, base->n(), base->ring(), base->blocks(), base->lattice().basis_vectors(), false,
                                  rel);
}

}  // namespace specht
