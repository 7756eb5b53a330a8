#include "specht/sym_modules.hpp"

namespace specht {

std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

std::size_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) throw IndexError("pair index out of range");
  // pairs with smaller first entry come first
  std::size_t before = static_cast<std::size_t>(i - 1) * n - static_cast<std::size_t>(i - 1) * i / 2;
  return before + (j - i - 1);
}

std::pair<int, int> pair_at(int n, std::size_t idx) {
  for (int i = 1; i < n; ++i) {
    std::size_t row = n - i;
    if (idx < row) return {i, i + 1 + static_cast<int>(idx)};
    idx -= row;
  }
  throw IndexError("pair position out of range");
}

IntVec t_vec(int n, int i) {
  if (i < 1 || i > n) throw IndexError("t_i needs 1 <= i <= n");
  IntVec v(n);
  v[i - 1] = 1;
  return v;
}

IntVec sum_t(int n) { return IntVec(n, Int(1)); }

IntVec v_vec(int n, int i, int j) {
  IntVec v(pair_count(n));
  v[pair_index(n, i, j)] = 1;
  return v;
}

IntVec u_vec(int n) { return IntVec(pair_count(n), Int(1)); }

IntVec w_vec(int n, int i) {
  if (i < 1 || i > n) throw IndexError("w_i needs 1 <= i <= n");
  IntVec v(pair_count(n));
  for (int j = 1; j <= n; ++j)
    if (j != i) v[pair_index(n, i, j)] = 1;
  return v;
}

IntVec e_vec(int n, int i, int j) {
  if (n < 4) throw IndexError("standard polytabloids need n >= 4");
  IntVec v(pair_count(n));
  auto add = [&](int a, int b, int c) { v[pair_index(n, a, b)] += c; };
  if (i == 2 && j >= 4 && j <= n) {
    add(2, j, 1);
    add(1, 3, 1);
    add(1, j, -1);
    add(2, 3, -1);
  } else if (i >= 3 && i < j && j <= n) {
    add(i, j, 1);
    add(1, 2, 1);
    add(1, j, -1);
    add(2, i, -1);
  } else {
    throw IndexError("e_ij needs (2, j) with j >= 4 or 3 <= i < j <= n");
  }
  return v;
}

std::vector<std::pair<int, int>> standard_polytabloid_indices(int n) {
  std::vector<std::pair<int, int>> out;
  if (n < 4) return out;
  for (int j = 4; j <= n; ++j) out.emplace_back(2, j);
  for (int i = 3; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<IntVec> standard_polytabloids(int n) {
  std::vector<IntVec> out;
  for (auto [i, j] : standard_polytabloid_indices(n)) out.push_back(e_vec(n, i, j));
  return out;
}

std::vector<IntVec> m2_polytabloid_basis(int n) {
  std::vector<IntVec> out;
  IntVec v12 = v_vec(n, 1, 2);
  out.push_back(v12);
  auto minus12 = [&](IntVec x) {
    x[0] -= 1;
    return x;
  };
  for (int j = 3; j <= n; ++j) out.push_back(minus12(v_vec(n, 1, j)));
  out.push_back(minus12(v_vec(n, 2, 3)));
  for (auto& e : standard_polytabloids(n)) out.push_back(std::move(e));
  return out;
}

std::string ambient_label(int n, const std::vector<Block>& blocks, std::size_t k) {
  for (Block b : blocks) {
    std::size_t d = b == Block::Trivial ? 1 : b == Block::M1 ? static_cast<std::size_t>(n) : pair_count(n);
    if (k < d) {
      if (b == Block::Trivial) return "1";
      if (b == Block::M1) return "t" + std::to_string(k + 1);
      auto [i, j] = pair_at(n, k);
      return "v" + std::to_string(i) + std::to_string(j);
    }
    k -= d;
  }
  throw IndexError("ambient position out of range");
}

ModuleElement ModuleElement::make(ModulePtr m, const IntVec& ambient) {
  if (ambient.size() != m->ambient_dim()) throw AmbientMismatch("vector length does not match the module ambient");
  if (!m->contains(ambient)) throw NotInModule("vector is not in module " + m->id());
  IntVec c = m->canonical(ambient);
  return ModuleElement{std::move(m), std::move(c)};
}

nlohmann::json ModuleElement::to_json() const {
  nlohmann::json coords_json = nlohmann::json::object();
  auto labels = module->labels();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].fits_slong_p())
      coords_json[labels[k]] = coords[k].get_si();
    else
      coords_json[labels[k]] = coords[k].get_str();
  }
  return {{"module", module->id()}, {"n", module->n()}, {"ring", module->ring().to_string()}, {"coords", coords_json}};
}

ModuleElement act(const Permutation& s, const ModuleElement& v) {
  if (s.n() != v.module->n()) throw SizeMismatch("permutation degree does not match the module");
  return ModuleElement{v.module, v.module->canonical(v.module->act(s, v.coords))};
}

ModuleElement special_element(const std::string& kind, const std::vector<int>& idx, int n, RingSpec ring) {
  auto need = [&](std::size_t k) {
    if (idx.size() != k) throw IndexError("element '" + kind + "' takes " + std::to_string(k) + " indices");
  };
  if (kind == "t") {
    need(1);
    return ModuleElement::make(make_module("M1", n, ring), t_vec(n, idx[0]));
  }
  IntVec v;
  if (kind == "u") {
    need(0);
    v = u_vec(n);
  } else if (kind == "w") {
    need(1);
    v = w_vec(n, idx[0]);
  } else if (kind == "e") {
    need(2);
    v = e_vec(n, idx[0], idx[1]);
  } else if (kind == "v") {
    need(2);
    v = v_vec(n, idx[0], idx[1]);
  } else {
    throw IndexError("unknown element kind '" + kind + "'");
  }
  return ModuleElement::make(make_module("M2", n, ring), v);
}

}  // namespace specht
