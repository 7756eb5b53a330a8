#include <deque>

#include "specht/cohomology.hpp"

namespace specht {

namespace {

struct Sections {
  std::vector<BraidWord> word;  // by group index
};

const Sections& sections(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Sections>> memo;
  if (n < 2 || n > 7) throw SizeLimit("section words are tabulated for 2 <= n <= 7");
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(n); it != memo.end()) return *it->second;
  const auto& G = SymmetricGroup::get(n);
  auto s = std::make_unique<Sections>();
  std::vector<std::vector<int>> letters(G.order());
  std::vector<bool> seen(G.order(), false);
  std::deque<std::size_t> queue{G.identity()};
  seen[G.identity()] = true;
  while (!queue.empty()) {
    std::size_t g = queue.front();
    queue.pop_front();
    for (int k = 1; k < n; ++k) {
      std::size_t h = G.mul(g, G.s(k));
      if (seen[h]) continue;
      seen[h] = true;
      letters[h] = letters[g];
      letters[h].push_back(k);
      queue.push_back(h);
    }
  }
  for (auto& l : letters) s->word.emplace_back(n, std::move(l));
  return *memo.emplace(n, std::move(s)).first->second;
}

ModuleElement project(const QuotientSpec& q, const IntVec& winding) {
  return ModuleElement::make(extension_kernel(q), extension_projection(q) * winding);
}

void check_element(const QuotientSpec& q, const ExtensionElement& x) {
  if (x.perm.n() != q.n || x.wind.module != extension_kernel(q))
    throw DomainMismatch("extension element belongs to another quotient");
}

// Image of the pure braid s(a) s(b) s(ab)^-1.
ModuleElement cocycle(const QuotientSpec& q, std::size_t a, std::size_t b) {
  const auto& G = SymmetricGroup::get(q.n);
  const auto& w = sections(q.n).word;
  return project(q, winding_vector(w[a] * w[b] * w[G.mul(a, b)].inverse()));
}

}  // namespace

const BraidWord& section_word(const Permutation& p) {
  return sections(p.n()).word[SymmetricGroup::get(p.n()).index(p)];
}

ExtensionElement extension_identity(const QuotientSpec& q) {
  ModulePtr m = extension_kernel(q);
  return {Permutation::identity(q.n), ModuleElement{m, IntVec(m->ambient_dim())}};
}

ExtensionElement extension_image(const QuotientSpec& q, const BraidWord& w) {
  if (w.n() != q.n) throw SizeMismatch("braid and quotient have different n");
  Permutation p = rho(w);
  return {p, project(q, winding_vector(w * section_word(p).inverse()))};
}

ExtensionElement extension_multiply(const QuotientSpec& q, const ExtensionElement& x, const ExtensionElement& y) {
  check_element(q, x);
  check_element(q, y);
  const auto& G = SymmetricGroup::get(q.n);
  const Module& m = *x.wind.module;
  std::size_t a = G.index(x.perm), b = G.index(y.perm);
  IntVec sum = x.wind.coords;
  IntVec moved = m.act(a, y.wind.coords);
  const IntVec& c = cocycle(q, a, b).coords;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += moved[i] + c[i];
  return {x.perm * y.perm, ModuleElement{x.wind.module, m.canonical(sum)}};
}

ExtensionElement extension_inverse(const QuotientSpec& q, const ExtensionElement& x) {
  check_element(q, x);
  const auto& G = SymmetricGroup::get(q.n);
  const Module& m = *x.wind.module;
  std::size_t a = G.index(x.perm), ai = G.inv(a);
  IntVec moved = m.act(ai, x.wind.coords);
  const IntVec& c = cocycle(q, ai, a).coords;
  IntVec v(moved.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -moved[i] - c[i];
  return {G.element(ai), ModuleElement{x.wind.module, m.canonical(v)}};
}

bool verify_splitting_witness(const QuotientSpec& q, const Cochain& g) {
  ModulePtr m = extension_kernel(q);
  if (g.target() != m || g.complex() != Complex::P || g.degree() != 1) return false;
  const int n = q.n;
  std::vector<ExtensionElement> t(n);
  for (int i = 1; i < n; ++i) {
    IntVec h = g.at(Cell::make(CellKind::E, {i}, n)).coords;
    for (auto& x : h) x = -x;
    ExtensionElement corr{Permutation::identity(n), ModuleElement{m, m->canonical(h)}};
    t[i] = extension_multiply(q, corr, extension_image(q, BraidWord(n, {i})));
  }
  const ExtensionElement one = extension_identity(q);
  auto mul = [&](std::initializer_list<int> idx) {
    ExtensionElement acc = one;
    for (int i : idx) acc = extension_multiply(q, acc, t[i]);
    return acc;
  };
  for (int i = 1; i < n; ++i) {
    if (!(mul({i, i}) == one)) return false;
    if (i + 1 < n && !(mul({i, i + 1, i}) == mul({i + 1, i, i + 1}))) return false;
    for (int j = i + 2; j < n; ++j)
      if (!(mul({i, j}) == mul({j, i}))) return false;
  }
  return true;
}

}  // namespace specht
