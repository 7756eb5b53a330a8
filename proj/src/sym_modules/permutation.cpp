#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "specht/sym_modules.hpp"

namespace specht {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size() + 1, 0);
  for (int x : img_) {
    if (x < 1 || x > static_cast<int>(img_.size()) || seen[x]) throw IndexError("not a permutation of 1..n");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw IndexError("bad transposition indices");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Permutation Permutation::s(int n, int i) {
  if (i < 1 || i >= n) throw IndexError("s_i needs 1 <= i < n");
  return transposition(n, i, i + 1);
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) v[img_[k] - 1] = static_cast<int>(k) + 1;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < img_.size(); ++k) os << (k ? " " : "") << img_[k];
  os << ']';
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) throw SizeMismatch("composing permutations of different degree");
  std::vector<int> v(p.n());
  for (int x = 1; x <= p.n(); ++x) v[x - 1] = p(q(x));
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

namespace {

std::size_t lex_rank(const std::vector<int>& img) {
  std::size_t n = img.size(), r = 0;
  std::vector<char> used(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t smaller = 0;
    for (int x = 1; x < img[k]; ++x)
      if (!used[x]) ++smaller;
    std::size_t f = 1;
    for (std::size_t j = 2; j < n - k; ++j) f *= j;
    r += smaller * f;
    used[img[k]] = 1;
  }
  return r;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1 || n > 8) throw SizeMismatch("symmetric group degree out of supported range");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  do elems_.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  inv_.resize(elems_.size());
  for (std::size_t a = 0; a < elems_.size(); ++a) inv_[a] = index(elems_[a].inverse());
  for (int i = 1; i < n; ++i) s_.push_back(index(Permutation::s(n, i)));
  if (n <= 6) {
    std::size_t g = elems_.size();
    table_.resize(g * g);
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = 0; b < g; ++b) table_[a * g + b] = static_cast<std::uint16_t>(index(elems_[a] * elems_[b]));
  }
}

const SymmetricGroup& SymmetricGroup::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymmetricGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot.reset(new SymmetricGroup(n));
  return *slot;
}

std::size_t SymmetricGroup::index(const Permutation& p) const {
  if (p.n() != n_) throw SizeMismatch("permutation degree does not match the group");
  return lex_rank(p.images());
}

std::size_t SymmetricGroup::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elems_.size() + b];
  return index(elems_[a] * elems_[b]);
}

}  // namespace specht
