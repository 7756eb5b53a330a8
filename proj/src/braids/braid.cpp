#include <sstream>

#include "specht/braids.hpp"

namespace specht {

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw SizeMismatch("braid group needs n >= 1");
  for (int k : letters_)
    if (k == 0 || k >= n || -k >= n) throw IndexError("braid letter " + std::to_string(k) + " out of range");
}

BraidWord BraidWord::parse(const std::string& text, int n) {
  std::istringstream is(text);
  std::vector<int> letters;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid letter '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad braid letter '" + tok + "'");
    letters.push_back(k);
  }
  return BraidWord(n, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
  return os.str();
}

BraidWord BraidWord::inverse() const {
  std::vector<int> l(letters_.rbegin(), letters_.rend());
  for (int& k : l) k = -k;
  return BraidWord(n_, std::move(l));
}

BraidWord BraidWord::power(int k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  std::vector<int> l;
  for (int t = 0; t < (k < 0 ? -k : k); ++t) l.insert(l.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(n_, std::move(l));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (n_ != o.n_) throw SizeMismatch("concatenating braids on different strand counts");
  std::vector<int> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(n_, std::move(l));
}

Permutation rho(const BraidWord& w) {
  std::vector<int> arr(w.n());
  for (int i = 0; i < w.n(); ++i) arr[i] = i + 1;
  for (int k : w.letters()) {
    int p = k < 0 ? -k : k;
    std::swap(arr[p - 1], arr[p]);
  }
  return Permutation(std::move(arr));
}

IntVec winding_vector(const BraidWord& w) {
  int n = w.n();
  std::vector<int> arr(n);
  for (int i = 0; i < n; ++i) arr[i] = i + 1;
  std::vector<long> doubled(pair_count(n), 0);
  for (int k : w.letters()) {
    int p = k < 0 ? -k : k;
    doubled[pair_index(n, arr[p - 1], arr[p])] += k < 0 ? -1 : 1;
    std::swap(arr[p - 1], arr[p]);
  }
  Permutation perm(arr);
  if (!perm.is_identity()) throw NotPure(perm);
  IntVec out(doubled.size());
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    if (doubled[i] % 2 != 0) throw std::logic_error("odd crossing count on a pure braid");
    out[i] = doubled[i] / 2;
  }
  return out;
}

ModuleElement winding_element(const BraidWord& w) {
  return ModuleElement::make(make_module("M2", w.n(), RingSpec::Z()), winding_vector(w));
}

namespace {

BraidWord a_word(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) throw IndexError("a_ij needs 1 <= i < j <= n");
  std::vector<int> l;
  for (int k = j - 1; k > i; --k) l.push_back(k);
  l.push_back(i);
  l.push_back(i);
  for (int k = i + 1; k < j; ++k) l.push_back(-k);
  return BraidWord(n, std::move(l));
}

BraidWord y_word(int n, int i) {
  if (i < 1 || i > n) throw IndexError("y_i needs 1 <= i <= n");
  BraidWord w(n, {});
  for (int k = 1; k <= n; ++k)
    if (k != i) w = w * a_word(n, k, i);
  return w;
}

BraidWord z_word(int n) {
  BraidWord w(n, {});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) w = w * a_word(n, i, j);
  return w;
}

BraidWord lift_word(int n, int i, int j) {
  if (n < 4) throw IndexError("polytabloid lifts need n >= 4");
  if (i == 2 && j >= 4 && j <= n)
    return a_word(n, 1, 3) * a_word(n, 2, j) * a_word(n, 1, j).inverse() * a_word(n, 2, 3).inverse();
  if (i >= 3 && i < j && j <= n)
    return a_word(n, 1, 2) * a_word(n, i, j) * a_word(n, 1, j).inverse() * a_word(n, 2, i).inverse();
  throw IndexError("lift needs (2, j) with j >= 4 or 3 <= i < j <= n");
}

}  // namespace

BraidWord named_braid(const std::string& kind, const std::vector<int>& idx, int n) {
  auto need = [&](std::size_t k) {
    if (idx.size() != k) throw IndexError("braid '" + kind + "' takes " + std::to_string(k) + " indices");
  };
  if (kind == "a") {
    need(2);
    return a_word(n, idx[0], idx[1]);
  }
  if (kind == "y") {
    need(1);
    return y_word(n, idx[0]);
  }
  if (kind == "z") {
    need(0);
    return z_word(n);
  }
  if (kind == "lift") {
    need(2);
    return lift_word(n, idx[0], idx[1]);
  }
  throw IndexError("unknown braid kind '" + kind + "'");
}

}  // namespace specht
