#include <algorithm>

#include "specht/braids.hpp"

namespace specht {
namespace {

using Row = std::vector<std::int64_t>;

void check_id(const std::string& id, int n) {
  const auto& ids = specht_ids(n);
  if (std::find(ids.begin(), ids.end(), id) != ids.end()) return;
  if (n == 3) {
    static const std::vector<std::string> wide = {"N2", "N01", "N02", "N12"};
    if (std::find(wide.begin(), wide.end(), id) != wide.end())
      throw UnsupportedAtN3("subgroup " + id + " is not defined for n = 3");
  }
  throw IndexError("unknown Specht subgroup " + id);
}

}  // namespace

const std::vector<std::string>& specht_ids(int n) {
  static const std::vector<std::string> small = {"N0", "N1"};
  static const std::vector<std::string> full = {"N0", "N1", "N2", "N01", "N02", "N12"};
  if (n < 3) throw SizeMismatch("Specht subgroups need n >= 3");
  return n == 3 ? small : full;
}

std::vector<Row> specht_equations(const std::string& id, int n) {
  check_id(id, n);
  std::size_t d = pair_count(n);
  auto at = [&](int i, int j) { return pair_index(n, i, j); };
  std::vector<Row> rows;
  if (id == "N0") {
    for (std::size_t k = 1; k < d; ++k) {
      Row r(d, 0);
      r[k] = 1;
      r[0] = -1;
      rows.push_back(r);
    }
  } else if (id == "N1" && n == 3) {
    rows.push_back(Row(d, 1));
  } else if (id == "N1") {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Row r(d, 0);
        r[at(i, j)] += n - 4;
        for (int k = 1; k <= n; ++k) {
          if (k == i || k == j) continue;
          r[at(i, k)] -= 1;
          r[at(j, k)] -= 1;
        }
        rows.push_back(r);
      }
  } else if (id == "N2") {
    for (int i = 1; i <= n; ++i) {
      Row r(d, 0);
      for (int j = 1; j <= n; ++j)
        if (j != i) r[at(i, j)] = 1;
      rows.push_back(r);
    }
  } else if (id == "N01") {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Row r(d, 0);
        r[at(i, j)] += static_cast<std::int64_t>(n - 2) * (n - 3);
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            if (k != i && k != j && l != i && l != j) r[at(k, l)] += 2;
        for (int k = 1; k <= n; ++k) {
          if (k == i || k == j) continue;
          r[at(i, k)] -= n - 3;
          r[at(j, k)] -= n - 3;
        }
        rows.push_back(r);
      }
  } else if (id == "N02") {
    for (int i = 1; i <= n; ++i) {
      Row r(d, 0);
      for (int j = 1; j <= n; ++j)
        if (j != i) r[at(i, j)] += n - 2;
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          if (j != i && k != i) r[at(j, k)] -= 2;
      rows.push_back(r);
    }
  } else if (id == "N12") {
    rows.push_back(Row(d, 1));
  }
  return rows;
}

bool specht_membership(const IntVec& winding, const std::string& id, int n) {
  if (winding.size() != pair_count(n)) throw AmbientMismatch("winding vector must lie in M2");
  for (const auto& r : specht_equations(id, n)) {
    Int s;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r[k] != 0) s += Int(static_cast<long>(r[k])) * winding[k];
    if (s != 0) return false;
  }
  return true;
}

bool specht_membership(const BraidWord& w, const std::string& id) {
  check_id(id, w.n());
  return specht_membership(winding_vector(w), id, w.n());
}

Lattice specht_lattice(const std::string& id, int n) {
  auto rows = specht_equations(id, n);
  std::vector<std::int64_t> moduli(rows.size(), 0);
  return congruence_lattice(pair_count(n), rows, moduli);
}

std::vector<BraidWord> specht_generators(const std::string& id, int n) {
  check_id(id, n);
  auto a = [&](int i, int j) { return named_braid("a", {i, j}, n); };
  BraidWord z = named_braid("z", {}, n);
  std::vector<BraidWord> out;
  if (n == 3) {
    if (id == "N0") out.push_back(a(1, 2) * a(1, 3) * a(2, 3));
    if (id == "N1") {
      out.push_back(a(2, 3) * a(1, 3).inverse());
      out.push_back(a(2, 3) * a(1, 2).inverse());
    }
    return out;
  }
  auto lifts = [&] {
    for (auto [i, j] : standard_polytabloid_indices(n)) out.push_back(named_braid("lift", {i, j}, n));
  };
  if (id == "N0") {
    out.push_back(z);
  } else if (id == "N1") {
    BraidWord y1 = named_braid("y", {1}, n);
    for (int i = 2; i <= n; ++i) out.push_back(named_braid("y", {i}, n) * y1.inverse());
    if (n % 2 == 0) out.push_back(z * y1.power(-n / 2));
  } else if (id == "N2") {
    lifts();
  } else if (id == "N01") {
    out.push_back(z);
    for (int i = 1; i < n; ++i) out.push_back(named_braid("y", {i}, n));
  } else if (id == "N02") {
    lifts();
    out.push_back(z);
  } else if (id == "N12") {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!(i == 1 && j == 2)) out.push_back(a(i, j) * a(1, 2).inverse());
  }
  return out;
}

}  // namespace specht
