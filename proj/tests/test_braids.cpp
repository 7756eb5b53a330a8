#include <random>

#include "doctest.h"
#include "specht/braids.hpp"

using namespace specht;

namespace {

IntVec add(IntVec a, const IntVec& b, long k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::vector<int> l;
  for (int t = 0; t < len; ++t) l.push_back(rng() % 2 ? gen(rng) : -gen(rng));
  return BraidWord(n, l);
}

// Random pure braid: a random word followed by a random-sign bubble sort
// of its strands.
BraidWord random_pure(std::mt19937& rng, int n, int len) {
  BraidWord w = random_word(rng, n, len);
  std::vector<int> arr = rho(w).images();
  std::vector<int> tail;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (int p = 0; p + 1 < n; ++p)
      if (arr[p] > arr[p + 1]) {
        std::swap(arr[p], arr[p + 1]);
        tail.push_back(rng() % 2 ? p + 1 : -(p + 1));
        swapped = true;
      }
  }
  return w * BraidWord(n, tail);
}

// Kernel of the rational projections with the given indices, intersected with Z^d.
Lattice projection_kernel(const std::vector<int>& which, int n) {
  std::size_t d = pair_count(n);
  Dense rows;
  for (int i : which) {
    std::vector<QVec> cols;
    for (std::size_t k = 0; k < d; ++k) {
      IntVec e(d);
      e[k] = 1;
      cols.push_back(project(i, e, n));
    }
    Int l = 1;
    for (const auto& c : cols)
      for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t r = 0; r < d; ++r) {
      IntVec row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = Int(cols[k][r] * l);
      rows.push_back(row);
    }
  }
  return kernel_basis(rows, d);
}

Lattice winding_lattice(const std::vector<BraidWord>& ws, int n) {
  std::vector<IntVec> v;
  for (const auto& w : ws) v.push_back(winding_vector(w));
  return Lattice::from_generators(pair_count(n), v);
}

}  // namespace

TEST_CASE("rho examples and homomorphism") {
  CHECK(rho(BraidWord(3, {})).is_identity());
  CHECK(rho(BraidWord::parse("1", 3)) == Permutation::s(3, 1));
  CHECK(rho(BraidWord::parse("1 1", 3)).is_identity());
  CHECK(rho(BraidWord::parse("-2", 3)) == Permutation::s(3, 2));
  std::mt19937 rng(1);
  for (int n = 3; n <= 6; ++n)
    for (int t = 0; t < 100; ++t) {
      BraidWord a = random_word(rng, n, 1 + t % 9), b = random_word(rng, n, 1 + t % 7);
      CHECK(rho(a * b) == rho(a) * rho(b));
    }
  CHECK_THROWS_AS(BraidWord::parse("1 3", 3), IndexError);
  CHECK_THROWS_AS(BraidWord::parse("0", 3), IndexError);
  CHECK_THROWS_AS(BraidWord::parse("1 x", 3), std::invalid_argument);
}

TEST_CASE("winding examples") {
  CHECK(winding_vector(BraidWord::parse("1 1", 3)) == v_vec(3, 1, 2));
  CHECK(winding_vector(BraidWord(4, {})) == IntVec(6));
  CHECK(winding_vector(BraidWord::parse("2 1 1 -2", 3)) == v_vec(3, 1, 3));
  CHECK(winding_vector(BraidWord::parse("1 2 2 1", 3)) == add(v_vec(3, 1, 2), v_vec(3, 1, 3)));
  try {
    winding_vector(BraidWord::parse("1", 3));
    FAIL("expected NotPure");
  } catch (const NotPure& e) {
    CHECK(e.perm == Permutation::s(3, 1));
  }
}

TEST_CASE("winding is additive, odd under inversion and blind to free reduction") {
  std::mt19937 rng(2);
  for (int n = 3; n <= 6; ++n)
    for (int t = 0; t < 100; ++t) {
      BraidWord a = random_pure(rng, n, 8), b = random_pure(rng, n, 6);
      IntVec wa = winding_vector(a), wb = winding_vector(b);
      CHECK(winding_vector(a * b) == add(wa, wb));
      CHECK(winding_vector(a.inverse()) == add(IntVec(wa.size()), wa, -1));
      std::vector<int> l = a.letters();
      std::size_t pos = rng() % (l.size() + 1);
      int k = 1 + static_cast<int>(rng() % (n - 1));
      l.insert(l.begin() + static_cast<long>(pos), {k, -k});
      CHECK(winding_vector(BraidWord(n, l)) == wa);
      CHECK(rho(BraidWord(n, l)) == rho(a));
    }
}

TEST_CASE("conjugation covariance") {
  std::mt19937 rng(3);
  for (int n = 3; n <= 6; ++n)
    for (int t = 0; t < 1000; ++t) {
      BraidWord g = random_word(rng, n, 1 + t % 11), w = random_pure(rng, n, 1 + t % 9);
      auto m2 = make_module("M2", n, RingSpec::Z());
      CHECK(winding_vector(g * w * g.inverse()) == m2->act(rho(g), winding_vector(w)));
    }
}

TEST_CASE("named braids") {
  CHECK(named_braid("a", {1, 2}, 4).to_string() == "1 1");
  CHECK(named_braid("a", {1, 3}, 4).to_string() == "2 1 1 -2");
  for (int n = 3; n <= 6; ++n) {
    CHECK(winding_vector(named_braid("z", {}, n)) == u_vec(n));
    for (int i = 1; i <= n; ++i) {
      CHECK(winding_vector(named_braid("y", {i}, n)) == w_vec(n, i));
      for (int j = i + 1; j <= n; ++j) CHECK(winding_vector(named_braid("a", {i, j}, n)) == v_vec(n, i, j));
    }
    for (auto [i, j] : standard_polytabloid_indices(n))
      CHECK(winding_vector(named_braid("lift", {i, j}, n)) == e_vec(n, i, j));
  }
  CHECK_THROWS_AS(named_braid("lift", {2, 3}, 4), IndexError);
  CHECK_THROWS_AS(named_braid("a", {1, 5}, 4), IndexError);
}

TEST_CASE("Specht membership examples") {
  CHECK(specht_membership(named_braid("z", {}, 4), "N0"));
  CHECK_FALSE(specht_membership(named_braid("a", {1, 2}, 4), "N12"));
  CHECK(specht_membership(named_braid("lift", {3, 4}, 4), "N2"));
  CHECK_THROWS_AS(specht_membership(named_braid("a", {1, 2}, 3), "N2"), UnsupportedAtN3);
  CHECK_THROWS_AS(specht_membership(BraidWord::parse("1", 4), "N0"), NotPure);
}

TEST_CASE("Specht lattice examples") {
  int n = 4;
  CHECK(specht_lattice("N0", n) == Lattice::from_generators(6, {u_vec(n)}));
  CHECK(specht_lattice("N01", n) == Lattice::from_generators(6, {w_vec(n, 1), w_vec(n, 2), w_vec(n, 3), u_vec(n)}));
  Lattice n12 = specht_lattice("N12", n);
  CHECK(n12.rank() == 5);
  CHECK(n12 == make_module("K12", n, RingSpec::Z())->lattice());
}

TEST_CASE("equation lattices match projection kernels and generator lattices") {
  for (int n = 4; n <= 6; ++n) {
    const std::vector<std::pair<std::string, std::vector<int>>> kernels = {
        {"N0", {1, 2}}, {"N1", {0, 2}}, {"N2", {0, 1}}, {"N01", {2}}, {"N02", {1}}, {"N12", {0}}};
    for (const auto& [id, which] : kernels) {
      Lattice eq = specht_lattice(id, n);
      CHECK(eq == projection_kernel(which, n));
      auto gens = specht_generators(id, n);
      for (const auto& g : gens) CHECK(specht_membership(g, id));
      INFO("subgroup " << id << " at n = " << n);
      if (id != "N02") CHECK(winding_lattice(gens, n) == eq);
    }
    // Lifts and z reach only a proper finite-index part of N02; a12 a34 is a witness at n = 4.
    Lattice n02 = specht_lattice("N02", n), listed = winding_lattice(specht_generators("N02", n), n);
    CHECK(lattice_index(listed, n02).value == constants(n).b_n1);
    if (n == 4) {
      BraidWord witness = named_braid("a", {1, 2}, n) * named_braid("a", {3, 4}, n);
      CHECK(specht_membership(witness, "N02"));
      CHECK_FALSE(listed.contains(winding_vector(witness)));
      CHECK(listed + Lattice::from_generators(pair_count(n), {winding_vector(witness)}) == n02);
    }
    CHECK(specht_lattice("N12", n) == kernel_basis(f_matrix(0, n)));
    CHECK(specht_lattice("N02", n) == kernel_basis(f_matrix(1, n)));
    CHECK(specht_lattice("N01", n) == kernel_basis(f_matrix(2, n)));
    if (n % 2 == 0) {
      auto gens = specht_generators("N1", n);
      gens.pop_back();
      CHECK(winding_lattice(gens, n) != specht_lattice("N1", n));
    }
  }
}

TEST_CASE("three strands") {
  CHECK(specht_ids(3).size() == 2);
  Lattice n0 = specht_lattice("N0", 3), n1 = specht_lattice("N1", 3);
  CHECK(n0 == Lattice::from_generators(3, {u_vec(3)}));
  CHECK(n1 == make_module("K12", 3, RingSpec::Z())->lattice());
  CHECK(n0 == projection_kernel({1}, 3));
  CHECK(n1 == projection_kernel({0}, 3));
  for (const char* id : {"N0", "N1"}) {
    auto gens = specht_generators(id, 3);
    for (const auto& g : gens) CHECK(specht_membership(g, id));
    CHECK(winding_lattice(gens, 3) == specht_lattice(id, 3));
  }
  CHECK(lattice_index(make_module("IM_F1", 3, RingSpec::Z())->lattice(),
                      make_module("S1", 3, RingSpec::Z())->lattice())
            .value == 3);
}
