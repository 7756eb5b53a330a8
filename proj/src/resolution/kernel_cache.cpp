#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>

#include "specht/resolution.hpp"

namespace specht {
namespace {

std::mutex config_mu;
std::optional<std::string> explicit_dir;
int limit = 6;

std::size_t expected_nullity(int n) {
  std::size_t N = SymmetricGroup::get(n).order();
  return cells(Complex::P, 2, n).size() * N - (cells(Complex::P, 1, n).size() * N - (N - 1));
}

bool valid_kernel(const IntMatrix& k, const IntMatrix& d2, int n) {
  if (k.cols() != d2.cols() || k.rows() != expected_nullity(n)) return false;
  IntMatrix dt = d2.transpose();
  for (std::size_t r = 0; r < k.rows(); ++r) {
    std::map<std::size_t, Int> acc;
    for (const auto& [c, v] : k.row(r))
      for (const auto& [q, w] : dt.row(c)) acc[q] += v * w;
    for (const auto& [q, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

std::optional<IntMatrix> load(const std::filesystem::path& file, const IntMatrix& d2, int n) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("n").get<int>() != n) return std::nullopt;
    IntMatrix k = IntMatrix::from_json(j.at("basis"));
    if (!valid_kernel(k, d2, n)) {
      std::cerr << "specht: ignoring invalid kernel cache " << file << "\n";
      return std::nullopt;
    }
    return k;
  } catch (const std::exception& e) {
    std::cerr << "specht: ignoring unreadable kernel cache " << file << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void store(const std::filesystem::path& file, const IntMatrix& k, int n) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  auto tmp = file;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::json{{"n", n}, {"basis", k.to_json()}}.dump();
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

void set_cache_dir(std::optional<std::string> dir) {
  std::lock_guard<std::mutex> lock(config_mu);
  explicit_dir = std::move(dir);
}

std::string cache_dir() {
  std::lock_guard<std::mutex> lock(config_mu);
  if (explicit_dir) return *explicit_dir;
  if (const char* env = std::getenv("SPECHT_LAB_CACHE"); env && *env) return env;
  return ".specht-cache";
}

void set_kernel_limit(int n_max) {
  std::lock_guard<std::mutex> lock(config_mu);
  limit = n_max;
}

int kernel_limit() {
  std::lock_guard<std::mutex> lock(config_mu);
  return limit;
}

const IntMatrix& kernel_d2(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<IntMatrix>> memo;
  if (n < 2 || n > kernel_limit())
    throw SizeLimit("kernel oracle is limited to 2 <= n <= " + std::to_string(kernel_limit()));
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(n); it != memo.end()) return *it->second;
  IntMatrix d2 = boundary_matrix(Complex::P, 2, n);
  std::filesystem::path file = kernel_cache_file(n);
  std::optional<IntMatrix> k = load(file, d2, n);
  if (!k) {
    k = kernel_rows(d2);
    if (k->rows() != expected_nullity(n)) throw std::logic_error("kernel of the 2-boundary has unexpected rank");
    store(file, *k, n);
  }
  return *memo.emplace(n, std::make_unique<IntMatrix>(std::move(*k))).first->second;
}

std::string kernel_cache_file(int n) {
  return (std::filesystem::path(cache_dir()) / ("kernel_d2_n" + std::to_string(n) + ".json")).string();
}

std::optional<IntMatrix> read_kernel_cache(const std::string& file, int n) {
  return load(file, boundary_matrix(Complex::P, 2, n), n);
}

Lattice kernel_d2_lattice(int n) {
  const IntMatrix& k = kernel_d2(n);
  std::vector<IntVec> basis;
  for (std::size_t r = 0; r < k.rows(); ++r) {
    IntVec x(k.cols());
    for (const auto& [c, v] : k.row(r)) x[c] = v;
    basis.push_back(std::move(x));
  }
  return Lattice::from_independent(k.cols(), std::move(basis));
}

bool is_cocycle(const Cochain& f) {
  if (f.complex() != Complex::P) throw DomainMismatch("the cocycle oracle works on P");
  if (f.degree() < 2) return coboundary(f).is_zero();
  const int n = f.n();
  const IntMatrix& k = kernel_d2(n);
  const auto& G = SymmetricGroup::get(n);
  const auto& cs = cells(Complex::P, 2, n);
  const auto& M = *f.target();
  std::size_t N = G.order(), d = M.ambient_dim();
  std::vector<IntVec> images(cs.size() * N);
  for (std::size_t p = 0; p < cs.size(); ++p) {
    const IntVec& x = f.at(cs[p]).coords;
    for (std::size_t g = 0; g < N; ++g) images[p * N + g] = M.act(g, x);
  }
  IntVec acc(d);
  for (std::size_t r = 0; r < k.rows(); ++r) {
    for (auto& a : acc) a = 0;
    for (const auto& [c, v] : k.row(r)) {
      const IntVec& y = images[c];
      for (std::size_t i = 0; i < d; ++i)
        if (y[i] != 0) mpz_addmul(acc[i].get_mpz_t(), v.get_mpz_t(), y[i].get_mpz_t());
    }
    if (!M.is_zero(acc)) return false;
  }
  return true;
}

}  // namespace specht
