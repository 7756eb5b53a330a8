#include "specht/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace specht {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Int(1));
  return m;
}

IntMatrix IntMatrix::from_dense(const Dense& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_dense: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.data_[r].emplace_back(c, rows[r][c]);
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVec>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("from_columns: wrong column length");
    for (std::size_t r = 0; r < rows; ++r)
      if (cols[c][r] != 0) m.data_[r].emplace_back(c, cols[c][r]);
  }
  return m;
}

std::size_t IntMatrix::nnz() const {
  std::size_t s = 0;
  for (const auto& r : data_) s += r.size();
  return s;
}

void IntMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("IntMatrix index out of range");
}

Int IntMatrix::get(std::size_t r, std::size_t c) const {
  check(r, c);
  const Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != row.end() && it->first == c) return it->second;
  return 0;
}

void IntMatrix::set(std::size_t r, std::size_t c, const Int& v) {
  check(r, c);
  Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    row.insert(it, Entry(c, v));
  }
}

void IntMatrix::add(std::size_t r, std::size_t c, const Int& v) {
  if (v == 0) return;
  check(r, c);
  Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, Entry(c, v));
  }
}

void IntMatrix::set_row(std::size_t r, Row row) {
  if (r >= rows_) throw DimensionError("set_row out of range");
  Row clean;
  clean.reserve(row.size());
  for (auto& e : row) {
    if (e.first >= cols_) throw DimensionError("set_row column out of range");
    if (!clean.empty() && clean.back().first >= e.first) throw DimensionError("set_row entries not sorted");
    if (e.second != 0) clean.push_back(std::move(e));
  }
  data_[r] = std::move(clean);
}

Dense IntMatrix::to_dense() const {
  Dense d(rows_, IntVec(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) d[r][c] = v;
  return d;
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = get(r, c);
  return out;
}

std::vector<IntVec> IntMatrix::columns() const {
  std::vector<IntVec> out(cols_, IntVec(rows_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[c][r] = v;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;
}

IntVec IntMatrix::operator*(const IntVec& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  IntVec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product size mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    IntVec acc(o.cols_);
    std::vector<char> touched(o.cols_, 0);
    for (const auto& [k, v] : data_[r])
      for (const auto& [c, w] : o.data_[k]) {
        acc[c] += v * w;
        touched[c] = 1;
      }
    for (std::size_t c = 0; c < o.cols_; ++c)
      if (touched[c] && acc[c] != 0) p.data_[r].emplace_back(c, acc[c]);
  }
  return p;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool IntMatrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

nlohmann::json IntMatrix::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) entries.push_back({r, c, v.get_str()});
  return {{"rows", rows_}, {"cols", cols_}, {"entries", entries}};
}

IntMatrix IntMatrix::from_json(const nlohmann::json& j) {
  IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    std::size_t r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
    m.check(r, c);
    m.add(r, c, Int(e.at(2).get<std::string>()));
  }
  return m;
}

Int floor_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

IntVec zero_vec(std::size_t n) { return IntVec(n); }

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ']';
  return os.str();
}

}  // namespace specht
