#pragma once

#include <vector>

#include "specht/exact_linalg.hpp"

namespace specht::detail {

// Incremental row-echelon builder. Rows are inserted one at a time and
// merged into the pivot table with extended-gcd row operations, so the
// stored rows always span the same lattice as everything inserted so far.
class HnfBuilder {
 public:
  explicit HnfBuilder(std::size_t cols) : cols_(cols), slot_(cols, -1) {}

  void insert(IntVec v);
  std::size_t rank() const { return rows_.size(); }
  // Fully reduced HNF rows in pivot order.
  Dense finish();

 private:
  std::size_t cols_;
  std::vector<long> slot_;
  Dense rows_;
};

// a*x + b*y, written in place into x: x = a*x + b*y over [from, end).
void combine(IntVec& x, const Int& a, const IntVec& y, const Int& b, std::size_t from);
// x -= q*y over [from, end).
void submul(IntVec& x, const Int& q, const IntVec& y, std::size_t from);

}  // namespace specht::detail
