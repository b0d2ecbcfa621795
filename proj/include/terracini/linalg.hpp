#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "terracini/polynomial.hpp"

namespace terracini {

class ScalarMatrix {
 public:
  ScalarMatrix(Field field, std::size_t rows, std::size_t cols);
  // Integer entries, row-major.
  static ScalarMatrix from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  ScalarMatrix transpose() const;
  // Rows [0, rows) of a followed by those of b.
  static ScalarMatrix stack(const ScalarMatrix& a, const ScalarMatrix& b);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  ScalarMatrix evaluate(std::span<const Scalar> point) const;
  PolyMatrix transpose() const;
  static PolyMatrix stack(const std::vector<PolyMatrix>& parts);

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

std::size_t rank(const ScalarMatrix& m);
// Basis of {v : m v = 0}; each vector has m.cols() entries.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m);
Scalar determinant(const ScalarMatrix& m);

struct MinorIndex {
  std::vector<std::size_t> rows, cols;
};

struct MinorList {
  std::vector<Polynomial> minors;
  std::vector<MinorIndex> indices;
  bool capped = false;
};

// All k x k minors in lexicographic (row subset, column subset) order, or a
// seeded sample of exactly `cap` of them when there are more than `cap`.
MinorList k_minors(const PolyMatrix& m, std::size_t k, std::optional<std::uint64_t> cap = std::nullopt,
                   std::uint64_t seed = 0);

// Binomial coefficient; saturates at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace terracini
