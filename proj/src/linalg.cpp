#include "terracini/linalg.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "terracini/errors.hpp"

namespace terracini {

ScalarMatrix::ScalarMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

ScalarMatrix ScalarMatrix::from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  ScalarMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ScalarMatrix ScalarMatrix::stack(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.cols_) throw PreconditionError("cannot stack matrices with different column counts");
  if (!(a.field_ == b.field_)) throw IncompatibleError("cannot stack matrices over different fields");
  ScalarMatrix s(a.field_, a.rows_ + b.rows_, a.cols_);
  std::copy(a.entries_.begin(), a.entries_.end(), s.entries_.begin());
  std::copy(b.entries_.begin(), b.entries_.end(), s.entries_.begin() + a.entries_.size());
  return s;
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

ScalarMatrix PolyMatrix::evaluate(std::span<const Scalar> point) const {
  ScalarMatrix m(ring_->field(), rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::stack(const std::vector<PolyMatrix>& parts) {
  if (parts.empty()) throw PreconditionError("nothing to stack");
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != parts[0].cols_) throw PreconditionError("cannot stack matrices with different column counts");
    rows += p.rows_;
  }
  PolyMatrix s(parts[0].ring_, rows, parts[0].cols_);
  std::size_t r = 0;
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.rows_; ++i, ++r)
      for (std::size_t j = 0; j < p.cols_; ++j) s(r, j) = p(i, j);
  return s;
}

namespace {

// Fraction-free elimination on an integer matrix; returns the rank.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  std::size_t rows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Row reduction to reduced echelon form over the matrix field; returns pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const ScalarMatrix& m) {
  if (m.field().is_prime()) {
    ScalarMatrix copy = m;
    return rref(copy).size();
  }
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().denominator().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j).rational();
      a[i][j] = q.numerator() * (l / q.denominator());
    }
  }
  return bareiss_rank(std::move(a), m.cols());
}

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m) {
  ScalarMatrix e = m;
  auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  ScalarMatrix a = m;
  Scalar det = m.field().one();
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return m.field().zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

using Subset = std::vector<std::size_t>;

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> all_subsets(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  Subset s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

// The rank-th k-subset of {0..n-1} in lexicographic order.
Subset unrank_subset(std::size_t n, std::size_t k, std::uint64_t rank) {
  Subset s;
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = next;; ++c) {
      std::uint64_t count = binomial(n - c - 1, k - i - 1);
      if (rank < count) {
        s.push_back(c);
        next = c + 1;
        break;
      }
      rank -= count;
    }
  }
  return s;
}

std::uint64_t mask_of(const Subset& s) {
  std::uint64_t m = 0;
  for (auto c : s) m |= 1ull << c;
  return m;
}

// Minors of the rows `rows` against each requested column subset, by
// memoized cofactor expansion along the last row.
std::vector<Polynomial> minors_for_rows(const PolyMatrix& m, const Subset& rows, const std::vector<Subset>& col_sets) {
  std::size_t k = rows.size();
  std::vector<std::unordered_set<std::uint64_t>> needed(k + 1);
  for (const auto& c : col_sets) needed[k].insert(mask_of(c));
  for (std::size_t level = k; level > 1; --level) {
    for (auto mask : needed[level]) {
      for (std::uint64_t rest = mask; rest; rest &= rest - 1) needed[level - 1].insert(mask & ~(rest & -rest));
    }
  }
  std::unordered_map<std::uint64_t, Polynomial> prev, cur;
  for (auto mask : needed[1]) prev.emplace(mask, m(rows[0], static_cast<std::size_t>(__builtin_ctzll(mask))));
  for (std::size_t level = 2; level <= k; ++level) {
    cur.clear();
    std::size_t row = rows[level - 1];
    for (auto mask : needed[level]) {
      Polynomial sum(m.ring());
      std::size_t t = 0;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1, ++t) {
        std::uint64_t bit = rest & -rest;
        std::size_t col = static_cast<std::size_t>(__builtin_ctzll(bit));
        const Polynomial& entry = m(row, col);
        if (entry.is_zero()) continue;
        const Polynomial& sub = prev.at(mask & ~bit);
        if (sub.is_zero()) continue;
        // Sign of the cofactor at (level-1, t) within the submatrix.
        if ((level - 1 + t) % 2 == 0) sum += entry * sub;
        else sum -= entry * sub;
      }
      cur.emplace(mask, std::move(sum));
    }
    std::swap(prev, cur);
  }
  std::vector<Polynomial> out;
  out.reserve(col_sets.size());
  for (const auto& c : col_sets) out.push_back(prev.at(mask_of(c)));
  return out;
}

}  // namespace

MinorList k_minors(const PolyMatrix& m, std::size_t k, std::optional<std::uint64_t> cap, std::uint64_t seed) {
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    throw PreconditionError("minor size " + std::to_string(k) + " out of range for a " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()) + " matrix");
  if (m.cols() > 64) throw PreconditionError("minor enumeration supports at most 64 columns");
  MinorList out;
  std::uint64_t row_count = binomial(m.rows(), k);
  std::uint64_t col_count = binomial(m.cols(), k);
  unsigned __int128 total = static_cast<unsigned __int128>(row_count) * col_count;

  if (!cap || total <= *cap) {
    auto col_sets = all_subsets(m.cols(), k);
    for (const auto& rows : all_subsets(m.rows(), k)) {
      auto minors = minors_for_rows(m, rows, col_sets);
      for (std::size_t i = 0; i < minors.size(); ++i) {
        out.minors.push_back(std::move(minors[i]));
        out.indices.push_back({rows, col_sets[i]});
      }
    }
    return out;
  }

  // Floyd's sampling of `cap` distinct linear indices.
  out.capped = true;
  std::mt19937_64 rng(seed);
  std::uint64_t n = static_cast<std::uint64_t>(total);
  std::unordered_set<std::uint64_t> chosen;
  for (std::uint64_t j = n - *cap; j < n; ++j) {
    std::uniform_int_distribution<std::uint64_t> dist(0, j);
    std::uint64_t t = dist(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> picks(chosen.begin(), chosen.end());
  std::sort(picks.begin(), picks.end());
  std::size_t i = 0;
  while (i < picks.size()) {
    std::uint64_t row_rank = picks[i] / col_count;
    Subset rows = unrank_subset(m.rows(), k, row_rank);
    std::vector<Subset> col_sets;
    for (; i < picks.size() && picks[i] / col_count == row_rank; ++i)
      col_sets.push_back(unrank_subset(m.cols(), k, picks[i] % col_count));
    auto minors = minors_for_rows(m, rows, col_sets);
    for (std::size_t j = 0; j < minors.size(); ++j) {
      out.minors.push_back(std::move(minors[j]));
      out.indices.push_back({rows, col_sets[j]});
    }
  }
  return out;
}

}  // namespace terracini
