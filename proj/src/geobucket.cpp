#include "geobucket.hpp"

namespace terracini::detail {

namespace {

std::size_t capacity(std::size_t level) { return std::size_t(8) << (2 * level); }

}  // namespace

std::vector<Term> GeoBucket::merge(std::vector<Term>& a, std::vector<Term>& b) const {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ring_.compare(a[i].monomial, b[j].monomial);
    if (c < 0) {
      out.push_back(std::move(a[i++]));
    } else if (c > 0) {
      out.push_back(std::move(b[j++]));
    } else {
      a[i].coefficient += b[j].coefficient;
      if (!a[i].coefficient.is_zero()) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  return out;
}

void GeoBucket::insert(std::vector<Term>&& ascending) {
  if (ascending.empty()) return;
  std::size_t level = 0;
  while (capacity(level) < ascending.size()) ++level;
  std::vector<Term> carry = std::move(ascending);
  for (;;) {
    if (level >= buckets_.size()) buckets_.resize(level + 1);
    if (buckets_[level].empty()) {
      buckets_[level] = std::move(carry);
      return;
    }
    std::vector<Term> merged = merge(buckets_[level], carry);
    buckets_[level].clear();
    if (merged.size() <= capacity(level)) {
      buckets_[level] = std::move(merged);
      return;
    }
    carry = std::move(merged);
    ++level;
  }
}

void GeoBucket::add_scaled(const std::vector<Term>& terms, std::size_t from, const Monomial& m, const Scalar& c) {
  if (from >= terms.size() || c.is_zero()) return;
  std::vector<Term> v;
  v.reserve(terms.size() - from);
  for (std::size_t k = terms.size(); k-- > from;) v.push_back({terms[k].monomial * m, terms[k].coefficient * c});
  insert(std::move(v));
}

void GeoBucket::add(const std::vector<Term>& terms) {
  std::vector<Term> v(terms.rbegin(), terms.rend());
  insert(std::move(v));
}

std::optional<Term> GeoBucket::pop_leading() {
  for (;;) {
    int best = -1;
    for (std::size_t b = 0; b < buckets_.size(); ++b) {
      if (buckets_[b].empty()) continue;
      if (best < 0 || ring_.compare(buckets_[b].back().monomial, buckets_[best].back().monomial) > 0)
        best = static_cast<int>(b);
    }
    if (best < 0) return std::nullopt;
    Term lead = std::move(buckets_[best].back());
    buckets_[best].pop_back();
    for (std::size_t b = 0; b < buckets_.size(); ++b) {
      if (buckets_[b].empty() || !(buckets_[b].back().monomial == lead.monomial)) continue;
      lead.coefficient += buckets_[b].back().coefficient;
      buckets_[b].pop_back();
    }
    if (!lead.coefficient.is_zero()) return lead;
  }
}

bool GeoBucket::empty_hint() const {
  for (const auto& b : buckets_)
    if (!b.empty()) return false;
  return true;
}

}  // namespace terracini::detail
