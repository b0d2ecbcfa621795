#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

namespace terracini {

// Exact rational in lowest terms with positive denominator (GMP canonical form).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : value_(value) {}

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  // "n" or "n/d"; the minus sign is ASCII.
  std::string to_string() const;
  static Rational parse(std::string_view text);

 private:
  friend Rational rat_normalize(const mpz_class& num, const mpz_class& den);
  mpq_class value_;
};

Rational rat_normalize(const mpz_class& num, const mpz_class& den);

bool is_prime(std::uint64_t n);

struct PrimeFieldElement {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 2;

  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;
};

PrimeFieldElement fp_inv(PrimeFieldElement a);

class Scalar;

// Either the rationals or Z/p. Cheap to copy.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  // "q" or "fp:<p>".
  static Field parse(std::string_view selector);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime() const { return modulus_ != 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::string selector() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_integer(const mpz_class& v) const;
  Scalar from_rational(const Rational& v) const;
  Scalar parse_scalar(std::string_view text) const;
  // Uniform in [lo, hi] mapped into the field.
  Scalar random_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) const;
  Scalar random_nonzero(std::mt19937_64& rng, std::int64_t bound = 1000) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

class Scalar {
 public:
  Scalar() : value_(Rational()) {}
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(PrimeFieldElement v) : value_(v) {}    // NOLINT(google-explicit-constructor)

  Field field() const;
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  const PrimeFieldElement& residue() const { return std::get<PrimeFieldElement>(value_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar pow(unsigned e) const;
  std::string to_string() const;

 private:
  std::variant<Rational, PrimeFieldElement> value_;
};

}  // namespace terracini
