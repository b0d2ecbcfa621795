#include "terracini/fields.hpp"

#include <charconv>

#include "terracini/errors.hpp"

namespace terracini {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("malformed integer literal '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("malformed integer literal '" + std::string(text) + "'");
  mpz_class v(std::string(text.substr(text[0] == '+' ? 1 : 0)), 10);
  return v;
}

void require_same(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  if (a.modulus != b.modulus)
    throw IncompatibleError("scalars from Z/" + std::to_string(a.modulus) + " and Z/" +
                            std::to_string(b.modulus));
}

[[noreturn]] void mixed() { throw IncompatibleError("rational and modular scalars cannot be mixed"); }

}  // namespace

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  r.value_ = a.value_ + b.value_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  r.value_ = a.value_ - b.value_;
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  r.value_ = a.value_ * b.value_;
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero");
  Rational r;
  r.value_ = a.value_ / b.value_;
  return r;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return rat_normalize(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational rat_normalize(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational r;
  r.value_ = mpq_class(num, den);
  r.value_.canonicalize();
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for every 64-bit n.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFieldElement fp_inv(PrimeFieldElement a) {
  if (a.residue == 0) throw ArithmeticError("0 is not invertible mod " + std::to_string(a.modulus));
  __int128 t = 0, new_t = 1;
  __int128 r = a.modulus, new_r = a.residue;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += a.modulus;
  return {static_cast<u64>(t), a.modulus};
}

Field Field::prime(u64 p) {
  if (!terracini::is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view selector) {
  if (selector == "q" || selector == "Q") return rationals();
  if (selector.substr(0, 3) == "fp:") {
    auto digits = selector.substr(3);
    u64 p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw ParseError("malformed field selector '" + std::string(selector) + "'");
    if (!terracini::is_prime(p)) throw ParseError("field modulus " + std::to_string(p) + " is not prime");
    return Field(p);
  }
  throw ParseError("unknown field selector '" + std::string(selector) + "' (expected q or fp:<prime>)");
}

std::string Field::selector() const { return is_rational() ? "q" : "fp:" + std::to_string(modulus_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar(Rational(static_cast<long>(v)));
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(modulus_);
  if (r < 0) r += modulus_;
  return Scalar(PrimeFieldElement{static_cast<u64>(r), modulus_});
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (is_rational()) return Scalar(Rational(v));
  mpz_class r = v % mpz_class(std::to_string(modulus_));
  if (r < 0) r += mpz_class(std::to_string(modulus_));
  return Scalar(PrimeFieldElement{std::stoull(r.get_str()), modulus_});
}

Scalar Field::from_rational(const Rational& v) const {
  if (is_rational()) return Scalar(v);
  Scalar num = from_integer(v.numerator());
  Scalar den = from_integer(v.denominator());
  if (den.is_zero())
    throw ArithmeticError("denominator of " + v.to_string() + " vanishes mod " + std::to_string(modulus_));
  return num / den;
}

Scalar Field::parse_scalar(std::string_view text) const { return from_rational(Rational::parse(text)); }

Scalar Field::random_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) const {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return from_int(dist(rng));
}

Scalar Field::random_nonzero(std::mt19937_64& rng, std::int64_t bound) const {
  for (;;) {
    Scalar s = random_int(rng, -bound, bound);
    if (!s.is_zero()) return s;
  }
}

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(residue().modulus);
}

bool Scalar::is_zero() const {
  if (auto* p = std::get_if<PrimeFieldElement>(&value_)) return p->residue == 0;
  return rational().is_zero();
}

bool Scalar::is_one() const {
  if (auto* p = std::get_if<PrimeFieldElement>(&value_)) return p->residue == 1;
  return rational().value() == 1;
}

Scalar Scalar::operator-() const {
  if (auto* p = std::get_if<PrimeFieldElement>(&value_))
    return PrimeFieldElement{p->residue == 0 ? 0 : p->modulus - p->residue, p->modulus};
  return -rational();
}

Scalar Scalar::inverse() const {
  if (auto* p = std::get_if<PrimeFieldElement>(&value_)) return fp_inv(*p);
  return Rational(1) / rational();
}

Scalar& Scalar::operator+=(const Scalar& b) {
  if (auto* p = std::get_if<PrimeFieldElement>(&value_)) {
    auto* q = std::get_if<PrimeFieldElement>(&b.value_);
    if (!q) mixed();
    require_same(*p, *q);
    u64 s = p->residue + q->residue;
    if (s >= p->modulus) s -= p->modulus;
    p->residue = s;
    return *this;
  }
  if (!b.is_rational()) mixed();
  value_ = rational() + b.rational();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  if (auto* p = std::get_if<PrimeFieldElement>(&value_)) {
    auto* q = std::get_if<PrimeFieldElement>(&b.value_);
    if (!q) mixed();
    require_same(*p, *q);
    p->residue = p->residue >= q->residue ? p->residue - q->residue : p->residue + p->modulus - q->residue;
    return *this;
  }
  if (!b.is_rational()) mixed();
  value_ = rational() - b.rational();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  if (auto* p = std::get_if<PrimeFieldElement>(&value_)) {
    auto* q = std::get_if<PrimeFieldElement>(&b.value_);
    if (!q) mixed();
    require_same(*p, *q);
    p->residue = mulmod(p->residue, q->residue, p->modulus);
    return *this;
  }
  if (!b.is_rational()) mixed();
  value_ = rational() * b.rational();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero");
  if (is_rational() != b.is_rational()) mixed();
  return *this *= b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) mixed();
  if (a.is_rational()) return a.rational() == b.rational();
  require_same(a.residue(), b.residue());
  return a.residue().residue == b.residue().residue;
}

Scalar Scalar::pow(unsigned e) const {
  if (auto* p = std::get_if<PrimeFieldElement>(&value_))
    return PrimeFieldElement{powmod(p->residue, e, p->modulus), p->modulus};
  Scalar result = Rational(1);
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (auto* p = std::get_if<PrimeFieldElement>(&value_)) return std::to_string(p->residue);
  return rational().to_string();
}

}  // namespace terracini
