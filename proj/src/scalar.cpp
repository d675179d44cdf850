#include "p23/scalar.hpp"

#include <limits>
#include <ostream>

namespace p23 {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

bool fits_small(i128 v) { return v >= -i128(kSmallMax) && v <= i128(kSmallMax); }

mpz_class mpz_from_i128(i128 v) {
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(std::uint64_t(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(std::uint64_t(mag)));
  mpz_class out = (hi << 64) + lo;
  return v < 0 ? mpz_class(-out) : out;
}

bool mpz_fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z.get_si() != std::numeric_limits<long>::min();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return std::uint64_t(u128(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p > std::uint64_t(kSmallMax))
    throw std::invalid_argument("prime field modulus out of range: " + std::to_string(p));
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("prime field modulus is not prime: " + std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar::rational(v, 1);
  i128 r = i128(v) % i128(p_);
  if (r < 0) r += p_;
  return Scalar::residue(p_, std::uint64_t(r));
}

Scalar Field::parse(std::string_view text) const {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
  }
  if (!all_digits(num_text) || !all_digits(den_text))
    throw ParseError("malformed scalar: '" + std::string(text) + "'");
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in scalar: '" + std::string(text) + "'");
  if (negative) num = -num;

  if (is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar::from_mpq(std::move(q));
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class n = num % p;
  if (n < 0) n += p;
  mpz_class d = den % p;
  if (d == 0)
    throw ParseError("denominator divisible by " + std::to_string(p_) + " in scalar: '" +
                     std::string(text) + "'");
  Scalar a = Scalar::residue(p_, n.get_ui());
  Scalar b = Scalar::residue(p_, d.get_ui());
  return a / b;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Scalar& other)
    : p_(other.p_),
      num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    p_ = other.p_;
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Field Scalar::field() const {
  Field f;
  f.p_ = p_;
  return f;
}

Scalar Scalar::residue(std::uint64_t p, std::uint64_t r) {
  Scalar s;
  s.p_ = p;
  s.num_ = std::int64_t(r);
  s.den_ = 1;
  return s;
}

Scalar Scalar::rational(i128 num, i128 den) {
  if (num == 0) return Scalar{};
  u128 g = gcd128(abs128(num), abs128(den));
  num /= i128(g);
  den /= i128(g);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (fits_small(num) && fits_small(den)) {
    Scalar s;
    s.num_ = std::int64_t(num);
    s.den_ = std::int64_t(den);
    return s;
  }
  Scalar s;
  s.big_ = std::make_unique<mpq_class>(mpz_from_i128(num), mpz_from_i128(den));
  return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
  Scalar s;
  if (mpz_fits_small(q.get_num()) && mpz_fits_small(q.get_den())) {
    s.num_ = q.get_num().get_si();
    s.den_ = q.get_den().get_si();
  } else {
    s.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return s;
}

mpq_class Scalar::as_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (p_ != rhs.p_) throw FieldMismatch("scalar field mismatch: " + field().name() + " vs " + rhs.field().name());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (p_ != 0) {
    std::uint64_t r = std::uint64_t(num_) + std::uint64_t(rhs.num_);
    if (r >= p_) r -= p_;
    num_ = std::int64_t(r);
    return *this;
  }
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t out = 0;
      if (!__builtin_add_overflow(num_, rhs.num_, &out) && out != std::numeric_limits<std::int64_t>::min()) {
        num_ = out;
        return *this;
      }
    }
    u128 g = gcd128(u128(den_), u128(rhs.den_));
    i128 lhs_scale = i128(rhs.den_) / i128(g);
    i128 rhs_scale = i128(den_) / i128(g);
    *this = rational(i128(num_) * lhs_scale + i128(rhs.num_) * rhs_scale, i128(den_) * lhs_scale);
    return *this;
  }
  *this = from_mpq(as_mpq() + rhs.as_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (p_ != 0) {
    num_ = std::int64_t(mulmod(std::uint64_t(num_), std::uint64_t(rhs.num_), p_));
    return *this;
  }
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t out = 0;
      if (!__builtin_mul_overflow(num_, rhs.num_, &out) && out != std::numeric_limits<std::int64_t>::min()) {
        num_ = out;
        return *this;
      }
    }
    if (num_ == 0 || rhs.num_ == 0) {
      *this = Scalar{};
      return *this;
    }
    u128 g1 = gcd128(abs128(num_), u128(rhs.den_));
    u128 g2 = gcd128(abs128(rhs.num_), u128(den_));
    i128 num = (i128(num_) / i128(g1)) * (i128(rhs.num_) / i128(g2));
    i128 den = (i128(den_) / i128(g2)) * (i128(rhs.den_) / i128(g1));
    *this = rational(num, den);
    return *this;
  }
  *this = from_mpq(as_mpq() * rhs.as_mpq());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar& Scalar::add_mul(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) {
    require_same_field(a);
    require_same_field(b);
    return *this;
  }
  Scalar t = a;
  t *= b;
  return *this += t;
}

Scalar Scalar::operator-() const {
  if (p_ != 0) return residue(p_, num_ == 0 ? 0 : p_ - std::uint64_t(num_));
  if (big_) return from_mpq(-*big_);
  Scalar s;
  s.num_ = -num_;  // num_ never holds INT64_MIN
  s.den_ = den_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (p_ != 0) return residue(p_, powmod(std::uint64_t(num_), p_ - 2, p_));
  if (big_) return from_mpq(1 / *big_);
  return rational(den_, num_);
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (p_ != 0 || den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpz_class Scalar::numerator() const {
  if (big_) return big_->get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Scalar::denominator() const {
  if (big_) return big_->get_den();
  return mpz_class(static_cast<long>(den_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace p23
