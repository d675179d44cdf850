#pragma once

// Exact field elements over Q (arbitrary precision) and F_p (p prime).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace p23 {

class Scalar;

/// Raised when two values from different fields (or algebras) are combined.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed textual input (scalars, algebra files, generator files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Field descriptor: the rationals, or the prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() noexcept { return Field{}; }
  /// Throws std::invalid_argument unless p is prime and below 2^63.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for Q, p for F_p.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// Accepts "-?digits(/digits)?". In F_p a fraction a/b is read as a*b^-1.
  Scalar parse(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  std::uint64_t p_ = 0;
};

/// An element of a Field in canonical form: reduced fraction with positive
/// denominator over Q, residue in [0, p) over F_p. Equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Scalar& other);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  Field field() const;
  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  /// *this += a * b
  Scalar& add_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  /// Throws std::domain_error for zero.
  Scalar inverse() const;

  std::string to_string() const;

  /// Numerator / denominator as GMP integers (denominator is 1 over F_p).
  mpz_class numerator() const;
  mpz_class denominator() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  friend class Field;

  static Scalar residue(std::uint64_t p, std::uint64_t r);
  static Scalar rational(__int128 num, __int128 den);  // den > 0, any common factor
  static Scalar from_mpq(mpq_class q);

  void require_same_field(const Scalar& rhs) const;
  mpq_class as_mpq() const;

  std::uint64_t p_ = 0;  // 0 = rationals
  std::int64_t num_ = 0;  // residue for F_p
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;  // set only when the value does not fit num_/den_
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace p23
