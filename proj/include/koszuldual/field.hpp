#ifndef KOSZULDUAL_FIELD_HPP
#define KOSZULDUAL_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace koszuldual {

/// Exact coefficient field: the rationals (p == 0) or GF(p) for a prime p < 2^31.
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  std::string to_string() const;  // "Q" or "GF(p)"

  friend bool operator==(const Field&, const Field&) = default;
};

/// Element of a Field. Elements of different fields never mix; arithmetic
/// between them throws std::logic_error.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long long n);
  /// num/den reduced into f; throws std::domain_error if den vanishes in f.
  static Scalar from_fraction(Field f, const mpz_class& num, const mpz_class& den);

  Field field() const { return Field{p_}; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Rational value (for Q) or the residue 0..p-1 as a rational.
  mpq_class as_rational() const;
  /// "3", "-1/2", or a residue for prime fields.
  std::string to_string() const;
  /// True when to_string() starts with '-'.
  bool is_negative() const;

 private:
  void check_same(const Scalar& o) const;

  std::uint32_t p_ = 0;
  std::int64_t residue_ = 0;
  mpq_class q_;
};

}  // namespace koszuldual

#endif
