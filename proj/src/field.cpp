#include "koszuldual/field.hpp"

#include <stdexcept>

namespace koszuldual {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  // extended Euclid; a != 0 mod p
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return t < 0 ? t + p : t;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  return Field{p};
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::zero(Field f) { return from_int(f, 0); }
Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long long n) {
  Scalar s;
  s.p_ = f.p;
  if (f.is_rational()) {
    s.q_ = mpq_class(mpz_class(std::to_string(n)));
  } else {
    long long r = n % static_cast<long long>(f.p);
    s.residue_ = r < 0 ? r + f.p : r;
  }
  return s;
}

Scalar Scalar::from_fraction(Field f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Scalar s;
  s.p_ = f.p;
  if (f.is_rational()) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  std::int64_t d = reduce(den, f.p);
  if (d == 0) throw std::domain_error("denominator vanishes in " + f.to_string());
  s.residue_ = reduce(num, f.p) * inverse_mod(d, f.p) % f.p;
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw std::logic_error("scalar field mismatch");
}

bool Scalar::is_zero() const { return p_ ? residue_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return p_ ? residue_ == 1 : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.p_ = p_;
  if (p_) {
    r.residue_ = (residue_ + o.residue_) % p_;
  } else {
    r.q_ = q_ + o.q_;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.p_ = p_;
  if (p_) {
    r.residue_ = (residue_ - o.residue_ + p_) % p_;
  } else {
    r.q_ = q_ - o.q_;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.p_ = p_;
  if (p_) {
    r.residue_ = residue_ * o.residue_ % p_;
  } else {
    r.q_ = q_ * o.q_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r;
  r.p_ = p_;
  if (p_) {
    r.residue_ = inverse_mod(residue_, p_);
  } else {
    r.q_ = 1 / q_;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.p_ = p_;
  if (p_) {
    r.residue_ = (p_ - residue_) % p_;
  } else {
    r.q_ = -q_;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return p_ == o.p_ && (p_ ? residue_ == o.residue_ : q_ == o.q_);
}

mpq_class Scalar::as_rational() const {
  return p_ ? mpq_class(static_cast<long>(residue_)) : q_;
}

std::string Scalar::to_string() const {
  return p_ ? std::to_string(residue_) : q_.get_str();
}

bool Scalar::is_negative() const { return p_ == 0 && q_ < 0; }

}  // namespace koszuldual
