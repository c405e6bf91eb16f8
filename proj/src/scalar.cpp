#include "taured/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace taured {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus is not prime: " + std::to_string(p));
  // residues are multiplied in 64 bits
  if (p >= (1u << 31)) throw std::invalid_argument("field modulus too large: " + std::to_string(p));
  return Field{p};
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = value;
  } else {
    long r = value % static_cast<long>(modulus_);
    if (r < 0) r += modulus_;
    s.residue_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& value) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = value;
    s.q_.canonicalize();
    return s;
  }
  std::uint64_t num = reduce_mod(value.get_num(), modulus_);
  std::uint64_t den = reduce_mod(value.get_den(), modulus_);
  if (den == 0)
    throw std::domain_error("denominator vanishes in F_" + std::to_string(modulus_));
  s.residue_ = num * pow_mod(den, modulus_ - 2, modulus_) % modulus_;
  return s;
}

std::string Field::describe() const {
  return modulus_ == 0 ? std::string("rational") : "fp " + std::to_string(modulus_);
}

Field Scalar::field() const {
  return Field{modulus_};
}

bool Scalar::is_zero() const { return modulus_ == 0 ? sgn(q_) == 0 : residue_ == 0; }
bool Scalar::is_one() const { return modulus_ == 0 ? q_ == 1 : residue_ == 1; }

mpq_class Scalar::to_rational() const {
  return modulus_ == 0 ? q_ : mpq_class(static_cast<unsigned long>(residue_));
}

std::string Scalar::to_string() const {
  return modulus_ == 0 ? q_.get_str() : std::to_string(residue_);
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (modulus_ != rhs.modulus_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_ == 0)
    r.q_ = -q_;
  else if (residue_ != 0)
    r.residue_ = modulus_ - residue_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (modulus_ == 0)
    q_ += rhs.q_;
  else
    residue_ = (residue_ + rhs.residue_) % modulus_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (modulus_ == 0)
    q_ -= rhs.q_;
  else
    residue_ = (residue_ + modulus_ - rhs.residue_) % modulus_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (modulus_ == 0)
    q_ *= rhs.q_;
  else
    residue_ = residue_ * rhs.residue_ % modulus_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (modulus_ == 0)
    r.q_ = 1 / q_;
  else
    r.residue_ = pow_mod(residue_, modulus_ - 2, modulus_);
  return r;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.modulus_ != rhs.modulus_) return false;
  return lhs.modulus_ == 0 ? lhs.q_ == rhs.q_ : lhs.residue_ == rhs.residue_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace taured
