#include "bqtop/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace bqtop {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if ((e & 1U) != 0) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce_mpz(const BigInt& z, std::uint64_t m) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), m);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t modulus) {
  Scalar s;
  s.modulus_ = modulus;
  s.r_ = value % modulus;
  return s;
}

Scalar Scalar::reduced(std::uint64_t modulus) const {
  if (modulus_ != 0) {
    if (modulus_ != modulus) throw std::domain_error("mixing residues of different primes");
    return *this;
  }
  std::uint64_t num = reduce_mpz(q_.get_num(), modulus);
  std::uint64_t den = reduce_mpz(q_.get_den(), modulus);
  if (den == 0)
    throw std::domain_error("coefficient " + q_.get_str() + " has a denominator divisible by " +
                            std::to_string(modulus));
  return residue(mulmod(num, powmod(den, modulus - 2, modulus), modulus), modulus);
}

void Scalar::unify(Scalar& o) {
  if (modulus_ == o.modulus_) return;
  if (modulus_ == 0) {
    *this = reduced(o.modulus_);
  } else if (o.modulus_ == 0) {
    o = o.reduced(modulus_);
  } else {
    throw std::domain_error("mixing residues of different primes");
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (modulus_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : modulus_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  Scalar o = other;
  unify(o);
  if (modulus_ == 0)
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % modulus_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  Scalar o = other;
  unify(o);
  if (modulus_ == 0)
    q_ *= o.q_;
  else
    r_ = mulmod(r_, o.r_, modulus_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (modulus_ == 0) return Scalar(Rational(1) / q_);
  return residue(powmod(r_, modulus_ - 2, modulus_), modulus_);
}

Scalar& Scalar::operator/=(const Scalar& other) {
  Scalar o = other;
  unify(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.modulus_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  Scalar x = a;
  Scalar y = b;
  x.unify(y);
  return x.r_ == y.r_;
}

std::string Scalar::to_string() const {
  if (modulus_ == 0) return q_.get_str();
  return std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (1ULL << 62U))
    throw std::invalid_argument("field characteristic must be a prime below 2^62, got " +
                                std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::size_t used = 0;
    unsigned long long p = std::stoull(text.substr(3), &used);
    if (used != text.size() - 3) throw std::invalid_argument("bad field: " + text);
    return prime(p);
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected Q or Fp:<p>)");
}

Scalar Field::from(const Rational& q) const {
  Scalar s(q);
  return p_ == 0 ? s : s.reduced(p_);
}

Scalar Field::from(const Scalar& s) const {
  if (p_ == 0) {
    if (s.is_residue()) throw std::domain_error("cannot lift a residue to Q");
    return s;
  }
  return s.reduced(p_);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

}  // namespace bqtop
