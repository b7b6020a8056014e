#include "hilburch/scalar.hpp"

#include <charconv>

#include "hilburch/errors.hpp"

namespace hilburch {
namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw DomainError("field characteristic must be a prime below 2^31, got " +
                      std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
  } else {
    long p = field_.characteristic();
    long r = value % p;
    if (r < 0) r += p;
    residue_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(const Field& field, const mpz_class& num, const mpz_class& den)
    : field_(field) {
  if (den == 0) throw DomainError("division by zero");
  if (field_.is_rational()) {
    q_ = mpq_class(num, den);
    q_.canonicalize();
  } else {
    std::uint32_t p = field_.characteristic();
    std::uint32_t d = reduce(den, p);
    if (d == 0)
      throw DomainError("denominator " + den.get_str() +
                        " is not invertible mod " + std::to_string(p));
    residue_ = static_cast<std::uint32_t>(
        std::uint64_t{reduce(num, p)} * pow_mod(d, p - 2, p) % p);
  }
}

Scalar Scalar::from_rational(const mpq_class& q) {
  Scalar s;
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::from_residue(const Field& field, std::uint64_t residue) {
  Scalar s;
  s.field_ = field;
  s.residue_ = static_cast<std::uint32_t>(residue % field.characteristic());
  return s;
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rational() ? q_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rational() ? q_ == 1 : residue_ == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw DomainError("scalar is not rational");
  return q_;
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw DomainError("scalar is not a residue");
  return residue_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw DomainError("mixed fields: " + field_.name() + " and " +
                      o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational())
    r.q_ = -q_;
  else if (residue_ != 0)
    r.residue_ = field_.characteristic() - residue_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    std::uint64_t s = std::uint64_t{residue_} + o.residue_;
    if (s >= field_.characteristic()) s -= field_.characteristic();
    residue_ = static_cast<std::uint32_t>(s);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} *
                                          o.residue_ % field_.characteristic());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar r = *this;
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.residue_ = pow_mod(residue_, field_.characteristic() - 2,
                         field_.characteristic());
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.residue_ == b.residue_;
}

int Scalar::sign() const {
  if (field_.is_rational()) return sgn(q_);
  if (residue_ == 0) return 0;
  return residue_ <= field_.characteristic() / 2 ? 1 : -1;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  if (sign() >= 0) return std::to_string(residue_);
  return "-" + std::to_string(field_.characteristic() - residue_);
}

Scalar parse_scalar(std::string_view text, const Field& field) {
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den =
      slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  mpz_class n, d;
  if (num.empty() || n.set_str(num, 10) != 0 || den.empty() ||
      d.set_str(den, 10) != 0)
    throw ParseError("malformed number '" + std::string(text) + "'", 0);
  return Scalar(field, n, d);
}

}  // namespace hilburch
