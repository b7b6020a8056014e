#include "hilburch/poly.hpp"

#include <algorithm>

#include "hilburch/errors.hpp"

namespace hilburch {

BiPoly::BiPoly(const Field& field, int cap) : field_(field), cap_(cap) {
  if (cap < 0) throw DomainError("negative truncation cap");
}

BiPoly BiPoly::constant(const Field& field, long value, int cap) {
  return constant(Scalar(field, value), cap);
}

BiPoly BiPoly::constant(const Scalar& value, int cap) {
  return term(value, {0, 0}, cap);
}

BiPoly BiPoly::term(const Scalar& coeff, Monomial m, int cap) {
  BiPoly f(coeff.field(), cap);
  f.add_term(m, coeff);
  return f;
}

BiPoly BiPoly::monomial(const Field& field, Monomial m, int cap) {
  return term(Scalar::one(field), m, cap);
}

Scalar BiPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void BiPoly::add_term(Monomial m, const Scalar& c) {
  if (c.is_zero() || m.degree() >= cap_) return;
  if (c.field() != field_) throw DomainError("term from a different field");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int BiPoly::ord() const {
  if (is_zero()) throw DomainError("order of the zero polynomial");
  int o = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) o = std::min(o, m.degree());
  return o;
}

int BiPoly::degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::pair<Monomial, Scalar> BiPoly::leading_term(OrderKind order) const {
  if (is_zero()) throw DomainError("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (greater(it->first, best->first, order)) best = it;
  return *best;
}

bool BiPoly::is_univariate_y() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.a == 0; });
}

BiPoly BiPoly::truncate(int d) const {
  BiPoly r(field_, cap_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

BiPoly BiPoly::with_cap(int cap) const {
  BiPoly r(field_, cap);
  for (const auto& [m, c] : terms_)
    if (m.degree() < cap) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.field_ != field_) throw DomainError("mixed fields in polynomial sum");
  if (o.cap_ < cap_) *this = with_cap(o.cap_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly& BiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly BiPoly::shifted(Monomial shift, const Scalar& c) const {
  BiPoly r(field_, cap_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) {
    Monomial n = m * shift;
    if (n.degree() < cap_) r.terms_.emplace(n, v * c);
  }
  return r;
}

BiPoly mul_truncated(const BiPoly& f, const BiPoly& g, int cap) {
  if (f.field() != g.field())
    throw DomainError("mixed fields in polynomial product");
  int c = std::min({cap, f.cap(), g.cap()});
  BiPoly r(f.field(), c);
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms())
      if (mf.degree() + mg.degree() < c) r.add_term(mf * mg, cf * cg);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  return mul_truncated(a, b, kUnbounded);
}

// --- YPoly ---------------------------------------------------------------

YPoly::YPoly(const Field& field, int cap) : field_(field), cap_(cap) {
  if (cap < 0) throw DomainError("negative truncation cap");
}

YPoly YPoly::monomial(const Scalar& c, int exponent, int cap) {
  YPoly f(c.field(), cap);
  f.add_term(exponent, c);
  return f;
}

YPoly YPoly::from_bipoly(const BiPoly& f) {
  YPoly r(f.field(), f.cap());
  for (const auto& [m, c] : f.terms()) {
    if (m.a != 0) throw DomainError("entry involves x; expected a series in y");
    r.add_term(m.b, c);
  }
  return r;
}

Scalar YPoly::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Scalar::zero(field_) : it->second;
}

void YPoly::add_term(int k, const Scalar& c) {
  if (k < 0) throw DomainError("negative exponent");
  if (c.is_zero() || k >= cap_) return;
  if (c.field() != field_) throw DomainError("term from a different field");
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

int YPoly::ord() const {
  if (is_zero()) throw DomainError("order of the zero series");
  return coeffs_.begin()->first;
}

int YPoly::deg() const {
  if (is_zero()) throw DomainError("degree of the zero series");
  return coeffs_.rbegin()->first;
}

YPoly YPoly::truncate(int d) const {
  YPoly r(field_, cap_);
  for (const auto& [k, c] : coeffs_)
    if (k <= d) r.coeffs_.emplace_hint(r.coeffs_.end(), k, c);
  return r;
}

YPoly YPoly::with_cap(int cap) const {
  YPoly r(field_, cap);
  for (const auto& [k, c] : coeffs_)
    if (k < cap) r.coeffs_.emplace_hint(r.coeffs_.end(), k, c);
  return r;
}

YPoly YPoly::low_part(int d) const { return truncate(d - 1); }

YPoly YPoly::high_quotient(int d) const {
  int cap = cap_ == kUnbounded ? kUnbounded : std::max(cap_ - d, 0);
  YPoly r(field_, cap);
  for (const auto& [k, c] : coeffs_)
    if (k >= d) r.coeffs_.emplace_hint(r.coeffs_.end(), k - d, c);
  return r;
}

BiPoly YPoly::to_bipoly() const {
  BiPoly r(field_, cap_);
  for (const auto& [k, c] : coeffs_) r.add_term({0, k}, c);
  return r;
}

YPoly YPoly::operator-() const {
  YPoly r = *this;
  for (auto& [k, c] : r.coeffs_) c = -c;
  return r;
}

YPoly& YPoly::operator+=(const YPoly& o) {
  if (o.field_ != field_) throw DomainError("mixed fields in series sum");
  if (o.cap_ < cap_) *this = with_cap(o.cap_);
  for (const auto& [k, c] : o.coeffs_) add_term(k, c);
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) { return *this += -o; }

YPoly operator*(const YPoly& a, const YPoly& b) {
  if (a.field() != b.field()) throw DomainError("mixed fields in series product");
  YPoly r(a.field(), std::min(a.cap(), b.cap()));
  for (const auto& [i, ca] : a.coeffs())
    for (const auto& [j, cb] : b.coeffs()) r.add_term(i + j, ca * cb);
  return r;
}

}  // namespace hilburch
