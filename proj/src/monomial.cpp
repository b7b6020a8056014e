#include "hilburch/monomial.hpp"

namespace hilburch {
namespace {

std::strong_ordering lex(Monomial m1, Monomial m2) {
  if (m1.a != m2.a) return m1.a <=> m2.a;
  return m1.b <=> m2.b;
}

}  // namespace

std::strong_ordering compare(Monomial m1, Monomial m2, OrderKind order) {
  switch (order) {
    case OrderKind::Lex:
      return lex(m1, m2);
    case OrderKind::DegLex:
      if (m1.degree() != m2.degree()) return m1.degree() <=> m2.degree();
      return lex(m1, m2);
    case OrderKind::LocalDeg:
      if (m1.degree() != m2.degree()) return m2.degree() <=> m1.degree();
      return lex(m1, m2);
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string s;
  auto var = [&s](char v, int e) {
    if (e == 0) return;
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  var('x', a);
  var('y', b);
  return s.empty() ? "1" : s;
}

}  // namespace hilburch
