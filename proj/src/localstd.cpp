#include "hilburch/localstd.hpp"

#include <algorithm>
#include <set>

#include "hilburch/errors.hpp"
#include "hilburch/parse.hpp"

namespace hilburch {

IdealPresentation parse_ideal(std::string_view text, const Field& field,
                              int cap) {
  IdealPresentation j{parse_poly_list(text, field), field, cap};
  for (auto& g : j.gens) g = g.with_cap(cap);
  return j;
}

std::string to_string(const IdealPresentation& j) {
  std::string s = "(";
  for (std::size_t i = 0; i < j.gens.size(); ++i) {
    if (i) s += ", ";
    s += to_string(j.gens[i]);
  }
  return s + ")";
}

nlohmann::json EchelonCertificate::to_json() const {
  nlohmann::json j;
  j["degree"] = degree;
  j["rank"] = rank;
  auto& piv = j["pivots"] = nlohmann::json::array();
  for (Monomial m : pivots) piv.push_back({m.a, m.b});
  auto& rs = j["rows"] = nlohmann::json::array();
  for (const BiPoly& r : rows) rs.push_back(to_string(r));
  return j;
}

namespace {

// Column index of x^a y^b among monomials of degree < D, listed in
// decreasing local order: degree ascending, then lex descending.
inline int column_of(Monomial m) {
  int d = m.degree();
  return d * (d + 1) / 2 + m.b;
}

inline Monomial monomial_of(int col) {
  int d = 0;
  while ((d + 1) * (d + 2) / 2 <= col) ++d;
  int b = col - d * (d + 1) / 2;
  return {d - b, b};
}

struct FpOps {
  using T = std::uint32_t;
  std::uint64_t p;
  T from(const Scalar& s) const { return s.residue(); }
  Scalar to(T v, const Field& f) const { return Scalar::from_residue(f, v); }
  bool is_zero(T v) const { return v == 0; }
  T zero() const { return 0; }
  // r -= f * s
  void axpy(std::vector<T>& r, const std::vector<T>& s, T f) const {
    std::uint64_t neg = p - f;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (s[c]) r[c] = static_cast<T>((r[c] + neg * s[c]) % p);
  }
  void scale(std::vector<T>& r, T f) const {
    for (auto& v : r)
      if (v) v = static_cast<T>(static_cast<std::uint64_t>(v) * f % p);
  }
  T inverse(T v) const {
    std::uint64_t result = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<T>(result);
  }
};

struct QOps {
  using T = mpq_class;
  T from(const Scalar& s) const { return s.rational(); }
  Scalar to(const T& v, const Field&) const { return Scalar::from_rational(v); }
  bool is_zero(const T& v) const { return sgn(v) == 0; }
  T zero() const { return 0; }
  void axpy(std::vector<T>& r, const std::vector<T>& s, const T& f) const {
    for (std::size_t c = 0; c < r.size(); ++c)
      if (sgn(s[c]) != 0) r[c] -= f * s[c];
  }
  void scale(std::vector<T>& r, const T& f) const {
    for (auto& v : r)
      if (sgn(v) != 0) v *= f;
  }
  T inverse(const T& v) const { return 1 / v; }
};

template <class Ops>
class Echelon {
 public:
  using T = typename Ops::T;
  Echelon(Ops ops, int n) : ops_(std::move(ops)), n_(n), pivot_row_(n, -1) {}

  void insert(std::vector<T> r) {
    for (int c = 0; c < n_; ++c) {
      if (ops_.is_zero(r[c]) || pivot_row_[c] < 0) continue;
      T f = r[c];
      ops_.axpy(r, rows_[pivot_row_[c]], f);
    }
    int lead = 0;
    while (lead < n_ && ops_.is_zero(r[lead])) ++lead;
    if (lead == n_) return;
    ops_.scale(r, ops_.inverse(r[lead]));
    for (auto& other : rows_) {
      if (ops_.is_zero(other[lead])) continue;
      T f = other[lead];
      ops_.axpy(other, r, f);
    }
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
  }

  bool is_pivot(int c) const { return pivot_row_[c] >= 0; }
  const std::vector<T>& row_for(int c) const { return rows_[pivot_row_[c]]; }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  Ops ops_;
  int n_;
  std::vector<int> pivot_row_;
  std::vector<std::vector<T>> rows_;
};

template <class Ops>
std::optional<EchelonCertificate> try_degree(const IdealPresentation& j,
                                             const Ops& ops, int D) {
  using T = typename Ops::T;
  const int n = D * (D + 1) / 2;
  Echelon<Ops> ech(ops, n);
  for (const BiPoly& g0 : j.gens) {
    BiPoly g = g0.with_cap(D);
    if (g.is_zero()) continue;
    int o = g.ord();
    for (int e = 0; e + o < D; ++e)
      for (int b = 0; b <= e; ++b) {
        std::vector<T> row(n, ops.zero());
        for (const auto& [m, c] : g.terms()) {
          Monomial p = m * Monomial{e - b, b};
          if (p.degree() < D) row[column_of(p)] = ops.from(c);
        }
        ech.insert(std::move(row));
      }
  }
  for (int c = (D - 1) * D / 2; c < n; ++c)
    if (!ech.is_pivot(c)) return std::nullopt;

  EchelonCertificate cert;
  cert.degree = D;
  cert.rank = ech.rank();
  for (int c = 0; c < n; ++c) {
    if (!ech.is_pivot(c)) continue;
    cert.pivots.push_back(monomial_of(c));
    BiPoly row(j.field);
    const auto& r = ech.row_for(c);
    for (int k = 0; k < n; ++k)
      if (!ops.is_zero(r[k])) row.add_term(monomial_of(k), ops.to(r[k], j.field));
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

template <class Ops>
std::vector<std::size_t> independent_mod_mj(const IdealPresentation& j,
                                            const Ops& ops, int D) {
  using T = typename Ops::T;
  const int n = D * (D + 1) / 2;
  auto row_of = [&](const BiPoly& g, Monomial shift) {
    std::vector<T> row(n, ops.zero());
    for (const auto& [m, c] : g.terms()) {
      Monomial p = m * shift;
      if (p.degree() < D) row[column_of(p)] = ops.from(c);
    }
    return row;
  };
  Echelon<Ops> ech(ops, n);
  for (const BiPoly& g0 : j.gens) {
    BiPoly g = g0.with_cap(D);
    if (g.is_zero()) continue;
    for (int e = 1; e + g.ord() < D; ++e)
      for (int b = 0; b <= e; ++b) ech.insert(row_of(g, {e - b, b}));
  }
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < j.gens.size(); ++k) {
    int before = ech.rank();
    ech.insert(row_of(j.gens[k].with_cap(D), {0, 0}));
    if (ech.rank() > before) keep.push_back(k);
  }
  return keep;
}

int min_cap(const IdealPresentation& j) {
  int cap = j.cap;
  for (const auto& g : j.gens) cap = std::min(cap, g.cap());
  return cap;
}

}  // namespace

LtResult lt_ideal_local(const IdealPresentation& j, std::optional<int> socle_hint) {
  constexpr int kDegreeLimit = 64;
  bool any = false;
  int max_degree = 0;
  for (const auto& g : j.gens) {
    if (g.field() != j.field) throw DomainError("generator from a different field");
    if (g.is_zero()) continue;
    any = true;
    max_degree = std::max(max_degree, g.degree());
  }
  if (!any) throw DomainError("the zero ideal is not m-primary");

  const int cap = min_cap(j);
  int D = socle_hint ? *socle_hint + 2 : max_degree + 2;
  D = std::max(D, 2);
  while (true) {
    int limit = std::min(cap, kDegreeLimit);
    if (D > limit) D = limit;
    if (D < 1) throw DomainError("cap too small to determine the ideal");
    std::optional<EchelonCertificate> cert;
    if (j.field.is_rational())
      cert = try_degree(j, QOps{}, D);
    else
      cert = try_degree(j, FpOps{j.field.characteristic()}, D);
    if (cert) {
      std::vector<Monomial> gens = cert->pivots;
      for (int b = 0; b < D; ++b) gens.push_back({D - 1 - b, b});
      return {staircase_from_generators(gens), std::move(*cert)};
    }
    if (D >= limit)
      throw DomainError(D >= kDegreeLimit
                            ? "ideal is not m-primary within degree 64"
                            : "ideal is not m-primary within the truncation cap");
    D *= 2;
  }
}

StandardBasis reduced_standard_basis(const IdealPresentation& j,
                                     std::optional<int> socle_hint) {
  LtResult lt = lt_ideal_local(j, socle_hint);
  StandardBasis sb{lt.E, {}, true};
  const auto& cert = lt.certificate;
  for (Monomial g : lt.E.generators()) {
    if (g.degree() >= cert.degree) {
      sb.elements.push_back(BiPoly::monomial(j.field, g));
      continue;
    }
    auto it = std::find(cert.pivots.begin(), cert.pivots.end(), g);
    sb.elements.push_back(cert.rows[it - cert.pivots.begin()]);
  }
  return sb;
}

DivisionResult grauert_divide(const BiPoly& f, const std::vector<BiPoly>& basis,
                              int cap) {
  const Field& field = f.field();
  std::vector<std::pair<Monomial, Scalar>> leads;
  for (const auto& b : basis) leads.push_back(b.leading_term(OrderKind::LocalDeg));

  DivisionResult out;
  out.quotients.assign(basis.size(), BiPoly(field, cap));
  out.remainder = BiPoly(field, cap);
  BiPoly p = f.with_cap(cap);
  while (!p.is_zero()) {
    auto [m, c] = p.leading_term(OrderKind::LocalDeg);
    std::size_t i = 0;
    while (i < leads.size() && !leads[i].first.divides(m)) ++i;
    if (i == leads.size()) {
      out.remainder.add_term(m, c);
      p.add_term(m, -c);
      continue;
    }
    Monomial shift = m / leads[i].first;
    Scalar factor = c / leads[i].second;
    out.quotients[i].add_term(shift, factor);
    p -= mul_truncated(BiPoly::term(factor, shift), basis[i], cap);
  }
  return out;
}

std::vector<YPoly> y_divide(const BiPoly& f, const StandardBasis& basis, int cap) {
  const Staircase& e = basis.E;
  const int t = e.t();
  const Field& field = f.field();
  std::vector<YPoly> q(t + 1, YPoly(field, cap));
  BiPoly g = f.with_cap(cap);
  while (!g.is_zero()) {
    auto [lead, c] = g.leading_term(OrderKind::LocalDeg);
    for (const auto& [m, v] : g.terms())
      if (m.a > t) throw DomainError("y_divide: a term is divisible by x^(t+1)");
    int s = lead.a, r = lead.b;
    int i = t - s;
    if (r < e.m(i)) throw DomainError("y_divide: element is not in the ideal");
    const BiPoly& fi = basis.elements.at(i);
    Scalar factor = c / fi.leading_term(OrderKind::LocalDeg).second;
    q[i].add_term(r - e.m(i), factor);
    g -= mul_truncated(BiPoly::term(factor, {0, r - e.m(i)}), fi, cap);
  }
  return q;
}

bool verify_standard_basis(const std::vector<BiPoly>& f, const Field& field,
                           int cap) {
  std::vector<Monomial> leads;
  for (const auto& g : f) {
    Monomial m = g.leading_monomial(OrderKind::LocalDeg);
    if (std::find(leads.begin(), leads.end(), m) != leads.end())
      throw DomainError("duplicate leading terms");
    leads.push_back(m);
  }
  Staircase expected = staircase_from_generators(leads);
  IdealPresentation j{f, field, cap};
  return lt_ideal_local(j, expected.socle_degree()).E == expected;
}

bool verify_minor_system(const Staircase& e, const std::vector<BiPoly>& f) {
  if (static_cast<int>(f.size()) != e.t() + 1) return false;
  for (int i = 0; i <= e.t(); ++i) {
    if (f[i].is_zero()) return false;
    if (f[i].leading_monomial(OrderKind::LocalDeg) != e.generator(i)) return false;
  }
  return true;
}

bool is_lifting(const Staircase& e, int j, const std::vector<BiPoly>& v) {
  const int t = e.t();
  if (j < 1 || j > t) throw DomainError("column index out of range");
  if (static_cast<int>(v.size()) != t + 1)
    throw DomainError("lifting vector must have t+1 entries");
  const Field field = v.front().field();
  Monomial target{t - j + 1, e.m(j)};
  for (int i = 1; i <= t + 1; ++i) {
    BiPoly n = v[i - 1];
    if (i == j) n -= BiPoly::monomial(field, {0, e.d(j)});
    if (i == j + 1) n += BiPoly::x(field);
    if (n.is_zero()) continue;
    Monomial lead = n.leading_monomial(OrderKind::LocalDeg);
    Monomial shifted = lead * Monomial{t - i + 1, e.m(i - 1)};
    if (!greater(target, shifted, OrderKind::LocalDeg)) return false;
  }
  return true;
}

namespace {

BiPoly monic(const BiPoly& f, OrderKind order) {
  return f * f.leading_term(order).second.inverse();
}

BiPoly lex_normal_form(BiPoly f, const std::vector<BiPoly>& g) {
  BiPoly r(f.field());
  while (!f.is_zero()) {
    auto [m, c] = f.leading_term(OrderKind::Lex);
    bool reduced = false;
    for (const auto& h : g) {
      auto [hm, hc] = h.leading_term(OrderKind::Lex);
      if (!hm.divides(m)) continue;
      f -= h.shifted(m / hm, c / hc);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(m, c);
      f.add_term(m, -c);
    }
  }
  return r;
}

Monomial lcm(Monomial u, Monomial v) {
  return {std::max(u.a, v.a), std::max(u.b, v.b)};
}

}  // namespace

std::vector<BiPoly> buchberger_lex(const std::vector<BiPoly>& gens) {
  std::vector<BiPoly> g;
  for (const auto& f : gens) {
    if (f.cap() != kUnbounded) throw DomainError("buchberger_lex needs polynomials");
    if (!f.is_zero()) g.push_back(monic(f, OrderKind::Lex));
  }
  if (g.empty()) throw DomainError("the zero ideal is not zero-dimensional");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = 0; k < i; ++k) pairs.emplace_back(k, i);
  while (!pairs.empty()) {
    auto [a, b] = pairs.back();
    pairs.pop_back();
    Monomial ma = g[a].leading_monomial(OrderKind::Lex);
    Monomial mb = g[b].leading_monomial(OrderKind::Lex);
    Monomial l = lcm(ma, mb);
    if (l == ma * mb) continue;
    BiPoly s = g[a].shifted(l / ma, Scalar::one(g[a].field())) -
               g[b].shifted(l / mb, Scalar::one(g[b].field()));
    BiPoly r = lex_normal_form(s, g);
    if (r.is_zero()) continue;
    g.push_back(monic(r, OrderKind::Lex));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimise, then interreduce.
  std::vector<BiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Monomial mi = g[i].leading_monomial(OrderKind::Lex);
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      Monomial mk = g[k].leading_monomial(OrderKind::Lex);
      if (mk.divides(mi) && (mk != mi || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BiPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    auto [m, c] = minimal[i].leading_term(OrderKind::Lex);
    BiPoly tail = minimal[i];
    tail.add_term(m, -c);
    minimal[i] = BiPoly::monomial(tail.field(), m) + lex_normal_form(tail, others);
  }
  std::sort(minimal.begin(), minimal.end(), [](const BiPoly& u, const BiPoly& v) {
    return greater(u.leading_monomial(OrderKind::Lex),
                   v.leading_monomial(OrderKind::Lex), OrderKind::Lex);
  });

  bool has_x = false, has_y = false;
  for (const auto& f : minimal) {
    Monomial m = f.leading_monomial(OrderKind::Lex);
    has_x |= m.b == 0;
    has_y |= m.a == 0;
  }
  if (!has_x || !has_y) throw DomainError("ideal is not zero-dimensional");
  return minimal;
}

Staircase lt_ideal_lex(const std::vector<BiPoly>& gens) {
  std::vector<Monomial> leads;
  for (const auto& f : buchberger_lex(gens)) {
    Monomial m = f.leading_monomial(OrderKind::Lex);
    if (m.degree() == 0) throw DomainError("unit ideal");
    leads.push_back(m);
  }
  return staircase_from_generators(leads);
}

std::vector<BiPoly> contract_to_poly_ring(const IdealPresentation& j) {
  const int s = lt_ideal_local(j).E.socle_degree();
  std::vector<BiPoly> out;
  for (const auto& g : j.gens) {
    BiPoly p = g.truncate(s).with_cap(kUnbounded);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  for (int b = 0; b <= s + 1; ++b)
    out.push_back(BiPoly::monomial(j.field, {s + 1 - b, b}));
  return out;
}

std::vector<std::size_t> minimal_generator_indices(const IdealPresentation& j) {
  const int s = lt_ideal_local(j).E.socle_degree();
  const int D = s + 2;
  if (min_cap(j) < D) throw DomainError("cap too small to count generators");
  if (j.field.is_rational()) return independent_mod_mj(j, QOps{}, D);
  return independent_mod_mj(j, FpOps{j.field.characteristic()}, D);
}

std::string ideal_fingerprint(const IdealPresentation& j) {
  StandardBasis sb = reduced_standard_basis(j);
  std::string s = j.field.name() + ":";
  for (const auto& f : sb.elements) s += to_string(f) + ";";
  return s;
}

bool ideal_contains(const IdealPresentation& a, const IdealPresentation& b) {
  StandardBasis sb = reduced_standard_basis(a);
  const int s = sb.E.socle_degree();
  for (const auto& g : b.gens) {
    if (g.cap() <= s)
      throw DomainError("generator known only below the socle degree");
    if (!grauert_divide(g, sb, s + 2).remainder.is_zero()) return false;
  }
  return true;
}

bool same_ideal(const IdealPresentation& a, const IdealPresentation& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

}  // namespace hilburch
