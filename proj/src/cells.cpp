#include "hilburch/cells.hpp"

#include <map>
#include <random>
#include <set>

#include "hilburch/errors.hpp"
#include "hilburch/parse.hpp"

namespace hilburch {

bool membership(const IdealPresentation& j, const Staircase& e) {
  return lt_ideal_local(j, e.socle_degree()).E == e;
}

Deformation syzygy_deformation(const IdealPresentation& j) {
  return syzygy_deformation(reduced_standard_basis(j));
}

Deformation syzygy_deformation(const StandardBasis& basis) {
  const Staircase& e = basis.E;
  const int t = e.t();
  const int s = e.socle_degree();
  if (static_cast<int>(basis.elements.size()) != t + 1)
    throw DomainError("standard basis must have t+1 elements");
  const Field field = basis.elements.front().field();
  for (int i = 0; i <= t; ++i) {
    const BiPoly& f = basis.elements[i];
    if (f.is_zero() || f.leading_monomial(OrderKind::LocalDeg) != e.generator(i))
      throw DomainError("basis element " + std::to_string(i) +
                        " does not have leading term " + e.generator(i).to_string());
    for (const auto& [m, c] : f.terms())
      if (m.a >= t && !(i == 0 && m == e.generator(0)))
        throw DomainError("basis element " + std::to_string(i) +
                          " has a term divisible by x^t");
  }

  const int work_cap = 2 * s + 3;
  Deformation n(e, field, s + 2);
  for (int j = 1; j <= t; ++j) {
    BiPoly sj = mul_truncated(BiPoly::monomial(field, {0, e.d(j)}),
                              basis.elements[j - 1], work_cap) -
                mul_truncated(BiPoly::x(field), basis.elements[j], work_cap);
    std::vector<YPoly> q = y_divide(sj, basis, work_cap);
    for (int i = 1; i <= t + 1; ++i) n.set(i, j, -q[i - 1]);
  }
  return n;
}

Deformation truncate_deformation(const Deformation& n) {
  const int s = n.E().socle_degree();
  Deformation out(n.E(), n.field(), n.cap());
  for (int i = 1; i <= n.rows(); ++i)
    for (int j = 1; j <= n.cols(); ++j) out.set(i, j, n.at(i, j).truncate(s));
  return out;
}

Deformation reduction_move(const Deformation& n, int i, int j) {
  const Staircase& e = n.E();
  if (j < 1 || j > e.t() || i < 1 || i > e.t() + 1)
    throw DomainError("reduction move index out of range");
  if (!n.strictly_lower_triangular())
    throw DomainError("reduction moves need a strictly lower triangular N");
  const YPoly& entry = n.at(i, j);
  if (entry.is_zero() || entry.deg() < e.d(j)) return n;

  BiPoly q = entry.high_quotient(e.d(j)).to_bipoly();
  const int cap = n.cap();
  PolyMatrix m = to_matrix(n, cap);
  m.add_row_multiple(i, j, -q, cap);
  if (j >= 2) m.add_col_multiple(j - 1, i - 1, q, cap);
  return from_matrix(e, m, cap);
}

namespace {

bool lex_and_local_leads_agree(const StandardBasis& sb) {
  for (int i = 0; i <= sb.E.t(); ++i)
    if (sb.elements[i].leading_monomial(OrderKind::Lex) != sb.E.generator(i))
      return false;
  IdealPresentation poly{sb.elements, sb.elements.front().field(), kUnbounded};
  return lt_ideal_lex(contract_to_poly_ring(poly)) == sb.E;
}

}  // namespace

CanonicalResult canonical_deformation(const IdealPresentation& j) {
  StandardBasis sb = reduced_standard_basis(j);
  const Staircase& e = sb.E;
  const bool chart = classify(e).lex_gb_condition;
  if (!chart && !lex_and_local_leads_agree(sb))
    throw DomainError("the reduced standard basis is not a lex Groebner basis "
                      "with the same leading terms; no canonical matrix");

  Deformation n = truncate_deformation(syzygy_deformation(sb));
  if (!n.strictly_lower_triangular())
    throw Error("syzygy matrix is not strictly lower triangular");
  std::vector<std::pair<int, int>> moves;
  for (int col = e.t(); col >= 1; --col)
    for (int row = col + 1; row <= e.t() + 1; ++row) {
      const YPoly& entry = n.at(row, col);
      if (entry.is_zero() || entry.deg() < e.d(col)) continue;
      n = reduction_move(n, row, col);
      moves.emplace_back(row, col);
    }
  if (!classify_deformation(n).in_M)
    throw Error("reduction moves did not reach the canonical family");
  CanonicalResult r{n, std::nullopt, std::move(moves)};
  if (chart) r.point = encode_cellpoint(n);
  return r;
}

int cell_dimension(const Staircase& e) {
  return static_cast<int>(cell_template(e).size());
}

IdealPresentation change_coordinates(const IdealPresentation& j,
                                     const CoordinateChange& g) {
  const Field& field = j.field;
  if ((g[0] * g[3] - g[1] * g[2]).is_zero())
    throw DomainError("coordinate change is singular");
  BiPoly l1 = BiPoly::term(g[0], {1, 0}) + BiPoly::term(g[1], {0, 1});
  BiPoly l2 = BiPoly::term(g[2], {1, 0}) + BiPoly::term(g[3], {0, 1});
  IdealPresentation out{{}, field, j.cap};
  for (const BiPoly& f : j.gens) {
    const int cap = f.cap();
    std::vector<BiPoly> p1{BiPoly::constant(field, 1, cap)};
    std::vector<BiPoly> p2{BiPoly::constant(field, 1, cap)};
    BiPoly r(field, cap);
    for (const auto& [m, c] : f.terms()) {
      while (static_cast<int>(p1.size()) <= m.a)
        p1.push_back(mul_truncated(p1.back(), l1, cap));
      while (static_cast<int>(p2.size()) <= m.b)
        p2.push_back(mul_truncated(p2.back(), l2, cap));
      r += mul_truncated(p1[m.a], p2[m.b], cap) * c;
    }
    out.gens.push_back(std::move(r));
  }
  return out;
}

GinResult generic_initial(const IdealPresentation& j, std::uint64_t seed,
                          int bound) {
  std::mt19937_64 rng(seed);
  const Field& field = j.field;
  auto draw = [&]() {
    if (field.is_rational()) {
      std::uniform_int_distribution<long> dist(-bound, bound);
      return Scalar(field, dist(rng));
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
    return Scalar::from_residue(field, dist(rng));
  };
  GinResult r;
  while (r.draws.size() < 3) {
    CoordinateChange g{draw(), draw(), draw(), draw()};
    if ((g[0] * g[3] - g[1] * g[2]).is_zero()) continue;
    r.changes.push_back(g);
    r.draws.push_back(lt_ideal_local(change_coordinates(j, g)).E);
  }
  r.conclusive = r.draws[0] == r.draws[1] && r.draws[1] == r.draws[2];
  if (r.conclusive) r.E = r.draws[0];
  return r;
}

namespace {

std::uint64_t checked_power(std::uint64_t p, std::size_t n, std::uint64_t budget,
                            const std::string& what) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (total > budget / p)
      throw BudgetError(what + ": " + std::to_string(p) + "^" + std::to_string(n) +
                        " exceeds the budget of " + std::to_string(budget));
    total *= p;
  }
  return total;
}

// Mixed radix counter over F_p^n.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

std::string basis_key(const StandardBasis& sb) {
  std::string s;
  for (const auto& f : sb.elements) s += to_string(f) + ";";
  return s;
}

Deformation deformation_from_slots(const Staircase& e, const Field& field,
                                   const std::vector<CellSlot>& slots,
                                   const std::vector<std::uint32_t>& digits) {
  Deformation n(e, field);
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (digits[k])
      n.at(slots[k].i, slots[k].j)
          .add_term(slots[k].k, Scalar::from_residue(field, digits[k]));
  return n;
}

std::string image_key(const Deformation& n) {
  return basis_key(reduced_standard_basis(phi(n), n.E().socle_degree()));
}

}  // namespace

std::vector<StandardBasis> enumerate_cell(const Staircase& e, const Field& fp,
                                          std::uint64_t budget) {
  if (fp.is_rational()) throw DomainError("cell enumeration needs a prime field");
  const std::uint32_t p = fp.characteristic();
  const int t = e.t();
  const auto standard = e.standard_monomials();
  std::vector<std::pair<int, Monomial>> vars;
  for (int i = 0; i <= t; ++i)
    for (Monomial mu : standard)
      if (greater(e.generator(i), mu, OrderKind::LocalDeg)) vars.emplace_back(i, mu);
  checked_power(p, vars.size(), budget, "cell enumeration");

  std::vector<StandardBasis> out;
  std::vector<std::uint32_t> digits(vars.size(), 0);
  do {
    std::vector<BiPoly> gens;
    for (int i = 0; i <= t; ++i) gens.push_back(BiPoly::monomial(fp, e.generator(i)));
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (digits[k])
        gens[vars[k].first].add_term(vars[k].second, Scalar::from_residue(fp, digits[k]));
    IdealPresentation j{gens, fp, kUnbounded};
    if (lt_ideal_local(j, e.socle_degree()).E == e)
      out.push_back(StandardBasis{e, std::move(gens), true});
  } while (advance(digits, p));
  return out;
}

std::vector<CellSlot> lt_d_template(const Staircase& e) {
  std::vector<CellSlot> slots;
  const int t = e.t();
  for (int j = 1; j <= t; ++j)
    for (int i = 1; i <= t + 1; ++i) {
      int lo = i <= j ? e.u(i, j) + 1 : e.u(i, j);
      int hi = i <= j ? e.d(i) : e.d(j);
      for (int k = std::max(lo, 0); k < hi; ++k) slots.push_back({i, j, k});
    }
  return slots;
}

std::vector<CellSlot> le_s_template(const Staircase& e) {
  std::vector<CellSlot> slots;
  const int t = e.t();
  const int s = e.socle_degree();
  for (int j = 1; j <= t; ++j)
    for (int i = 1; i <= t + 1; ++i) {
      int lo = i <= j ? e.u(i, j) + 1 : e.u(i, j);
      for (int k = std::max(lo, 0); k <= s; ++k) slots.push_back({i, j, k});
    }
  return slots;
}

nlohmann::json ProbeReport::to_json() const {
  nlohmann::json j;
  j["staircase"] = {{"t", E.t()}, {"m", E.m()}};
  j["prime"] = prime;
  j["n_template"] = n_template;
  j["d_template"] = d_template;
  j["cell_count"] = cell_count;
  j["image_count"] = image_count;
  j["le_s_image_count"] = le_s_image_count;
  j["le_s_method"] = le_s_method;
  j["injective"] = injective;
  j["pass"] = pass;
  auto& ce = j["counterexamples"] = nlohmann::json::array();
  for (const auto& [a, b] : counterexamples)
    ce.push_back({hilburch::to_json(a), hilburch::to_json(b)});
  return j;
}

ProbeReport conjecture_probe(const Staircase& e, std::uint32_t p,
                             std::uint64_t budget) {
  const Field fp = Field::prime(p);
  ProbeReport r(e);
  r.prime = p;
  auto d_slots = lt_d_template(e);
  auto s_slots = le_s_template(e);
  r.d_template = static_cast<int>(d_slots.size());
  r.n_template = static_cast<int>(s_slots.size());
  const std::uint64_t d_count = checked_power(p, d_slots.size(), budget, "probe");

  std::set<std::string> cell;
  auto members = enumerate_cell(e, fp, budget);
  for (const auto& sb : members) cell.insert(basis_key(sb));
  r.cell_count = cell.size();

  std::map<std::string, Deformation> image;
  bool inside = true;
  std::vector<std::uint32_t> digits(d_slots.size(), 0);
  do {
    Deformation n = deformation_from_slots(e, fp, d_slots, digits);
    std::string key = image_key(n);
    if (!cell.count(key)) inside = false;
    auto [it, fresh] = image.try_emplace(key, n);
    if (!fresh && r.counterexamples.size() < 5)
      r.counterexamples.emplace_back(it->second, n);
  } while (advance(digits, p));
  r.image_count = image.size();
  r.injective = r.image_count == d_count;

  bool s_exhaustive = true;
  try {
    checked_power(p, s_slots.size(), budget, "probe");
  } catch (const BudgetError&) {
    s_exhaustive = false;
  }
  if (s_exhaustive) {
    r.le_s_method = "exhaustive";
    std::set<std::string> s_image;
    std::vector<std::uint32_t> sd(s_slots.size(), 0);
    do s_image.insert(image_key(deformation_from_slots(e, fp, s_slots, sd)));
    while (advance(sd, p));
    r.le_s_image_count = s_image.size();
  } else {
    // Surjectivity certificates: every member of V(E) is hit by the truncated
    // syzygy matrix of its standard basis.
    r.le_s_method = "certificates";
    for (const auto& sb : members) {
      Deformation n = truncate_deformation(syzygy_deformation(sb));
      if (classify_deformation(n).in_N_le_s && image_key(n) == basis_key(sb))
        ++r.le_s_image_count;
    }
  }
  r.pass = inside && r.injective && r.image_count == r.cell_count &&
           r.le_s_image_count == r.cell_count && r.cell_count == d_count;
  return r;
}

IdealPresentation lex_failure_witness(const Staircase& e, const Field& field) {
  auto flags = classify(e);
  if (!flags.lex_gb_witness)
    throw DomainError("staircase satisfies m_j - j - 1 <= m_i - i; no witness");
  auto [i, j] = *flags.lex_gb_witness;
  const int t = e.t();
  IdealPresentation out{{}, field, kUnbounded};
  for (int k = 0; k <= t; ++k) {
    BiPoly f = BiPoly::monomial(field, e.generator(k));
    if (k == i) f += BiPoly::monomial(field, {t - j, e.m(j) - 1});
    out.gens.push_back(std::move(f));
  }
  return out;
}

}  // namespace hilburch
