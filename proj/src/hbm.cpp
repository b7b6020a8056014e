#include "hilburch/hbm.hpp"

#include <sstream>

#include "hilburch/errors.hpp"
#include "hilburch/parse.hpp"

namespace hilburch {

Deformation::Deformation(Staircase e, const Field& field, int cap)
    : e_(std::move(e)), field_(field),
      cap_(cap > 0 ? cap : e_.socle_degree() + 2),
      entries_(static_cast<std::size_t>((e_.t() + 1) * e_.t()), YPoly(field, cap_)) {}

void Deformation::set(int i, int j, const YPoly& f) {
  if (f.field() != field_) throw DomainError("entry from a different field");
  at(i, j) = f.with_cap(cap_);
}

bool Deformation::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Deformation::strictly_lower_triangular() const {
  for (int i = 1; i <= rows(); ++i)
    for (int j = i; j <= cols(); ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

PolyMatrix to_matrix(const Deformation& n, int cap) {
  PolyMatrix m = canonical_H(n.E(), n.field());
  PolyMatrix out(m.rows(), m.cols(), n.field(), cap);
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      out.at(i, j) = (m.at(i, j) + n.at(i, j).to_bipoly()).with_cap(cap);
  return out;
}

Deformation from_matrix(const Staircase& e, const PolyMatrix& m, int cap) {
  if (m.rows() != e.t() + 1 || m.cols() != e.t())
    throw DomainError("matrix shape does not match the staircase");
  Deformation n(e, m.field(), cap);
  PolyMatrix h = canonical_H(e, m.field());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      n.set(i, j, YPoly::from_bipoly(m.at(i, j) - h.at(i, j)));
  return n;
}

nlohmann::json to_json(const Deformation& n) {
  nlohmann::json j;
  j["staircase"] = {{"t", n.E().t()}, {"m", n.E().m()}};
  auto& rows = j["entries"] = nlohmann::json::array();
  for (int i = 1; i <= n.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (int k = 1; k <= n.cols(); ++k) row.push_back(to_string(n.at(i, k)));
    rows.push_back(row);
  }
  return j;
}

Deformation deformation_from_json(const nlohmann::json& j, const Field& field) {
  if (!j.contains("staircase") || !j.contains("entries"))
    throw ParseError("deformation JSON needs 'staircase' and 'entries'", 0);
  Staircase e = parse_staircase(j.at("staircase").dump());
  Deformation n(e, field);
  const auto& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n.rows())
    throw DomainError("deformation JSON: wrong number of rows");
  for (int i = 1; i <= n.rows(); ++i) {
    const auto& row = rows.at(i - 1);
    if (!row.is_array() || static_cast<int>(row.size()) != n.cols())
      throw DomainError("deformation JSON: wrong number of columns");
    for (int k = 1; k <= n.cols(); ++k)
      n.set(i, k, parse_ypoly(row.at(k - 1).get<std::string>(), field));
  }
  return n;
}

FamilyFlags classify_deformation(const Deformation& n) {
  const Staircase& e = n.E();
  const int s = e.socle_degree();
  FamilyFlags f;
  f.in_N = f.in_T0 = true;
  bool le_s = true, lt_d = true;
  for (int i = 1; i <= n.rows(); ++i)
    for (int j = 1; j <= n.cols(); ++j) {
      const YPoly& x = n.at(i, j);
      if (x.is_zero()) continue;
      int bound = i <= j ? e.u(i, j) + 1 : e.u(i, j);
      if (x.ord() < bound) f.in_N = false;
      if (i < j || x.deg() >= e.d(j)) f.in_T0 = false;
      if (x.deg() > s) le_s = false;
      if (x.deg() >= (i <= j ? e.d(i) : e.d(j))) lt_d = false;
    }
  f.in_N_le_s = f.in_N && le_s;
  f.in_N_lt_d = f.in_N && lt_d;
  f.in_M = f.in_N && f.in_T0;
  return f;
}

std::vector<BiPoly> signed_minors(const Deformation& n, int cap) {
  return signed_maximal_minors(to_matrix(n, cap), cap);
}

IdealPresentation phi(const Deformation& n) {
  if (!classify_deformation(n).in_N)
    throw DomainError("deformation violates the order bounds of N(E)");
  const int cap = n.E().socle_degree() + 2;
  return {signed_minors(n, cap), n.field(), cap};
}

std::string CellSlot::name() const {
  return "c_" + std::to_string(i) + "," + std::to_string(j) + "^" + std::to_string(k);
}

std::vector<CellSlot> cell_template(const Staircase& e) {
  std::vector<CellSlot> slots;
  const int t = e.t();
  for (int j = 1; j <= t; ++j)
    for (int i = j + 1; i <= t + 1; ++i)
      for (int k = e.v(i, j); k < e.d(j); ++k) slots.push_back({i, j, k});
  return slots;
}

bool CellPoint::is_origin() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

Scalar CellPoint::coord(int i, int j, int k) const {
  auto slots = cell_template(E);
  for (std::size_t n = 0; n < slots.size(); ++n)
    if (slots[n] == CellSlot{i, j, k}) return coords.at(n);
  throw DomainError("no coordinate c_" + std::to_string(i) + "," +
                    std::to_string(j) + "^" + std::to_string(k) + " in the cell");
}

std::string CellPoint::to_string() const {
  std::string s = "(";
  for (std::size_t n = 0; n < coords.size(); ++n) {
    if (n) s += ",";
    s += coords[n].to_string();
  }
  return s + ")";
}

namespace {

void require_lex_gb(const Staircase& e) {
  if (!classify(e).lex_gb_condition)
    throw DomainError("staircase " + e.to_string() +
                      " violates m_j - j - 1 <= m_i - i; no cell chart");
}

}  // namespace

CellPoint encode_cellpoint(const Deformation& n) {
  require_lex_gb(n.E());
  if (!classify_deformation(n).in_M)
    throw DomainError("deformation is not in the canonical family M(E)");
  CellPoint p{n.E(), n.field(), {}};
  for (const CellSlot& s : cell_template(n.E()))
    p.coords.push_back(n.at(s.i, s.j).coeff(s.k));
  return p;
}

Deformation decode_cellpoint(const CellPoint& p) {
  require_lex_gb(p.E);
  auto slots = cell_template(p.E);
  if (slots.size() != p.coords.size())
    throw DomainError("cell point has " + std::to_string(p.coords.size()) +
                      " coordinates, the cell needs " + std::to_string(slots.size()));
  Deformation n(p.E, p.field);
  for (std::size_t k = 0; k < slots.size(); ++k)
    n.at(slots[k].i, slots[k].j).add_term(slots[k].k, p.coords[k]);
  return n;
}

CellPoint parse_cellpoint(const Staircase& e, std::string_view text,
                          const Field& field) {
  CellPoint p{e, field, {}};
  std::string body(text);
  if (!body.empty() && body.front() == '(') body = body.substr(1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) p.coords.push_back(parse_scalar(item, field));
  if (p.coords.size() != cell_template(e).size())
    throw DomainError("cell point has " + std::to_string(p.coords.size()) +
                      " coordinates, the cell needs " +
                      std::to_string(cell_template(e).size()));
  return p;
}

}  // namespace hilburch
