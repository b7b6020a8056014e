#include "hilburch/staircase.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hilburch/errors.hpp"
#include "hilburch/parse.hpp"

namespace hilburch {

Staircase::Staircase(std::vector<int> m) : m_(std::move(m)) {
  if (m_.size() < 2) throw DomainError("staircase needs t >= 1");
  if (m_[0] != 0) throw DomainError("staircase must start with m0 = 0");
  if (m_[1] < 1) throw DomainError("staircase needs m1 >= 1 (t minimal)");
  for (std::size_t i = 1; i < m_.size(); ++i)
    if (m_[i] < m_[i - 1]) throw DomainError("staircase m must be nondecreasing");
}

int Staircase::colength() const {
  int c = 0;
  for (int v : m_) c += v;
  return c;
}

int Staircase::socle_degree() const {
  int s = 0;
  for (int a = 0; a < t(); ++a) s = std::max(s, a + m_[t() - a] - 1);
  return s;
}

std::vector<int> Staircase::hilbert_function() const {
  std::vector<int> h(socle_degree() + 1, 0);
  for (Monomial mono : standard_monomials()) ++h[mono.degree()];
  return h;
}

bool Staircase::contains(Monomial mono) const {
  if (mono.a >= t()) return true;
  return mono.b >= m_[t() - mono.a];
}

std::vector<Monomial> Staircase::generators() const {
  std::vector<Monomial> g;
  for (int i = 0; i <= t(); ++i) g.push_back(generator(i));
  return g;
}

std::vector<Monomial> Staircase::minimal_generators() const {
  std::vector<Monomial> g;
  for (int i = 0; i <= t(); ++i)
    if (i == t() || m_[i + 1] > m_[i]) g.push_back(generator(i));
  return g;
}

std::vector<Monomial> Staircase::standard_monomials() const {
  std::vector<Monomial> out;
  for (int a = 0; a < t(); ++a)
    for (int b = 0; b < m_[t() - a]; ++b) out.push_back({a, b});
  return out;
}

std::string Staircase::to_string() const {
  std::string s = "t=" + std::to_string(t()) + "; m=";
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m_[i]);
  }
  return s;
}

std::string Staircase::ideal_string() const {
  std::string s = "(";
  bool first = true;
  for (Monomial g : minimal_generators()) {
    if (!first) s += ",";
    s += g.to_string();
    first = false;
  }
  return s + ")";
}

Staircase staircase_from_generators(const std::vector<Monomial>& gens) {
  int t = -1;
  bool has_y_power = false;
  for (Monomial g : gens) {
    if (g.a == 0 && g.b == 0) throw DomainError("unit ideal");
    if (g.b == 0 && (t < 0 || g.a < t)) t = g.a;
    if (g.a == 0) has_y_power = true;
  }
  if (t < 0 || !has_y_power)
    throw DomainError("monomial ideal is not zero-dimensional");
  std::vector<int> m(t + 1, 0);
  for (int i = 1; i <= t; ++i) {
    int best = -1;
    for (Monomial g : gens)
      if (g.a <= t - i && (best < 0 || g.b < best)) best = g.b;
    m[i] = best;
  }
  return Staircase(std::move(m));
}

Numerics numerics(const Staircase& e) {
  return {e.hilbert_function(), e.colength(), e.socle_degree()};
}

StaircaseFlags classify(const Staircase& e) {
  StaircaseFlags f;
  const int t = e.t();
  f.lex_segment = true;
  for (int i = 1; i <= t; ++i)
    if (e.m(i) <= e.m(i - 1)) f.lex_segment = false;

  f.lex_gb_condition = true;
  for (int i = 2; i <= t && f.lex_gb_condition; ++i)
    for (int j = 1; j < i; ++j)
      if (e.m(j) - j - 1 > e.m(i) - i) {
        f.lex_gb_condition = false;
        int ii = i, jj = j;
        while (ii < t && e.m(ii + 1) == e.m(i)) ++ii;
        while (jj > 1 && e.m(jj - 1) == e.m(j)) --jj;
        f.lex_gb_witness = std::make_pair(ii, jj);
        break;
      }

  f.gorenstein_admissible = true;
  for (int i = 3; i <= t + 1; ++i)
    if (e.u(i, i - 2) > 0) f.gorenstein_admissible = false;
  return f;
}

Staircase lex_segment_of(const std::vector<int>& h) {
  if (h.empty() || h[0] != 1)
    throw DomainError("inadmissible Hilbert function: h(0) must be 1");
  // In each degree i the standard monomials of Lex(h) are the h(i)
  // lex-smallest ones: x^a y^(i-a) for a < h(i).
  int t = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 1 || h[i] > static_cast<int>(i) + 1)
      throw DomainError("inadmissible Hilbert function value at degree " +
                        std::to_string(i));
    t = std::max(t, h[i]);
  }
  auto standard = [&h](int a, int b) {
    int i = a + b;
    return i < static_cast<int>(h.size()) && a < h[i];
  };
  std::vector<int> m(t + 1, 0);
  for (int a = 0; a < t; ++a) {
    int count = 0;
    while (standard(a, count)) ++count;
    m[t - a] = count;
  }
  for (int i = 0; i < static_cast<int>(h.size()); ++i)
    for (int a = 0; a < h[i]; ++a)
      if (a >= t || i - a >= m[t - a])
        throw DomainError("inadmissible Hilbert function: no monomial ideal");
  try {
    Staircase e(std::move(m));
    if (e.hilbert_function() != h)
      throw DomainError("inadmissible Hilbert function: no monomial ideal");
    return e;
  } catch (const DomainError&) {
    throw DomainError("inadmissible Hilbert function: no monomial ideal");
  }
}

namespace {

void enumerate_parts(int remaining, int min_part, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    prefix.push_back(part);
    enumerate_parts(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Staircase> enumerate_staircases(int d) {
  if (d < 1) throw DomainError("colength must be positive");
  std::vector<std::vector<int>> parts;
  std::vector<int> prefix;
  enumerate_parts(d, 1, prefix, parts);
  std::vector<Staircase> out;
  for (auto& p : parts) {
    std::vector<int> m{0};
    m.insert(m.end(), p.begin(), p.end());
    out.emplace_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolyMatrix canonical_H(const Staircase& e, const Field& field) {
  const int t = e.t();
  PolyMatrix h(t + 1, t, field);
  for (int i = 1; i <= t; ++i) {
    h.at(i, i) = BiPoly::monomial(field, {0, e.d(i)});
    h.at(i + 1, i) = -BiPoly::x(field);
  }
  return h;
}

IntMatrix degree_matrix(const Staircase& e) {
  IntMatrix u(e.t() + 1, e.t());
  for (int i = 1; i <= e.t() + 1; ++i)
    for (int j = 1; j <= e.t(); ++j) u.at(i, j) = e.u(i, j);
  return u;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty staircase entry", 0);
    std::string trimmed = item.substr(first, last - first + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(trimmed, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed staircase entry '" + trimmed + "'", 0);
    }
    if (used != trimmed.size())
      throw ParseError("malformed staircase entry '" + trimmed + "'", 0);
    out.push_back(v);
  }
  return out;
}

}  // namespace

Staircase parse_staircase(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty staircase", 0);
  text = text.substr(first);
  if (text.front() == '{') {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("m"))
      throw ParseError("malformed staircase JSON", 0);
    auto m = j.at("m").get<std::vector<int>>();
    Staircase e(std::move(m));
    if (j.contains("t") && j.at("t").get<int>() != e.t())
      throw DomainError("staircase JSON: t does not match m");
    return e;
  }
  if (text.find('x') != std::string_view::npos ||
      text.find('y') != std::string_view::npos) {
    std::vector<Monomial> gens;
    std::string list(text);
    std::replace(list.begin(), list.end(), ',', ';');
    for (const BiPoly& f : parse_poly_list(list, Field::rationals())) {
      if (f.size() != 1 || !f.terms().begin()->second.is_one())
        throw ParseError("staircase generators must be monic monomials", 0);
      gens.push_back(f.terms().begin()->first);
    }
    return staircase_from_generators(gens);
  }
  std::string_view body = text;
  std::optional<int> declared_t;
  if (auto pos = text.find("m="); pos != std::string_view::npos) {
    if (auto tp = text.find("t="); tp != std::string_view::npos && tp < pos) {
      auto semi = text.find(';', tp);
      declared_t = parse_int_list(text.substr(tp + 2, semi - tp - 2)).at(0);
    }
    body = text.substr(pos + 2);
  }
  Staircase e(parse_int_list(body));
  if (declared_t && *declared_t != e.t())
    throw DomainError("staircase text: t does not match m");
  return e;
}

}  // namespace hilburch
