#include "hilburch/gorenstein.hpp"

#include <map>
#include <random>
#include <set>

#include "hilburch/cells.hpp"
#include "hilburch/errors.hpp"
#include "hilburch/parse.hpp"

namespace hilburch {

RankProfile rank_profile(const Deformation& n) {
  const Staircase& e = n.E();
  std::vector<std::vector<Scalar>> constant(
      n.rows(), std::vector<Scalar>(n.cols(), Scalar::zero(n.field())));
  for (int i = 1; i <= n.rows(); ++i)
    for (int j = 1; j <= n.cols(); ++j) {
      Scalar c = n.at(i, j).coeff(0);
      if (i == j && e.d(j) == 0) c += Scalar::one(n.field());
      constant[i - 1][j - 1] = c;
    }
  RankProfile r;
  r.rank_const = scalar_rank(std::move(constant));
  r.mu = e.t() + 1 - r.rank_const;
  return r;
}

int minimal_generator_count(const IdealPresentation& j) {
  return static_cast<int>(minimal_generator_indices(j).size());
}

std::vector<BiPoly> minimal_generators(const IdealPresentation& j) {
  std::vector<BiPoly> gens;
  for (std::size_t k : minimal_generator_indices(j)) gens.push_back(j.gens[k]);
  return gens;
}

bool is_gorenstein_point(const CellPoint& p) {
  if (!classify(p.E).lex_segment)
    throw DomainError("the third-diagonal test needs a lex-segment staircase");
  const int t = p.E.t();
  auto slots = cell_template(p.E);
  for (int i = 3; i <= t + 1; ++i) {
    auto it = std::find(slots.begin(), slots.end(), CellSlot{i, i - 2, 0});
    if (it == slots.end() || p.coords[it - slots.begin()].is_zero()) return false;
  }
  return true;
}

bool is_cover(const IdealPresentation& target, const IdealPresentation& candidate) {
  return ideal_contains(target, candidate);
}

bool is_cover(const StandardBasis& target, const IdealPresentation& candidate) {
  const int s = target.E.socle_degree();
  for (const auto& g : candidate.gens) {
    if (g.cap() <= s) throw DomainError("generator known only below the socle degree");
    if (!grauert_divide(g, target, s + 2).remainder.is_zero()) return false;
  }
  return true;
}

nlohmann::json CoverResult::to_json() const {
  nlohmann::json j;
  j["point"] = nlohmann::json::array();
  if (point)
    for (const auto& c : point->coords) j["point"].push_back(c.to_string());
  j["generators"] = nlohmann::json::array();
  for (const auto& g : generators) j["generators"].push_back(to_string(g));
  j["gap"] = colength_gap;
  j["gorenstein"] = gorenstein;
  j["minimal"] = certified_minimal ? "exact" : "upper-bound";
  return j;
}

namespace {

CoverResult make_result(const IdealPresentation& j, std::optional<CellPoint> point,
                        int gap) {
  CoverResult r{j, std::move(point), minimal_generators(j), gap, true, false};
  return r;
}

}  // namespace

std::vector<CoverResult> cover_search(const IdealPresentation& target,
                                      const Staircase& e,
                                      const CoverStrategy& strategy) {
  auto flags = classify(e);
  if (!flags.lex_segment) throw DomainError("cover search needs a lex-segment staircase");
  if (!flags.gorenstein_admissible)
    throw DomainError("staircase " + e.to_string() + " admits no Gorenstein ideals");
  StandardBasis tb = reduced_standard_basis(target);
  const int gap = e.colength() - tb.E.colength();
  if (gap < 0) throw DomainError("cover staircase has smaller colength than the target");

  const Field& field = target.field;
  const auto slots = cell_template(e);
  std::vector<CoverResult> results;
  std::set<std::string> seen;
  auto consider = [&](const CellPoint& p) {
    if (results.size() >= strategy.max_results) return;
    if (!is_gorenstein_point(p)) return;
    if (!seen.insert(p.to_string()).second) return;
    Deformation n = decode_cellpoint(p);
    IdealPresentation j{signed_minors(n, kUnbounded), field, kUnbounded};
    if (is_cover(tb, j)) results.push_back(make_result(j, p, gap));
  };

  for (const auto& p : strategy.extra_points) {
    if (!(p.E == e)) throw DomainError("extra point belongs to a different staircase");
    consider(p);
  }

  if (strategy.kind == CoverStrategy::Kind::ExhaustiveP) {
    if (field.is_rational()) throw DomainError("exhaustive cover search needs F_p");
    const std::uint32_t p = field.characteristic();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (total > strategy.budget / p)
        throw BudgetError("cover search: " + std::to_string(p) + "^" +
                          std::to_string(slots.size()) + " points exceed the budget");
      total *= p;
    }
    std::vector<std::uint32_t> digits(slots.size(), 0);
    while (results.size() < strategy.max_results) {
      CellPoint pt{e, field, {}};
      for (auto d : digits) pt.coords.push_back(Scalar::from_residue(field, d));
      consider(pt);
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  } else {
    std::mt19937_64 rng(strategy.seed);
    for (std::uint64_t s = 0; s < strategy.samples && results.size() < strategy.max_results;
         ++s) {
      CellPoint pt{e, field, {}};
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (field.is_rational()) {
          std::uniform_int_distribution<long> dist(-strategy.bound, strategy.bound);
          pt.coords.emplace_back(field, dist(rng));
        } else {
          std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
          pt.coords.push_back(Scalar::from_residue(field, dist(rng)));
        }
      }
      consider(pt);
    }
  }
  return results;
}

namespace {

// Solutions of A c = b over F_p, enumerated as particular + nullspace span.
std::vector<std::vector<Scalar>> affine_solutions(std::vector<std::vector<Scalar>> a,
                                                  std::vector<Scalar> b,
                                                  const Field& field, int nvars,
                                                  std::uint64_t budget) {
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < nvars && r < rows; ++c) {
    int piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    Scalar inv = a[r][c].inverse();
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (int k = 0; k < rows; ++k) {
      if (k == r || a[k][c].is_zero()) continue;
      Scalar f = a[k][c];
      for (int cc = 0; cc < nvars; ++cc) a[k][cc] -= f * a[r][cc];
      b[k] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int k = r; k < rows; ++k)
    if (!b[k].is_zero()) return {};

  std::vector<int> free_cols;
  for (int c = 0, q = 0; c < nvars; ++c) {
    if (q < r && pivot_col[q] == c) {
      ++q;
      continue;
    }
    free_cols.push_back(c);
  }
  const std::uint32_t p = field.characteristic();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    if (total > budget / p) throw BudgetError("stratum search exceeds the budget");
    total *= p;
  }
  std::vector<std::vector<Scalar>> out;
  std::vector<std::uint32_t> digits(free_cols.size(), 0);
  while (true) {
    std::vector<Scalar> x(nvars, Scalar::zero(field));
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      x[free_cols[k]] = Scalar::from_residue(field, digits[k]);
    for (int q = 0; q < r; ++q) {
      Scalar v = b[q];
      for (int c : free_cols) v -= a[q][c] * x[c];
      x[pivot_col[q]] = v;
    }
    out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

}  // namespace

std::vector<CoverResult> stratum_covers(const StandardBasis& target,
                                        const Staircase& e, std::uint64_t budget,
                                        std::size_t max_results) {
  const Field field = target.elements.front().field();
  if (field.is_rational()) throw DomainError("stratum search needs F_p");
  for (Monomial g : e.generators())
    if (!target.E.contains(g)) return {};
  const int sa = target.E.socle_degree();
  const int gap = e.colength() - target.E.colength();

  auto target_std = target.E.standard_monomials();
  std::map<std::pair<int, int>, int> row_of;
  for (std::size_t k = 0; k < target_std.size(); ++k)
    row_of[{target_std[k].a, target_std[k].b}] = static_cast<int>(k);
  auto normal_form = [&](Monomial m) {
    std::vector<Scalar> v(target_std.size(), Scalar::zero(field));
    BiPoly r = grauert_divide(BiPoly::monomial(field, m), target, sa + 2).remainder;
    for (const auto& [mono, c] : r.terms()) v[row_of.at({mono.a, mono.b})] = c;
    return v;
  };

  const int t = e.t();
  const auto standard = e.standard_monomials();
  std::vector<std::vector<Monomial>> tails(t + 1);
  std::vector<std::vector<std::vector<Scalar>>> choices(t + 1);
  std::uint64_t combos = 1;
  for (int i = 0; i <= t; ++i) {
    for (Monomial mu : standard)
      if (greater(e.generator(i), mu, OrderKind::LocalDeg)) tails[i].push_back(mu);
    const int nv = static_cast<int>(tails[i].size());
    std::vector<std::vector<Scalar>> a(target_std.size(), std::vector<Scalar>(nv));
    for (int c = 0; c < nv; ++c) {
      auto col = normal_form(tails[i][c]);
      for (std::size_t k = 0; k < col.size(); ++k) a[k][c] = col[k];
    }
    std::vector<Scalar> b = normal_form(e.generator(i));
    for (auto& v : b) v = -v;
    choices[i] = affine_solutions(std::move(a), std::move(b), field, nv, budget);
    if (choices[i].empty()) return {};
    if (combos > budget / choices[i].size())
      throw BudgetError("stratum search for " + e.to_string() + " exceeds the budget");
    combos *= choices[i].size();
  }

  std::vector<CoverResult> results;
  std::vector<std::size_t> pick(t + 1, 0);
  while (results.size() < max_results) {
    std::vector<BiPoly> gens;
    for (int i = 0; i <= t; ++i) {
      BiPoly f = BiPoly::monomial(field, e.generator(i));
      for (std::size_t c = 0; c < tails[i].size(); ++c)
        f.add_term(tails[i][c], choices[i][pick[i]][c]);
      gens.push_back(std::move(f));
    }
    IdealPresentation j{gens, field, kUnbounded};
    if (lt_ideal_local(j, e.socle_degree()).E == e) {
      StandardBasis sb{e, gens, true};
      if (rank_profile(syzygy_deformation(sb)).mu == 2)
        results.push_back(make_result(j, std::nullopt, gap));
    }
    int k = 0;
    while (k <= t && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k > t) break;
  }
  return results;
}

nlohmann::json GclResult::to_json() const {
  nlohmann::json j;
  j["colength"] = colength;
  j["gap"] = gap ? nlohmann::json(*gap) : nlohmann::json(nullptr);
  j["kind"] = kind;
  j["ruled_out_below"] = ruled_out_below;
  j["witness"] = witness ? witness->to_json() : nlohmann::json(nullptr);
  return j;
}

GclResult gcl_bound(const IdealPresentation& target, const GclOptions& options) {
  StandardBasis tb = reduced_standard_basis(target);
  GclResult r;
  r.colength = tb.E.colength();
  const int top = options.max_colength > 0 ? options.max_colength : r.colength + 4;
  const Field& field = target.field;
  if (options.exhaustive && field.is_rational())
    throw DomainError("exhaustive Gorenstein colength needs F_p");

  if (minimal_generator_count(target) <= 2) {
    r.gap = 0;
    r.kind = "exact";
    r.witness = make_result(target, std::nullopt, 0);
    r.witness->certified_minimal = true;
    return r;
  }

  bool all_ruled_out = true;
  for (int n = r.colength; n <= top; ++n) {
    std::optional<CoverResult> found;
    // Cheap route first: lex-segment cells through their charts.
    for (const Staircase& e : enumerate_staircases(n)) {
      if (found) break;
      auto flags = classify(e);
      if (!flags.lex_segment || !flags.gorenstein_admissible) continue;
      bool inside = true;
      for (Monomial g : e.generators()) inside &= tb.E.contains(g);
      if (!inside) continue;
      CoverStrategy st;
      st.seed = options.seed;
      st.samples = options.samples;
      st.bound = options.bound;
      st.budget = options.budget;
      for (const auto& p : options.extra_points)
        if (p.E == e) st.extra_points.push_back(p);
      st.kind = field.is_rational() ? CoverStrategy::Kind::RandomQ
                                    : CoverStrategy::Kind::ExhaustiveP;
      std::vector<CoverResult> res;
      try {
        res = cover_search(target, e, st);
      } catch (const BudgetError&) {
        st.kind = CoverStrategy::Kind::RandomQ;
        res = cover_search(target, e, st);
      }
      if (!res.empty()) found = res.front();
    }
    if (!found && options.exhaustive) {
      for (const Staircase& e : enumerate_staircases(n)) {
        auto res = stratum_covers(tb, e, options.budget);
        if (!res.empty()) {
          found = res.front();
          break;
        }
      }
    }
    if (found) {
      r.gap = n - r.colength;
      r.kind = options.exhaustive && all_ruled_out ? "exact" : "upper-bound";
      found->certified_minimal = r.kind == "exact";
      r.witness = std::move(found);
      return r;
    }
    if (options.exhaustive && all_ruled_out) r.ruled_out_below = n - r.colength + 1;
    else all_ruled_out = false;
  }
  r.kind = "none-found";
  return r;
}

}  // namespace hilburch
