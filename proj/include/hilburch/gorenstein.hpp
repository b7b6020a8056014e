#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilburch/hbm.hpp"
#include "hilburch/localstd.hpp"

namespace hilburch {

struct RankProfile {
  int mu = 0;
  int rank_const = 0;
};

/// Rank of the constant part of H+N and mu = t+1 - rank.
RankProfile rank_profile(const Deformation& n);

/// Minimal number of generators of an m-primary ideal.
int minimal_generator_count(const IdealPresentation& j);
/// A minimal generating subset, keeping earlier generators first.
std::vector<BiPoly> minimal_generators(const IdealPresentation& j);

/// Third-diagonal test c_{i,i-2}^0 != 0 for 3 <= i <= t+1. Throws DomainError
/// unless E is a lex-segment staircase.
bool is_gorenstein_point(const CellPoint& p);

/// candidate is contained in target.
bool is_cover(const IdealPresentation& target, const IdealPresentation& candidate);
bool is_cover(const StandardBasis& target, const IdealPresentation& candidate);

struct CoverResult {
  IdealPresentation cover;
  std::optional<CellPoint> point;
  std::vector<BiPoly> generators;
  int colength_gap = 0;
  bool gorenstein = true;
  bool certified_minimal = false;

  nlohmann::json to_json() const;
};

struct CoverStrategy {
  enum class Kind { ExhaustiveP, RandomQ };
  Kind kind = Kind::RandomQ;
  std::uint64_t samples = 10000;
  int bound = 5;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000000;
  /// Tried before the sampled or enumerated points.
  std::vector<CellPoint> extra_points;
  /// Stop after this many covers.
  std::size_t max_results = 1;
};

/// Gorenstein points of the cell of E whose ideal is contained in target.
/// Throws DomainError unless E is lex-segment, Gorenstein admissible and of
/// colength at least that of target; BudgetError when an exhaustive search
/// exceeds the budget.
std::vector<CoverResult> cover_search(const IdealPresentation& target,
                                      const Staircase& e,
                                      const CoverStrategy& strategy);

/// Every Gorenstein ideal J of V(E) over F_p contained in target, found by
/// solving the linear conditions f_i in target for each basis element.
/// Stops after max_results.
std::vector<CoverResult> stratum_covers(const StandardBasis& target,
                                        const Staircase& e, std::uint64_t budget,
                                        std::size_t max_results = 1);

struct GclOptions {
  /// Exhaustive over F_p (exact) or sampling over the field (upper bound).
  bool exhaustive = false;
  int max_colength = 0;  // 0: colength(target) + 4
  std::uint64_t budget = 1000000;
  std::uint64_t samples = 10000;
  int bound = 5;
  std::uint64_t seed = 0;
  std::vector<CellPoint> extra_points;
};

struct GclResult {
  int colength = 0;
  std::optional<int> gap;
  /// "exact" when every smaller colength was ruled out, else "upper-bound".
  std::string kind;
  /// Gaps known to have no cover.
  int ruled_out_below = 0;
  std::optional<CoverResult> witness;

  nlohmann::json to_json() const;
};

GclResult gcl_bound(const IdealPresentation& target, const GclOptions& options);

}  // namespace hilburch
