#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chow/double_point.hpp"

namespace chow {

struct IntRange {
  long lo = 0;
  long hi = 0;
  long size() const { return hi >= lo ? hi - lo + 1 : 0; }
};

enum class SearchPreset {
  CaseAExclusion,  // "thm5": case (a) cannot occur for hyperelliptic C, q ≥ 1
  CaseBSolution,   // "thm6": case (b) forces ρ = 2, l = 1, D = 24, q = 1, g = 4
};

std::string_view preset_name(SearchPreset p);
std::optional<SearchPreset> parse_preset(std::string_view name);

/// Variable boxes and switches for the integer case analyses.
struct SearchSpec {
  SearchPreset preset = SearchPreset::CaseAExclusion;
  IntRange q{1, 50};
  IntRange x{1, 10000};
  IntRange l{1, 100};
  /// Admissible ρ. For hyperelliptic C over q ≥ 1 this is {1, 2}.
  std::vector<long> rho_values{1, 2};
  /// Very-ampleness floor on x = H(G)³: x ≥ 7 at q = 1, x ≥ 3 at q ≥ 2.
  bool floor_q1 = true;
  bool floor_general = true;
  /// D = H(E)⁴ > 0 for very ample H(E).
  bool require_positive_degree = true;
  unsigned workers = 1;

  static SearchSpec thm5();
  static SearchSpec thm6();
  /// Floor on x for the given q, if any.
  std::optional<long> x_floor(long q) const;
};

/// One surviving tuple; names in a fixed order per preset.
struct SearchRecord {
  std::vector<std::pair<std::string, long>> values;

  long at(const std::string& name) const;
  std::string to_string() const;
  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
  friend auto operator<=>(const SearchRecord&, const SearchRecord&) = default;
};

struct SearchResult {
  SearchPreset preset;
  std::vector<SearchRecord> witnesses;  // sorted
  long tuples_checked = 0;
  /// Beyond this q the bound exceeds every achievable D(D-20), so every
  /// larger q is empty without enumeration.
  std::optional<long> q_cutoff;
  std::vector<std::string> notes;

  bool empty() const { return witnesses.empty(); }
};

/// Enumerates (q, ρ, x) with D = 17ρ - 2x and keeps tuples satisfying
/// D ≥ 1, D(D-20) ≥ 200(q-1) + 37ρ and the floor on x.
SearchResult case_a_search(const SearchSpec& spec);

/// Enumerates (l, q) with ρ = 2l, D from the case (b) invariants and the
/// bound D(D-20) ≥ 168(q-1) + 21ρ; g from 2g-2 = 3(2q-2+ρ).
SearchResult case_b_solve(const SearchSpec& spec);

SearchResult run_search(const SearchSpec& spec);

/// D(D-20) against the case (b) right-hand side at (q, ρ).
struct Feasibility {
  long lhs;
  long rhs;
  bool feasible;
};
Feasibility case_b_feasibility(long q, long rho, long degree);

}  // namespace chow
