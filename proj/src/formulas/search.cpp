#include "chow/search.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "chow/cases.hpp"
#include "chow/errors.hpp"
#include "chow/genus.hpp"

namespace chow {

namespace {

constexpr long kMaxTuples = 500'000'000;

void validate_range(const IntRange& r, const char* name, long min_lo) {
  if (r.hi < r.lo) {
    throw SearchSpecError(std::string("empty or inverted range for ") + name);
  }
  if (r.lo < min_lo) {
    throw SearchSpecError(std::string("range for ") + name + " starts below " +
                          std::to_string(min_lo));
  }
  if (r.size() > kMaxTuples || r.size() <= 0) {
    throw SearchSpecError(std::string("range for ") + name + " is unbounded");
  }
}

long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) {
    throw InconsistencyError("expected an integer, got " + r.get_str());
  }
  return r.get_num().get_si();
}

/// Splits [lo, hi] into contiguous chunks, runs `body` on each (possibly
/// concurrently) and concatenates in chunk order.
template <typename Body>
std::pair<std::vector<SearchRecord>, long> partitioned(const IntRange& r, unsigned workers,
                                                       Body body) {
  const long n = r.size();
  const long parts = std::clamp<long>(workers, 1, n);
  std::vector<std::future<std::pair<std::vector<SearchRecord>, long>>> jobs;
  long start = r.lo;
  for (long i = 0; i < parts; ++i) {
    const long len = n / parts + (i < n % parts ? 1 : 0);
    const IntRange chunk{start, start + len - 1};
    start += len;
    jobs.push_back(std::async(parts > 1 ? std::launch::async : std::launch::deferred,
                              [chunk, &body] { return body(chunk); }));
  }
  std::vector<SearchRecord> all;
  long checked = 0;
  for (auto& j : jobs) {
    auto [recs, count] = j.get();
    all.insert(all.end(), recs.begin(), recs.end());
    checked += count;
  }
  std::sort(all.begin(), all.end());
  return {std::move(all), checked};
}

}  // namespace

std::string_view preset_name(SearchPreset p) {
  return p == SearchPreset::CaseAExclusion ? "thm5" : "thm6";
}

std::optional<SearchPreset> parse_preset(std::string_view name) {
  if (name == "thm5") return SearchPreset::CaseAExclusion;
  if (name == "thm6") return SearchPreset::CaseBSolution;
  return std::nullopt;
}

SearchSpec SearchSpec::thm5() { return SearchSpec{}; }

SearchSpec SearchSpec::thm6() {
  SearchSpec s;
  s.preset = SearchPreset::CaseBSolution;
  return s;
}

std::optional<long> SearchSpec::x_floor(long q) const {
  if (q == 1 && floor_q1) return 7;
  if (q >= 2 && floor_general) return 3;
  return std::nullopt;
}

long SearchRecord::at(const std::string& name) const {
  for (const auto& [n, v] : values) {
    if (n == name) return v;
  }
  throw Error("search record has no field '" + name + "'");
}

std::string SearchRecord::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << values[i].first << '=' << values[i].second;
  }
  os << ')';
  return os.str();
}

SearchResult case_a_search(const SearchSpec& spec) {
  validate_range(spec.q, "q", 1);
  validate_range(spec.x, "x", 1);
  if (spec.rho_values.empty()) throw SearchSpecError("no admissible rho values");
  for (long rho : spec.rho_values) {
    if (rho < 1) throw SearchSpecError("rho must be >= 1");
  }
  if (spec.q.size() * spec.x.size() * static_cast<long>(spec.rho_values.size()) > kMaxTuples) {
    throw SearchSpecError("search box too large");
  }

  const BoundResult bound = derive_case_bound(FibrationCase::A);
  // D as a function of (ρ, x): μ = ρ - x substituted into 15x + 17μ.
  const ParamPoly degree_poly = segre_degree_case_a(ParamPoly::symbol("x"), case_a_mu_from_adjunction());
  const long d_rho = to_long(degree_poly.linear_coefficient("rho"));
  const long d_x = to_long(degree_poly.linear_coefficient("x"));
  const long d_0 = to_long(degree_poly.constant_term());

  auto body = [&](const IntRange& qs) {
    std::vector<SearchRecord> found;
    long checked = 0;
    for (long q = qs.lo; q <= qs.hi; ++q) {
      const std::optional<long> floor = spec.x_floor(q);
      for (long rho : spec.rho_values) {
        const long rhs = bound_rhs(bound, q, rho);
        for (long x = spec.x.lo; x <= spec.x.hi; ++x) {
          ++checked;
          const long d = d_rho * rho + d_x * x + d_0;
          if (spec.require_positive_degree && d < 1) continue;
          if (d * (d - 20) < rhs) continue;
          if (floor && x < *floor) continue;
          found.push_back(SearchRecord{{{"q", q}, {"rho", rho}, {"x", x}, {"D", d}}});
        }
      }
    }
    return std::make_pair(std::move(found), checked);
  };

  SearchResult result{SearchPreset::CaseAExclusion, {}, 0, std::nullopt, {}};
  std::tie(result.witnesses, result.tuples_checked) = partitioned(spec.q, spec.workers, body);

  // D = d_rho·ρ + d_x·x does not depend on q, and the right-hand side grows
  // with q, so one bound on D(D-20) over the box settles every larger q.
  long best = std::numeric_limits<long>::min();
  for (long rho : spec.rho_values) {
    for (long x = spec.x.lo; x <= spec.x.hi; ++x) {
      const long d = d_rho * rho + d_x * x + d_0;
      if (spec.require_positive_degree && d < 1) continue;
      best = std::max(best, d * (d - 20));
    }
  }
  const long min_rho = *std::min_element(spec.rho_values.begin(), spec.rho_values.end());
  if (bound.a > 0) {
    long q = 1;
    while (bound_rhs(bound, q, min_rho) <= best) ++q;
    result.q_cutoff = q;
    std::ostringstream os;
    os << "max D(D-20) over the x box is " << best << "; for q >= " << q
       << " the bound exceeds it, so emptiness extends to all larger q";
    result.notes.push_back(os.str());
  }
  if (spec.require_positive_degree && d_x < 0) {
    const long max_rho = *std::max_element(spec.rho_values.begin(), spec.rho_values.end());
    const long x_max = (d_rho * max_rho + d_0 - 1) / (-d_x);
    std::ostringstream os;
    os << "D >= 1 forces x <= " << x_max << ", so the x box covers every admissible x";
    if (x_max <= spec.x.hi) result.notes.push_back(os.str());
  }
  if (spec.floor_general) {
    result.notes.push_back(
        "assumption: x >= 3 for q >= 2 (x <= 2 is taken as contradicting very ampleness of H(G))");
  }
  if (spec.floor_q1) result.notes.push_back("x >= 7 for q = 1 (very ample rank-3 G on an elliptic curve)");
  return result;
}

Feasibility case_b_feasibility(long q, long rho, long degree) {
  static const BoundResult bound = derive_case_bound(FibrationCase::B);
  const long lhs = degree * (degree - 20);
  const long rhs = bound_rhs(bound, q, rho);
  return {lhs, rhs, lhs >= rhs};
}

SearchResult case_b_solve(const SearchSpec& spec) {
  validate_range(spec.q, "q", 1);
  validate_range(spec.l, "l", 1);
  if (spec.q.size() * spec.l.size() > kMaxTuples) throw SearchSpecError("search box too large");

  const CaseBRhoForm form = case_b_invariants_in_rho(true);
  const ParamPoly& rho_of_l = *form.rho;

  SearchResult result{SearchPreset::CaseBSolution, {}, 0, std::nullopt, {}};
  auto allowed = [&](long rho) {
    return std::find(spec.rho_values.begin(), spec.rho_values.end(), rho) != spec.rho_values.end();
  };

  auto body = [&](const IntRange& ls) {
    std::vector<SearchRecord> found;
    long checked = 0;
    for (long l = ls.lo; l <= ls.hi; ++l) {
      const ParamPoly::Bindings at_l{{"l", Rational(l)}};
      const long rho = to_long(*rho_of_l.evaluate(at_l));
      if (!allowed(rho)) {
        checked += spec.q.size();
        continue;
      }
      const ParamPoly::Bindings at{{"l", Rational(l)}, {"rho", Rational(rho)}};
      const long degree = to_long(*form.degree.evaluate(at));
      for (long q = spec.q.lo; q <= spec.q.hi; ++q) {
        ++checked;
        if (spec.require_positive_degree && degree < 1) continue;
        if (!case_b_feasibility(q, rho, degree).feasible) continue;
        const ParamPoly g = genus_of_zero_curve({3, q, rho, true});
        found.push_back(SearchRecord{
            {{"rho", rho}, {"l", l}, {"D", degree}, {"q", q}, {"g", to_long(*g.constant_value())}}});
      }
    }
    return std::make_pair(std::move(found), checked);
  };
  std::tie(result.witnesses, result.tuples_checked) = partitioned(spec.l, spec.workers, body);

  result.notes.push_back("rho = 2l from x + v = 3l and rho = x + v - l, so rho is even");
  if (!allowed(2)) result.notes.push_back("rho = 2 excluded: no even admissible rho remains");
  for (const auto& w : result.witnesses) {
    const long q_next = w.at("q") + 1;
    const Feasibility f = case_b_feasibility(q_next, w.at("rho"), w.at("D"));
    if (!f.feasible) {
      std::ostringstream os;
      os << "q = " << q_next << " infeasible: D(D-20) = " << f.lhs << " < " << f.rhs;
      result.notes.push_back(os.str());
    }
  }
  return result;
}

SearchResult run_search(const SearchSpec& spec) {
  return spec.preset == SearchPreset::CaseAExclusion ? case_a_search(spec) : case_b_solve(spec);
}

}  // namespace chow
