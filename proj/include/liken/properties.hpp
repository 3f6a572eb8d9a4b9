#pragma once

// Checkers for the structural properties of a liken prefix. Each returns a
// PropertyReport whose Fail witnesses can be re-checked by the defining
// inequality.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "liken/enumerate.hpp"

namespace liken {

enum class Verdict { Pass, Fail, Inapplicable };

/// How far a verdict reaches: only the checked prefix, the whole liken
/// (certified), or a trend read off a finite series.
enum class Scope { Prefix, Certified, Trend };

std::string_view verdict_name(Verdict v);
std::string_view scope_name(Scope s);

struct Witness {
  std::vector<std::size_t> indices;
  std::vector<Value> values;
  std::vector<ExponentVec> reps;
  std::string note;
};

struct PropertyReport {
  std::string property;
  std::size_t prefix_len = 0;
  Verdict verdict = Verdict::Pass;
  Scope scope = Scope::Prefix;
  std::string reason;
  std::vector<Witness> witnesses;
  /// Numeric series such as the Legendre ratios, (n, exact ratio).
  std::vector<std::pair<std::size_t, mpq_class>> series;
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json report_to_json(const PropertyReport& report);
/// Two-column "n ratio" text for plotting.
void write_series_dat(std::ostream& os, const PropertyReport& report);

/// Most reports keep at most this many witnesses; details.violations counts all.
inline constexpr std::size_t kMaxWitnesses = 32;

PropertyReport check_convexity(const Prefix& prefix);
PropertyReport check_disjoint_support(const Prefix& prefix);
PropertyReport check_parity(const Prefix& prefix);
PropertyReport check_or(const Prefix& prefix);
PropertyReport check_bertrand(const Prefix& prefix);
/// Empty checkpoints means powers of ten below N followed by N.
PropertyReport check_legendre(const Prefix& prefix, std::vector<std::size_t> checkpoints = {});
PropertyReport check_separation(const Prefix& prefix);
PropertyReport check_uniqueness(const LikenSpec& spec, const Prefix& prefix);
PropertyReport dimension(const Prefix& prefix);

/// Indices of the irreducible elements of the prefix.
std::vector<std::size_t> generator_positions(const Prefix& prefix);

struct PositionComparison {
  bool agree = true;
  /// Smallest index contained in exactly one of the two sets.
  std::optional<std::size_t> first_disagreement;
};

/// Compares positions against a target set restricted to indices < limit.
PositionComparison compare_positions(const std::vector<std::size_t>& found,
                                     const std::vector<std::size_t>& target, std::size_t limit);
PropertyReport positions_report(const Prefix& prefix, const std::vector<std::size_t>* target = nullptr);

PropertyReport check_gap_lemmas(const Prefix& prefix, std::size_t trials, std::uint64_t seed = 1);

/// Rank over Q of the prime-exponent matrix of integer generators, with an
/// integer kernel vector split into two exponent vectors of equal value when
/// the rank is deficient.
struct FactorRank {
  std::size_t rank = 0;
  std::size_t columns = 0;
  std::optional<std::pair<ExponentVec, ExponentVec>> collision;
};
FactorRank factor_matrix_rank(const std::vector<mpz_class>& generators);

}  // namespace liken
