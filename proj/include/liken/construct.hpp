#pragma once

// Ockham's-razor construction of a liken prefix and the empirical check of
// the main theorem (convexity + OR => the pattern of N*).

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liken/enumerate.hpp"
#include "liken/morphisms.hpp"
#include "liken/properties.hpp"
#include "liken/sieve.hpp"

namespace liken {

struct ConstructPolicy {
  enum class Kind { Midpoint, ConvexityWindow, UserValues };

  static ConstructPolicy midpoint() { return {Kind::Midpoint, {}, true}; }
  /// backtrack = false is the plain window rule: fail with
  /// EmptyConvexityWindow as soon as a window is empty.
  static ConstructPolicy convexity_window(bool backtrack = true) { return {Kind::ConvexityWindow, {}, backtrack}; }
  static ConstructPolicy user_values(std::vector<Value> values) { return {Kind::UserValues, std::move(values), true}; }

  Kind kind;
  std::vector<Value> values;
  bool backtrack;
};

std::string policy_name(const ConstructPolicy& policy);

struct ConstructionStep {
  enum class Action { TookZ, InsertedGenerator };

  /// Step n produces x_{n+1}. Step 0 is the normalization x_1 = a_1 = 1.
  std::size_t n = 0;
  Action action = Action::TookZ;
  Value value;
  ExponentVec rep;
  /// z_n and its representation (absent at step 0).
  std::optional<Value> z;
  ExponentVec z_rep;
  /// Index of the inserted generator.
  std::uint32_t generator = 0;
  /// Open interval the inserted value was chosen from.
  std::optional<std::pair<Value, Value>> window;
};

struct ConstructionTrace {
  std::string policy;
  std::vector<ConstructionStep> steps;
  Prefix prefix;
  /// Convexity-window search statistics.
  std::size_t backtracks = 0;
  std::size_t learned_constraints = 0;
};

/// Builds x_1 .. x_steps. Throws EmptyConvexityWindow(n), ValueCollision(n),
/// PolicyExhausted(n), InvalidUserValue(n).
///
/// The convexity-window policy keeps every linear constraint it has learned
/// on the generator values. An insertion takes the midpoint of the window
/// ((x_n + z_n)/2, min(z_n, 2x_n - x_{n-1})) cut down by the learned
/// constraints on the new generator. When that interval is empty, its
/// binding lower and upper bounds are combined into a constraint on earlier
/// generators, the construction rewinds to where the latest of them was
/// inserted and continues from there. A convexity failure at a TookZ step
/// is learned and rewound the same way.
ConstructionTrace or_construct(const ConstructPolicy& policy, std::size_t steps);

/// Replays a trace through independent z_n computations and the structural
/// rules (TookZ iff supports disjoint, insertions strictly inside (x_n, z_n),
/// x_{n+2} = z_n after an insertion). Returns the problems found.
std::vector<std::string> verify_trace(const ConstructionTrace& trace);

nlohmann::json step_to_json(const ConstructionStep& step);

struct MainTheoremReport {
  enum class Verdict { TheoremConsistent, HypothesisFails, CounterexampleFlag };

  Verdict verdict = Verdict::HypothesisFails;
  PropertyReport convexity;
  PropertyReport ockham;
  std::optional<OrderIsoResult> iso;
  /// Index where the representation differs from the exponent vector of n + 1.
  std::optional<std::size_t> pattern_mismatch;
  /// "convexity", "or" or "convexity,or" for HypothesisFails.
  std::string failed;
  /// Outcome of the independent re-check for a counterexample flag.
  std::string reverification;
};

std::string_view main_verdict_name(MainTheoremReport::Verdict v);

/// Exponent vector of the prime factorization of m over prime indices
/// (2 -> 1, 3 -> 2, 5 -> 3, ...).
ExponentVec prime_exponents(std::uint64_t m, IncrementalSieve& sieve);

/// Throws NonUniqueError for prefixes without unique representations.
MainTheoremReport verify_main_theorem(const Prefix& prefix);
nlohmann::json main_report_to_json(const MainTheoremReport& report);

}  // namespace liken
