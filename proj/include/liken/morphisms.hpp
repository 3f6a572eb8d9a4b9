#pragma once

// Isomorphism tests between likens: homothety of generator sequences and
// the order check of the algebraic isomorphism on two prefixes.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liken/enumerate.hpp"

namespace liken {

struct HomothetyResult {
  enum class Outcome { Isomorphic, NotIsomorphic, Undecided };

  Outcome outcome = Outcome::Undecided;
  /// a_k = lambda * b_k. Set whenever lambda is an exact rational.
  std::optional<mpq_class> lambda;
  /// Human-readable lambda, e.g. "1/2" or "ln(3)/ln(2)".
  std::string lambda_text;
  /// Generator indices compared.
  std::size_t checked = 0;
  /// Per-generator verification records for Isomorphic.
  std::vector<std::string> certificate;
  /// Generator indices exhibiting the refutation (one index or a pair i, j).
  std::vector<std::size_t> witness;
  std::string detail;
  /// Precision reached by interval refinement (0 when exact).
  unsigned precision_bits = 0;
  /// At least one side has finitely many generators.
  bool finite_dimensional = false;
};

std::string_view outcome_name(HomothetyResult::Outcome outcome);

/// Tests a_k = lambda * b_k for k <= k_max. Throws EmptySpec when either
/// spec has no generator.
HomothetyResult homothety_test(const LikenSpec& a, const LikenSpec& b, std::size_t k_max,
                               unsigned precision_bits = kDefaultPrecisionCeiling);

struct OrderIsoResult {
  bool consistent = true;
  /// Last index compared (ConsistentUpTo(upto)).
  std::size_t upto = 0;
  std::optional<std::size_t> mismatch;
  ExponentVec rep_a;
  ExponentVec rep_b;
};

/// Compares the representations of x_n and y_n index by index.
/// Throws LengthMismatch and NonUniqueError.
OrderIsoResult order_iso_prefix_test(const Prefix& a, const Prefix& b);

/// Psi(y_n): the source element's representation evaluated on the target's
/// generators. Throws UnknownGeneratorIndex, IndexOutOfRange, NonUniqueError.
Value psi_map(const Prefix& source, const LikenSpec& target, std::size_t n);

/// Largest b with g = b^s and h = b^t, returned as (b, s, t); nullopt when g
/// and h are not powers of a common integer.
std::optional<std::tuple<mpz_class, unsigned long, unsigned long>> common_base(mpz_class g, mpz_class h);

nlohmann::json homothety_to_json(const HomothetyResult& r);
nlohmann::json order_iso_to_json(const OrderIsoResult& r);

}  // namespace liken
