#pragma once

// Built-in liken families and user-defined generator lists.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "liken/spec.hpp"

namespace liken {

/// The multiplicative integers: generators ln(p) for p = 2, 3, 5, ...
LikenSpec family_nstar();

/// {m : m = 1 mod p}; generators are the class members that do not factor
/// inside the class. p = 1 gives the same generators as family_nstar().
LikenSpec family_modclass(std::uint64_t p);

/// Numerical semigroup <gens> as a Rational liken. The generator list is
/// minimalized eagerly; gcd, cofiniteness and dropped generators are kept in
/// LikenSpec::numerical(). Throws EmptyList, NonPositive.
LikenSpec family_numerical(const std::vector<std::uint64_t>& gens);

/// User list, strictly increasing, positive and of one kind.
/// Throws NotIncreasing(pos), NonPositive(pos), MixedKinds(pos), EmptyList;
/// positions are 1-based.
LikenSpec family_custom(const std::vector<Value>& values, std::string name = {});

/// User-supplied unbounded stream. Invariants are checked as values arrive.
LikenSpec family_custom_stream(std::string name, ValueKind kind, LikenSpec::StreamFactory factory);

/// Minimal generating system of a numerical semigroup, with a decomposition
/// for each dropped generator.
NumericalInfo minimalize_numerical(const std::vector<std::uint64_t>& gens);

/// Spec config: {"kind":"nstar"}, {"kind":"modclass","p":2},
/// {"kind":"numerical","gens":[6,9,20]}, {"kind":"custom_logint","ints":[2,257]},
/// {"kind":"custom_rational","values":["3/2","5/2"]}.
LikenSpec spec_from_config(const nlohmann::json& config);
nlohmann::json spec_to_config(const LikenSpec& spec);

/// Inline form used on the command line: "nstar", "modclass:2",
/// "numerical:3,4,5", "custom-logint:2,257", "custom-rational:3/2,5/2".
LikenSpec spec_from_inline(const std::string& text);

}  // namespace liken
