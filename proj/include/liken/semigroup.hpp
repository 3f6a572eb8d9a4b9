#pragma once

// Numerical semigroup invariants: membership table, Apery sets, Frobenius
// number, gaps and genus.

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "liken/spec.hpp"

namespace liken {

class NumericalSemigroup {
 public:
  /// Minimalizes `gens`; throws EmptyList, NonPositive.
  explicit NumericalSemigroup(const std::vector<std::uint64_t>& gens);

  const std::vector<std::uint64_t>& minimal_gens() const noexcept { return info_.minimal; }
  std::uint64_t gcd() const noexcept { return info_.gcd; }
  bool cofinite() const noexcept { return info_.cofinite; }
  const NumericalInfo& info() const noexcept { return info_; }

  /// Membership for any n; extends the table as needed.
  bool contains(std::uint64_t n) const;
  /// Current table length; every n below it is decided.
  std::uint64_t table_bound() const noexcept { return member_.size(); }

 private:
  void extend_to(std::uint64_t n) const;

  NumericalInfo info_;
  mutable std::vector<bool> member_;
};

/// Least element of S in each residue class mod m, indexed by residue.
/// Throws NotAMember, NotCofinite.
std::vector<std::uint64_t> apery_set(const NumericalSemigroup& s, std::uint64_t m);

/// Largest natural outside S. Throws NotCofinite, NoGaps.
std::uint64_t frobenius(const NumericalSemigroup& s);

struct GenusAndGaps {
  std::uint64_t genus = 0;
  std::vector<std::uint64_t> gaps;
};
/// Throws NotCofinite.
GenusAndGaps genus_and_gaps(const NumericalSemigroup& s);

/// {minimal_gens, gcd, frobenius, genus, gaps, apery: {m: [...]}} for the given moduli.
nlohmann::json semigroup_summary(const NumericalSemigroup& s, const std::vector<std::uint64_t>& apery_moduli);

}  // namespace liken
