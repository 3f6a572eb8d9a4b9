#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liken {

/// Finitely supported multiplicity vector over generator indices (1-based).
/// Entries are sorted by index and every stored multiplicity is positive;
/// the empty vector is the zero element.
class ExponentVec {
 public:
  using Entry = std::pair<std::uint32_t, std::uint64_t>;

  ExponentVec() = default;

  static ExponentVec unit(std::uint32_t k);
  /// Sorts, merges repeated indices and drops zero multiplicities.
  /// Throws InvalidArgument on index 0.
  static ExponentVec from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  bool is_unit() const noexcept { return entries_.size() == 1 && entries_[0].second == 1; }
  /// Largest index in the support, 0 for the zero vector.
  std::uint32_t max_index() const noexcept { return entries_.empty() ? 0 : entries_.back().first; }
  std::uint64_t multiplicity(std::uint32_t k) const;
  std::uint64_t total_degree() const;
  std::vector<std::uint32_t> support() const;
  bool contains(std::uint32_t k) const { return multiplicity(k) != 0; }
  bool shares_support(const ExponentVec& other) const;

  ExponentVec& add(std::uint32_t k, std::uint64_t m = 1);
  ExponentVec& operator+=(const ExponentVec& other);
  friend ExponentVec operator+(ExponentVec a, const ExponentVec& b) { return a += b; }

  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;
  friend auto operator<=>(const ExponentVec&, const ExponentVec&) = default;

 private:
  std::vector<Entry> entries_;
};

/// "k1^m1*k2^m2", sorted by index; the zero vector is written "0".
std::string to_string(const ExponentVec& v);
ExponentVec parse_exponent_vec(std::string_view text);

/// Representation lists are ';'-joined, e.g. "1^1*3^1;2^2".
std::string reps_to_string(const std::vector<ExponentVec>& reps);
std::vector<ExponentVec> parse_reps(std::string_view text);

}  // namespace liken
