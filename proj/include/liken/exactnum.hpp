#pragma once

// Exact values of liken elements.
//
// A Value is either a non-negative rational p/q or the natural logarithm of a
// positive integer k, written ln(k). Values of the same kind are compared and
// added exactly: ln(a) + ln(b) = ln(a*b). Values of different kinds are
// compared through nested dyadic interval enclosures whose precision doubles
// until the two intervals separate or a ceiling is reached.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace liken {

enum class ValueKind : std::uint8_t { Rational, LogInt };

std::string_view kind_name(ValueKind kind);

class Value {
 public:
  /// Rational zero.
  Value();

  /// Throws InvalidArgument for negative input; the fraction is canonicalized.
  static Value rational(mpq_class q);
  static Value rational(long num, long den = 1);
  /// ln(k); throws InvalidArgument unless k >= 1.
  static Value log_int(mpz_class k);
  static Value log_int(unsigned long k) { return log_int(mpz_class(k)); }
  static Value zero(ValueKind kind);

  ValueKind kind() const noexcept { return static_cast<ValueKind>(rep_.index()); }
  bool is_zero() const;

  /// Throws KindMismatch when called on the other kind.
  const mpq_class& as_rational() const;
  /// The integer k of ln(k). Throws KindMismatch for rationals.
  const mpz_class& log_argument() const;

  /// Structural equality: same kind and exactly the same number.
  friend bool operator==(const Value& a, const Value& b);
  /// Exact order within one kind. Throws KindMismatch across kinds;
  /// use value_compare for mixed comparisons.
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  std::variant<mpq_class, mpz_class> rep_;
};

enum class Ordering { Less, Equal, Greater, Undecided };

struct Comparison {
  Ordering ordering = Ordering::Undecided;
  /// Precision reached by interval refinement; 0 when the comparison was exact.
  unsigned precision_bits = 0;
};

inline constexpr unsigned kDefaultPrecisionCeiling = 4096;

/// Total comparison. Same-kind comparisons are exact; mixed-kind comparisons
/// refine interval enclosures up to `ceiling_bits` and report Undecided if
/// they never separate.
Comparison value_compare(const Value& u, const Value& v,
                         unsigned ceiling_bits = kDefaultPrecisionCeiling);

/// Throws KindMismatch when the kinds differ.
Value value_add(const Value& u, const Value& v);
/// n-fold sum; ln(k) scales to ln(k^n).
Value value_scale(std::uint64_t n, const Value& v);
/// u - v when the difference is a value of the same kind (for LogInt this
/// needs v's integer to divide u's); nullopt otherwise or when u < v.
std::optional<Value> value_sub(const Value& u, const Value& v);

/// Enclosure [lo, hi] of a real number with dyadic rational endpoints.
struct Interval {
  mpq_class lo;
  mpq_class hi;
  unsigned precision_bits = 0;

  bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  mpq_class width() const { return hi - lo; }
};

/// Interval containing v whose width is at most 2^-precision_bits * max(1, v).
/// Rationals and ln(1) give degenerate intervals. Enclosures are nested:
/// approx(v, b) contains approx(v, b') whenever b' > b.
Interval approx(const Value& v, unsigned precision_bits);

/// Product of two intervals with non-negative endpoints.
Interval interval_mul(const Interval& a, const Interval& b);

/// "p/q" or "ln(k)"; parse_value accepts both plus a bare integer "p".
std::string to_string(const Value& v);
Value parse_value(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Value& v);

/// Display approximation only; never used for decisions.
double to_double(const Value& v);

}  // namespace liken
