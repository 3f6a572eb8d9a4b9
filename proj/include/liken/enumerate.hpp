#pragma once

// In-order enumeration of a liken from its generator stream.
//
// The frontier is a min-heap of candidates (base, k) whose value is
// value(base) + a_k with k >= max index of base. Popping (base, k) emits the
// vector base + e_k and pushes two successors: (base + e_k, k) and
// (base, k + 1). Every exponent vector is produced exactly once, and
// candidates of equal value are merged into one Element whose reps hold all
// of them. Generator a_{k+1} enters the frontier when a_k is emitted, so no
// generator is skipped.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liken/error.hpp"
#include "liken/exactnum.hpp"
#include "liken/exponent_vec.hpp"
#include "liken/generators.hpp"
#include "liken/spec.hpp"

namespace liken {

struct Element {
  std::size_t index = 0;
  Value value;
  std::vector<ExponentVec> reps;  // sorted, non-empty

  bool unique() const noexcept { return reps.size() == 1; }
  /// The single representation; throws NonUniqueError otherwise.
  const ExponentVec& rep() const;
};

class NonUniqueError : public Error {
 public:
  NonUniqueError(const std::string& message, std::vector<ExponentVec> reps);
  const std::vector<ExponentVec>& reps() const noexcept { return reps_; }

 private:
  std::vector<ExponentVec> reps_;
};

struct Limit {
  enum class Type { Count, ValueBound };

  /// First n elements x_0 .. x_{n-1}.
  static Limit count(std::size_t n) { return Limit{Type::Count, n, Value()}; }
  /// Every element with value <= bound.
  static Limit value_bound(Value bound) { return Limit{Type::ValueBound, 0, std::move(bound)}; }

  Type type;
  std::size_t n;
  Value bound;
};

/// Immutable initial segment x_0 < x_1 < ... < x_N of a liken, complete below x_N.
class Prefix {
 public:
  /// Validates index numbering, strict increase, x_0 = 0 and kinds.
  /// `generators` must contain every generator <= x_N in increasing order;
  /// `generators_exhausted` says the list is the whole generator sequence.
  Prefix(LikenSpec spec, std::vector<Element> elements, std::vector<Value> generators,
         bool generators_exhausted);

  const LikenSpec& spec() const noexcept { return spec_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& operator[](std::size_t n) const { return elements_.at(n); }
  const Element& back() const { return elements_.back(); }
  ValueKind value_kind() const noexcept { return spec_.value_kind(); }

  /// Generators known to the enumeration, increasing; includes all <= x_N.
  const std::vector<Value>& generators() const noexcept { return generators_; }
  bool generators_exhausted() const noexcept { return exhausted_; }
  /// True when every generator <= v is in generators().
  bool generators_cover(const Value& v) const;
  /// Number of generators <= v among generators(); exact when generators_cover(v).
  std::size_t generators_le(const Value& v) const;
  /// Generator indices that occur in a representation or are <= x_N.
  std::size_t generators_seen() const;

  bool has_unique_reps() const;
  /// Index of the element with exactly this value.
  std::optional<std::size_t> find(const Value& v) const;

 private:
  LikenSpec spec_;
  std::vector<Element> elements_;
  std::vector<Value> generators_;
  bool exhausted_;
};

/// Stateful single-consumer stream over a liken's elements in increasing order.
class Enumerator {
 public:
  /// `generator_limit` > 0 restricts the liken to its first generator_limit
  /// generators (the sub-liken they generate).
  explicit Enumerator(const LikenSpec& spec, std::size_t generator_limit = 0);

  Element next();
  /// Value of the element next() will return.
  const Value& peek_value() const;
  GeneratorCache& generators() noexcept { return cache_; }

 private:
  struct Node {
    Value value;
    Value base_value;
    ExponentVec base;
    std::uint32_t gen;
  };
  struct NodeGreater {
    bool operator()(const Node& a, const Node& b) const { return b.value < a.value; }
  };

  void push(Node node);
  Node pop();
  const Value* generator(std::size_t k);

  GeneratorCache cache_;
  std::size_t generator_limit_;
  std::vector<Node> heap_;
  std::size_t emitted_ = 0;
  ValueKind kind_;
};

Prefix enumerate(const LikenSpec& spec, const Limit& limit);

/// Sum of m_k * a_k. Throws UnknownGeneratorIndex when m uses an index the
/// generator list does not have.
Value omega(const LikenSpec& spec, const ExponentVec& m);
Value omega(const std::vector<Value>& generators, ValueKind kind, const ExponentVec& m);

/// Unique representation of v. Throws IndexOutOfRange when v > x_N,
/// NotAnElement when v is not in the prefix and NonUniqueError when v has
/// several representations.
ExponentVec omega_inv(const Prefix& prefix, const Value& v);

/// Indices n >= 1 whose element is not a sum of two nonzero prefix elements.
/// Computed by pair scan and cross-checked against the representation sets
/// (InternalConsistency on disagreement).
std::vector<std::size_t> irreducibles(const Prefix& prefix);

/// Least element greater than x_n of the sub-liken generated by x_1..x_n,
/// found with a fresh enumeration restricted to the generators <= x_n.
/// The result lies in (x_n, x_n + a_1]. Element::index is its position in
/// that sub-liken. Throws IndexOutOfRange unless 1 <= n < prefix.size().
Element subliken_z(const Prefix& prefix, std::size_t n);

/// z_1 .. z_last in one pass (result[i] is z_{i+1}). Uses that every element
/// of the sub-liken above x_n and minimal is x_j + a_i with j <= n and
/// a_i <= x_n, and keeps one monotone pointer per generator.
std::vector<Element> z_scan(const Prefix& prefix, std::size_t last);

/// Gap x_{k+1} - x_k kept as the exact pair of endpoints.
struct Gap {
  Value lower;
  Value upper;
  /// Exact difference; Rational prefixes only (KindMismatch otherwise).
  Value difference() const;
};

std::vector<Gap> gaps(const Prefix& prefix);
/// Exact comparison of two gaps: (b - a) vs (d - c) via b + c vs d + a.
std::strong_ordering compare_gaps(const Gap& p, const Gap& q);

/// Multiplicative model: returns (n + 1, k) with x_n = ln(k).
/// Throws KindMismatch for Rational prefixes.
std::pair<std::size_t, mpz_class> to_multiplicative(const Prefix& prefix, std::size_t n);

}  // namespace liken
