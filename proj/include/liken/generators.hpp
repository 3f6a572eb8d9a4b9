#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "liken/exactnum.hpp"

namespace liken {

/// Single-consumer source of generator values a_1 < a_2 < ... .
class GeneratorStream {
 public:
  virtual ~GeneratorStream() = default;
  /// Next generator, or nullopt once a finite sequence is exhausted.
  virtual std::optional<Value> next() = 0;
};

/// Finite list used as its own stream.
class ListStream final : public GeneratorStream {
 public:
  explicit ListStream(std::vector<Value> values) : values_(std::move(values)) {}
  std::optional<Value> next() override;

 private:
  std::vector<Value> values_;
  std::size_t pos_ = 0;
};

/// Materializes a stream on demand and checks the sequence invariants
/// (positive, strictly increasing, one kind) as values arrive.
class GeneratorCache {
 public:
  explicit GeneratorCache(std::unique_ptr<GeneratorStream> stream);

  /// k-th generator (1-based), or nullptr past the end of a finite stream.
  const Value* at(std::size_t k);
  /// Tail-bound oracle: after the call every generator <= bound is in produced().
  void ensure_up_to(const Value& bound);
  /// Number of generators <= bound.
  std::size_t count_le(const Value& bound);

  const std::vector<Value>& produced() const noexcept { return produced_; }
  bool exhausted() const noexcept { return exhausted_; }

 private:
  bool pull();

  std::unique_ptr<GeneratorStream> stream_;
  std::vector<Value> produced_;
  bool exhausted_ = false;
};

}  // namespace liken
