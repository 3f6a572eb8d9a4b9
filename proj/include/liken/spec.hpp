#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liken/exactnum.hpp"
#include "liken/exponent_vec.hpp"
#include "liken/generators.hpp"

namespace liken {

enum class FamilyKind { NStar, ModClass, Numerical, CustomRational, CustomLogInt };

std::string_view family_name(FamilyKind kind);

/// A generator dropped during minimalization, with its decomposition over
/// the minimal generators (1-based indices into NumericalInfo::minimal).
struct Redundancy {
  std::uint64_t generator = 0;
  ExponentVec decomposition;
};

struct NumericalInfo {
  std::vector<std::uint64_t> input;
  std::vector<std::uint64_t> minimal;
  std::uint64_t gcd = 0;
  bool cofinite = false;
  std::vector<Redundancy> removed;
};

/// Immutable description of a liken's generator sequence. Streams are
/// single-consumer; every call to make_stream() starts a fresh one.
class LikenSpec {
 public:
  using StreamFactory = std::function<std::unique_ptr<GeneratorStream>()>;

  struct Parts {
    FamilyKind family = FamilyKind::CustomRational;
    std::string name;
    ValueKind value_kind = ValueKind::Rational;
    StreamFactory factory;
    std::optional<std::vector<Value>> finite_generators;
    std::uint64_t modulus = 0;
    std::optional<NumericalInfo> numerical;
  };

  explicit LikenSpec(Parts parts);

  FamilyKind family() const noexcept { return parts_->family; }
  const std::string& name() const noexcept { return parts_->name; }
  ValueKind value_kind() const noexcept { return parts_->value_kind; }
  std::unique_ptr<GeneratorStream> make_stream() const { return parts_->factory(); }

  /// True when the whole generator list is known up front.
  bool is_finite() const noexcept { return parts_->finite_generators.has_value(); }
  /// Throws InvalidArgument for unbounded families.
  const std::vector<Value>& finite_generators() const;
  /// p of the ModClass family, 0 otherwise.
  std::uint64_t modulus() const noexcept { return parts_->modulus; }
  const std::optional<NumericalInfo>& numerical() const noexcept { return parts_->numerical; }
  /// Custom streams built from a callable cannot be written to a config file.
  bool serializable() const noexcept;

 private:
  std::shared_ptr<const Parts> parts_;
};

}  // namespace liken
