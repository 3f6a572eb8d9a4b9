#include "liken/families.hpp"

#include <algorithm>
#include <numeric>

#include "liken/error.hpp"
#include "liken/sieve.hpp"

namespace liken {

namespace {

class PrimeLogStream final : public GeneratorStream {
 public:
  std::optional<Value> next() override { return Value::log_int(mpz_class(sieve_.prime(next_++))); }

 private:
  IncrementalSieve sieve_;
  std::size_t next_ = 0;
};

// Members of {1 + p*t} that admit no factorization u*v with u, v > 1 in the class.
class ModClassStream final : public GeneratorStream {
 public:
  explicit ModClassStream(std::uint64_t p) : p_(p) {}

  std::optional<Value> next() override {
    while (true) {
      const std::uint64_t m = 1 + p_ * ++t_;
      if (irreducible(m)) return Value::log_int(mpz_class(static_cast<unsigned long>(m)));
    }
  }

 private:
  bool irreducible(std::uint64_t m) const {
    for (std::uint64_t d = 1 + p_; d <= m / d; d += p_) {
      if (m % d == 0 && (m / d) % p_ == 1 % p_) return false;
    }
    return true;
  }

  std::uint64_t p_;
  std::uint64_t t_ = 0;
};

LikenSpec finite_spec(FamilyKind family, std::string name, std::vector<Value> values,
                      std::optional<NumericalInfo> numerical = std::nullopt) {
  LikenSpec::Parts parts;
  parts.family = family;
  parts.name = std::move(name);
  parts.value_kind = values.front().kind();
  parts.factory = [values] { return std::make_unique<ListStream>(values); };
  parts.finite_generators = std::move(values);
  parts.numerical = std::move(numerical);
  return LikenSpec(std::move(parts));
}

std::string join_values(const std::vector<Value>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += to_string(v);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorCode::Parse, "expected a natural number, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "number out of range: " + s);
  }
}

mpz_class json_integer(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return mpz_class(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw Error(ErrorCode::NonPositive, "negative integer in spec config");
    return mpz_class(static_cast<unsigned long>(v));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw Error(ErrorCode::Parse, "expected an integer, got '" + s + "'");
    }
    return mpz_class(s);
  }
  throw Error(ErrorCode::Parse, "expected an integer in spec config");
}

nlohmann::json integer_json(const mpz_class& z) {
  if (mpz_fits_ulong_p(z.get_mpz_t())) return z.get_ui();
  return z.get_str();
}

const nlohmann::json& require(const nlohmann::json& config, const char* key) {
  if (!config.contains(key)) throw Error(ErrorCode::Parse, std::string("spec config needs '") + key + "'");
  return config.at(key);
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::NStar: return "nstar";
    case FamilyKind::ModClass: return "modclass";
    case FamilyKind::Numerical: return "numerical";
    case FamilyKind::CustomRational: return "custom_rational";
    case FamilyKind::CustomLogInt: return "custom_logint";
  }
  return "unknown";
}

LikenSpec::LikenSpec(Parts parts) : parts_(std::make_shared<const Parts>(std::move(parts))) {
  if (!parts_->factory) throw Error(ErrorCode::EmptySpec, "spec has no generator source");
  if (parts_->finite_generators && parts_->finite_generators->empty()) {
    throw Error(ErrorCode::EmptySpec, "spec has no generators");
  }
}

const std::vector<Value>& LikenSpec::finite_generators() const {
  if (!parts_->finite_generators) {
    throw Error(ErrorCode::InvalidArgument, name() + " has an unbounded generator sequence");
  }
  return *parts_->finite_generators;
}

bool LikenSpec::serializable() const noexcept {
  switch (family()) {
    case FamilyKind::NStar:
    case FamilyKind::ModClass:
    case FamilyKind::Numerical: return true;
    default: return is_finite();
  }
}

LikenSpec family_nstar() {
  LikenSpec::Parts parts;
  parts.family = FamilyKind::NStar;
  parts.name = "nstar";
  parts.value_kind = ValueKind::LogInt;
  parts.factory = [] { return std::make_unique<PrimeLogStream>(); };
  return LikenSpec(std::move(parts));
}

LikenSpec family_modclass(std::uint64_t p) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "modclass needs p >= 1");
  LikenSpec::Parts parts;
  parts.family = FamilyKind::ModClass;
  parts.name = "modclass(" + std::to_string(p) + ")";
  parts.value_kind = ValueKind::LogInt;
  parts.factory = [p] { return std::make_unique<ModClassStream>(p); };
  parts.modulus = p;
  return LikenSpec(std::move(parts));
}

NumericalInfo minimalize_numerical(const std::vector<std::uint64_t>& gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyList, "numerical semigroup needs at least one generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] == 0) throw Error(ErrorCode::NonPositive, "generator " + std::to_string(i + 1) + " is zero", i + 1);
  }
  NumericalInfo info;
  info.input = gens;
  std::vector<std::uint64_t> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  info.gcd = std::accumulate(sorted.begin(), sorted.end(), std::uint64_t{0},
                             [](std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); });
  info.cofinite = info.gcd == 1;

  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::uint64_t g = sorted[i];
    if (i > 0 && sorted[i - 1] == g) {
      const auto pos = static_cast<std::uint32_t>(
          std::find(info.minimal.begin(), info.minimal.end(), g) - info.minimal.begin() + 1);
      info.removed.push_back({g, ExponentVec::unit(pos)});
      continue;
    }
    // Coin-change reachability over the minimal generators found so far.
    std::vector<std::uint32_t> via(g + 1, 0);  // 1-based minimal index of the last summand
    std::vector<bool> reach(g + 1, false);
    reach[0] = true;
    for (std::uint64_t v = 1; v <= g; ++v) {
      for (std::size_t h = 0; h < info.minimal.size() && info.minimal[h] <= v; ++h) {
        if (reach[v - info.minimal[h]]) {
          reach[v] = true;
          via[v] = static_cast<std::uint32_t>(h + 1);
          break;
        }
      }
    }
    if (!reach[g]) {
      info.minimal.push_back(g);
      continue;
    }
    ExponentVec decomposition;
    for (std::uint64_t v = g; v > 0; v -= info.minimal[via[v] - 1]) decomposition.add(via[v]);
    info.removed.push_back({g, std::move(decomposition)});
  }
  return info;
}

LikenSpec family_numerical(const std::vector<std::uint64_t>& gens) {
  NumericalInfo info = minimalize_numerical(gens);
  std::vector<Value> values;
  std::string name = "numerical<";
  for (const auto g : info.minimal) {
    values.push_back(Value::rational(mpq_class(mpz_class(static_cast<unsigned long>(g)))));
    if (name.back() != '<') name += ',';
    name += std::to_string(g);
  }
  name += '>';
  auto spec = finite_spec(FamilyKind::Numerical, std::move(name), std::move(values), std::move(info));
  return spec;
}

LikenSpec family_custom(const std::vector<Value>& values, std::string name) {
  if (values.empty()) throw Error(ErrorCode::EmptyList, "custom spec needs at least one generator");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t pos = i + 1;
    if (values[i].is_zero()) {
      throw Error(ErrorCode::NonPositive, "generator " + std::to_string(pos) + " is not positive", pos);
    }
    if (i == 0) continue;
    if (values[i].kind() != values[0].kind()) {
      throw Error(ErrorCode::MixedKinds, "generator " + std::to_string(pos) + " has a different kind", pos);
    }
    if (!(values[i - 1] < values[i])) {
      throw Error(ErrorCode::NotIncreasing, "generator " + std::to_string(pos) + " does not increase", pos);
    }
  }
  const bool log_kind = values[0].kind() == ValueKind::LogInt;
  if (name.empty()) name = std::string(log_kind ? "custom_logint<" : "custom_rational<") + join_values(values) + ">";
  return finite_spec(log_kind ? FamilyKind::CustomLogInt : FamilyKind::CustomRational, std::move(name), values);
}

LikenSpec family_custom_stream(std::string name, ValueKind kind, LikenSpec::StreamFactory factory) {
  LikenSpec::Parts parts;
  parts.family = kind == ValueKind::LogInt ? FamilyKind::CustomLogInt : FamilyKind::CustomRational;
  parts.name = std::move(name);
  parts.value_kind = kind;
  parts.factory = std::move(factory);
  return LikenSpec(std::move(parts));
}

LikenSpec spec_from_config(const nlohmann::json& config) {
  if (!config.is_object()) throw Error(ErrorCode::Parse, "spec config must be an object");
  const std::string kind = require(config, "kind").get<std::string>();
  if (kind == "nstar") return family_nstar();
  if (kind == "modclass") return family_modclass(require(config, "p").get<std::uint64_t>());
  if (kind == "numerical") {
    std::vector<std::uint64_t> gens;
    for (const auto& g : require(config, "gens")) gens.push_back(json_integer(g).get_ui());
    return family_numerical(gens);
  }
  const std::string name = config.value("name", std::string{});
  if (kind == "custom_logint") {
    std::vector<Value> values;
    for (const auto& k : require(config, "ints")) {
      const mpz_class z = json_integer(k);
      if (z < 1) throw Error(ErrorCode::NonPositive, "ln(0) is undefined", values.size() + 1);
      values.push_back(Value::log_int(z));
    }
    return family_custom(values, name);
  }
  if (kind == "custom_rational") {
    std::vector<Value> values;
    for (const auto& v : require(config, "values")) {
      values.push_back(v.is_string() ? parse_value(v.get<std::string>())
                                     : Value::rational(mpq_class(json_integer(v))));
    }
    return family_custom(values, name);
  }
  throw Error(ErrorCode::Parse, "unknown spec kind '" + kind + "'");
}

nlohmann::json spec_to_config(const LikenSpec& spec) {
  switch (spec.family()) {
    case FamilyKind::NStar: return {{"kind", "nstar"}};
    case FamilyKind::ModClass: return {{"kind", "modclass"}, {"p", spec.modulus()}};
    case FamilyKind::Numerical: return {{"kind", "numerical"}, {"gens", spec.numerical()->input}};
    case FamilyKind::CustomLogInt:
    case FamilyKind::CustomRational: break;
  }
  if (!spec.is_finite()) throw Error(ErrorCode::InvalidArgument, spec.name() + " is a stream and has no config form");
  nlohmann::json out{{"name", spec.name()}};
  nlohmann::json list = nlohmann::json::array();
  if (spec.family() == FamilyKind::CustomLogInt) {
    out["kind"] = "custom_logint";
    for (const auto& v : spec.finite_generators()) list.push_back(integer_json(v.log_argument()));
    out["ints"] = std::move(list);
  } else {
    out["kind"] = "custom_rational";
    for (const auto& v : spec.finite_generators()) list.push_back(to_string(v));
    out["values"] = std::move(list);
  }
  return out;
}

LikenSpec spec_from_inline(const std::string& text) {
  const auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::replace(kind.begin(), kind.end(), '-', '_');
  const std::string args = colon == std::string::npos ? std::string{} : text.substr(colon + 1);
  if (kind == "nstar") return family_nstar();
  if (kind == "modclass") return family_modclass(parse_u64(args));
  std::vector<std::string> items = args.empty() ? std::vector<std::string>{} : split(args, ',');
  if (kind == "numerical") {
    std::vector<std::uint64_t> gens;
    for (const auto& s : items) gens.push_back(parse_u64(s));
    return family_numerical(gens);
  }
  if (kind == "custom_logint") {
    std::vector<Value> values;
    for (const auto& s : items) values.push_back(Value::log_int(mpz_class(static_cast<unsigned long>(parse_u64(s)))));
    return family_custom(values);
  }
  if (kind == "custom_rational") {
    std::vector<Value> values;
    for (const auto& s : items) values.push_back(parse_value(s));
    return family_custom(values);
  }
  throw Error(ErrorCode::Parse, "unknown family '" + text + "'");
}

}  // namespace liken
