#include "liken/prefix_io.hpp"

#include <algorithm>
#include <ostream>

#include "liken/families.hpp"

namespace liken {

using nlohmann::json;

std::string approx_decimal(const Value& v, unsigned digits) {
  const Interval iv = approx(v, 64 + 4 * digits);
  mpq_class mid = (iv.lo + iv.hi) / 2;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpq_class scaled = mid * scale + mpq_class(1, 2);
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string s = rounded.get_str();
  if (digits == 0) return s;
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

namespace {

std::vector<bool> irreducible_flags(const Prefix& prefix) {
  std::vector<bool> flags(prefix.size(), false);
  for (std::size_t n : irreducibles(prefix)) flags[n] = true;
  return flags;
}

template <typename T>
T field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

void write_prefix_csv(std::ostream& os, const Prefix& prefix) {
  const auto flags = irreducible_flags(prefix);
  os << "index,value,approx,reps,irreducible\n";
  for (const Element& e : prefix.elements()) {
    os << e.index << ',' << to_string(e.value) << ',' << approx_decimal(e.value) << ','
       << reps_to_string(e.reps) << ',' << (flags[e.index] ? 1 : 0) << '\n';
  }
}

json prefix_to_json(const Prefix& prefix) {
  const auto flags = irreducible_flags(prefix);
  json elements = json::array();
  for (const Element& e : prefix.elements()) {
    elements.push_back({{"index", e.index},
                        {"value", to_string(e.value)},
                        {"approx", approx_decimal(e.value)},
                        {"reps", reps_to_string(e.reps)},
                        {"irreducible", static_cast<bool>(flags[e.index])}});
  }
  json generators = json::array();
  for (const Value& g : prefix.generators()) generators.push_back(to_string(g));
  return json{{"spec", spec_to_config(prefix.spec())},
              {"value_kind", std::string(kind_name(prefix.value_kind()))},
              {"generators", generators},
              {"generators_exhausted", prefix.generators_exhausted()},
              {"elements", elements}};
}

Prefix prefix_from_json(const json& doc) {
  LikenSpec spec = spec_from_config(field<json>(doc, "spec"));
  std::vector<Value> generators;
  for (const auto& g : field<std::vector<std::string>>(doc, "generators")) generators.push_back(parse_value(g));
  std::vector<Element> elements;
  for (const json& row : field<json>(doc, "elements")) {
    Element e;
    e.index = field<std::size_t>(row, "index");
    e.value = parse_value(field<std::string>(row, "value"));
    e.reps = parse_reps(field<std::string>(row, "reps"));
    std::sort(e.reps.begin(), e.reps.end());
    elements.push_back(std::move(e));
  }
  return Prefix(std::move(spec), std::move(elements), std::move(generators),
                field<bool>(doc, "generators_exhausted"));
}

bool same_prefix(const Prefix& a, const Prefix& b) {
  if (a.size() != b.size() || a.generators_exhausted() != b.generators_exhausted()) return false;
  if (a.generators() != b.generators()) return false;
  if (a.spec().serializable() != b.spec().serializable()) return false;
  if (a.spec().serializable() && spec_to_config(a.spec()) != spec_to_config(b.spec())) return false;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n].index != b[n].index || !(a[n].value == b[n].value) || a[n].reps != b[n].reps) return false;
  }
  return true;
}

}  // namespace liken
