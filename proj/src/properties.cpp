#include "liken/properties.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>

#include "liken/prefix_io.hpp"
#include "liken/sieve.hpp"

namespace liken {

using nlohmann::json;

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::string_view scope_name(Scope s) {
  switch (s) {
    case Scope::Prefix: return "prefix";
    case Scope::Certified: return "certified";
    case Scope::Trend: return "trend";
  }
  return "?";
}

json report_to_json(const PropertyReport& r) {
  json witnesses = json::array();
  for (const Witness& w : r.witnesses) {
    json values = json::array();
    for (const Value& v : w.values) values.push_back(to_string(v));
    json reps = json::array();
    for (const ExponentVec& e : w.reps) reps.push_back(to_string(e));
    witnesses.push_back({{"indices", w.indices}, {"values", values}, {"reps", reps}, {"note", w.note}});
  }
  json series = json::array();
  for (const auto& [n, ratio] : r.series) series.push_back({n, ratio.get_str()});
  json out{{"property", r.property},
           {"prefix_len", r.prefix_len},
           {"verdict", std::string(verdict_name(r.verdict))},
           {"scope", std::string(scope_name(r.scope))},
           {"witnesses", witnesses},
           {"details", r.details}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (!r.series.empty()) out["series"] = series;
  return out;
}

void write_series_dat(std::ostream& os, const PropertyReport& report) {
  os << "# n ratio\n";
  for (const auto& [n, ratio] : report.series) {
    os << n << ' ' << approx_decimal(Value::rational(ratio)) << '\n';
  }
}

namespace {

PropertyReport start(const char* name, const Prefix& prefix) {
  PropertyReport r;
  r.property = name;
  r.prefix_len = prefix.size();
  return r;
}

void add_witness(PropertyReport& r, Witness w) {
  r.verdict = Verdict::Fail;
  std::size_t count = r.details.value("violations", std::size_t{0}) + 1;
  r.details["violations"] = count;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(w));
}

// Index of the first element with several representations.
std::optional<std::size_t> first_non_unique(const Prefix& prefix) {
  for (const Element& e : prefix.elements()) {
    if (!e.unique()) return e.index;
  }
  return std::nullopt;
}

bool require_unique(PropertyReport& r, const Prefix& prefix) {
  if (auto n = first_non_unique(prefix)) {
    r.verdict = Verdict::Inapplicable;
    r.reason = "supports are undefined without uniqueness: " + to_string(prefix[*n].value) + " = " +
               reps_to_string(prefix[*n].reps);
    return false;
  }
  return true;
}

}  // namespace

PropertyReport check_convexity(const Prefix& prefix) {
  PropertyReport r = start("convexity", prefix);
  if (prefix.size() < 3) {
    r.verdict = Verdict::Inapplicable;
    r.reason = "needs at least three elements";
    return r;
  }
  for (std::size_t k = 0; k + 2 < prefix.size(); ++k) {
    const Value& a = prefix[k].value;
    const Value& b = prefix[k + 1].value;
    const Value& c = prefix[k + 2].value;
    if (!(value_add(a, c) < value_scale(2, b))) {
      add_witness(r, Witness{{k, k + 1, k + 2}, {a, b, c}, {}, "2*x_{k+1} <= x_k + x_{k+2}"});
    }
  }
  r.details["checked"] = prefix.size() - 2;
  return r;
}

PropertyReport check_disjoint_support(const Prefix& prefix) {
  PropertyReport r = start("disjoint-support", prefix);
  if (!require_unique(r, prefix)) return r;
  for (std::size_t n = 1; n + 1 < prefix.size(); ++n) {
    const ExponentVec& u = prefix[n].rep();
    const ExponentVec& v = prefix[n + 1].rep();
    if (u.shares_support(v)) {
      add_witness(r, Witness{{n, n + 1}, {prefix[n].value, prefix[n + 1].value}, {u, v}, "supports intersect"});
    }
  }
  return r;
}

PropertyReport check_parity(const Prefix& prefix) {
  PropertyReport r = start("parity", prefix);
  if (!require_unique(r, prefix)) return r;
  for (std::size_t n = 1; n + 1 < prefix.size(); ++n) {
    const ExponentVec& u = prefix[n].rep();
    const ExponentVec& v = prefix[n + 1].rep();
    if (u.contains(1) && v.contains(1)) {
      add_witness(r, Witness{{n, n + 1}, {prefix[n].value, prefix[n + 1].value}, {u, v}, "a_1 divides both"});
    }
  }
  return r;
}

PropertyReport check_or(const Prefix& prefix) {
  PropertyReport r = start("or", prefix);
  if (!require_unique(r, prefix)) return r;
  if (prefix.size() < 2) {
    r.verdict = Verdict::Inapplicable;
    r.reason = "needs at least two elements";
    return r;
  }
  const std::vector<Element> zs = z_scan(prefix, prefix.size() - 2);
  std::size_t disjoint = 0;
  for (std::size_t n = 1; n + 1 < prefix.size(); ++n) {
    const Element& z = zs[n - 1];
    const ExponentVec& xn = prefix[n].rep();
    const ExponentVec& zn = z.rep();
    if (xn.shares_support(zn)) continue;
    ++disjoint;
    if (!(prefix[n + 1].value == z.value)) {
      add_witness(r, Witness{{n, n + 1},
                             {prefix[n].value, z.value, prefix[n + 1].value},
                             {xn, zn, prefix[n + 1].rep()},
                             "supp(x_n) and supp(z_n) disjoint but x_{n+1} != z_n; values are x_n, z_n, x_{n+1}"});
    }
  }
  r.details["checked"] = prefix.size() - 2;
  r.details["disjoint_cases"] = disjoint;
  return r;
}

PropertyReport check_bertrand(const Prefix& prefix) {
  PropertyReport r = start("bertrand", prefix);
  const auto& gens = prefix.generators();
  if (gens.empty()) {
    r.verdict = Verdict::Inapplicable;
    r.reason = "no generator known";
    return r;
  }
  const Value& a1 = gens.front();
  std::size_t checked = 0;
  std::vector<std::size_t> unchecked;
  for (std::size_t n = 1; n < prefix.size(); ++n) {
    const Value& lo = prefix[n].value;
    const Value hi = value_add(lo, a1);
    if (!prefix.generators_cover(hi)) {
      unchecked.push_back(n);
      continue;
    }
    ++checked;
    auto it = std::lower_bound(gens.begin(), gens.end(), lo);
    if (it == gens.end() || hi < *it) {
      add_witness(r, Witness{{n}, {lo, hi}, {}, "no generator in [x_n, x_n + a_1]"});
    }
  }
  r.details["checked"] = checked;
  r.details["unchecked"] = unchecked.size();
  if (!unchecked.empty()) r.details["first_unchecked"] = unchecked.front();
  return r;
}

PropertyReport check_legendre(const Prefix& prefix, std::vector<std::size_t> checkpoints) {
  PropertyReport r = start("legendre", prefix);
  r.scope = Scope::Trend;
  r.reason = "a limit cannot be certified from a prefix; verdict reflects a non-increasing ratio series";
  const std::size_t last = prefix.size() - 1;
  if (last == 0) {
    r.verdict = Verdict::Inapplicable;
    r.reason = "needs at least two elements";
    return r;
  }
  if (checkpoints.empty()) {
    for (std::size_t n = 10; n < last; n *= 10) checkpoints.push_back(n);
    checkpoints.push_back(last);
  }
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  for (std::size_t n : checkpoints) {
    if (n == 0 || n > last) {
      throw Error(ErrorCode::IndexOutOfRange, "Legendre checkpoint must lie in 1.." + std::to_string(last), n);
    }
    const std::size_t count = prefix.generators_le(prefix[n].value);
    mpq_class ratio(static_cast<unsigned long>(count), static_cast<unsigned long>(n));
    ratio.canonicalize();
    if (!r.series.empty() && r.series.back().second < ratio) {
      add_witness(r, Witness{{r.series.back().first, n}, {}, {}, "ratio increased"});
    }
    r.series.emplace_back(n, ratio);
  }
  return r;
}

PropertyReport check_separation(const Prefix& prefix) {
  PropertyReport r = start("separation", prefix);
  r.reason = "finiteness is asymptotic; the count covers this prefix only";
  const auto irr = irreducibles(prefix);
  json pairs = json::array();
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < irr.size(); ++i) {
    if (irr[i + 1] != irr[i] + 1) continue;
    ++count;
    pairs.push_back({{"indices", {irr[i], irr[i + 1]}},
                     {"values", {to_string(prefix[irr[i]].value), to_string(prefix[irr[i + 1]].value)}}});
  }
  r.details["count"] = count;
  r.details["pairs"] = pairs;
  return r;
}

FactorRank factor_matrix_rank(const std::vector<mpz_class>& generators) {
  FactorRank out;
  out.columns = generators.size();
  std::vector<mpz_class> primes;
  std::vector<std::vector<std::pair<mpz_class, unsigned>>> facts;
  for (const mpz_class& g : generators) {
    facts.push_back(factorize(g));
    for (const auto& [p, e] : facts.back()) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const std::size_t rows = primes.size();
  const std::size_t cols = generators.size();
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [p, e] : facts[j]) {
      const auto i = std::lower_bound(primes.begin(), primes.end(), p) - primes.begin();
      m[i][j] = e;
    }
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  std::optional<std::size_t> free_col;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = row;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) {
      if (!free_col) free_col = c;
      continue;
    }
    std::swap(m[piv], m[row]);
    const mpq_class lead = m[row][c];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  out.rank = row;
  if (free_col) {
    // kernel vector: free column set to 1, pivot variables solved from the RREF
    std::vector<mpq_class> kernel(cols);
    kernel[*free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) kernel[pivot_col[i]] = -m[i][*free_col];
    mpz_class den = 1;
    for (const auto& x : kernel) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    ExponentVec u, v;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class coeff = kernel[j].get_num() * (den / kernel[j].get_den());
      if (coeff > 0) u.add(static_cast<std::uint32_t>(j + 1), coeff.get_ui());
      if (coeff < 0) v.add(static_cast<std::uint32_t>(j + 1), mpz_class(-coeff).get_ui());
    }
    out.collision = std::make_pair(u, v);
  }
  return out;
}

namespace {

struct Certificate {
  enum class Kind { None, Unique, NonUnique } kind = Kind::None;
  std::string basis;
  std::optional<std::pair<ExponentVec, ExponentVec>> collision;
  json details = json::object();
};

Certificate uniqueness_certificate(const LikenSpec& spec) {
  Certificate c;
  switch (spec.family()) {
    case FamilyKind::NStar:
      c.kind = Certificate::Kind::Unique;
      c.basis = "generators are the primes; factorization into primes is unique";
      return c;
    case FamilyKind::ModClass:
      if (spec.modulus() <= 2) {
        c.kind = Certificate::Kind::Unique;
        c.basis = "the class consists of all (p=1) or all odd (p=2) integers; its irreducibles are primes";
      } else {
        c.basis = "no structural certificate for this class; prefix evidence only";
      }
      return c;
    default:
      break;
  }
  if (!spec.is_finite()) {
    c.basis = "unbounded custom stream; prefix evidence only";
    return c;
  }
  const auto& gens = spec.finite_generators();
  if (spec.value_kind() == ValueKind::LogInt) {
    std::vector<mpz_class> ints;
    for (const Value& g : gens) ints.push_back(g.log_argument());
    const FactorRank fr = factor_matrix_rank(ints);
    c.details["rank"] = fr.rank;
    c.details["generators"] = fr.columns;
    if (fr.collision) {
      c.kind = Certificate::Kind::NonUnique;
      c.collision = fr.collision;
      c.basis = "prime-exponent matrix is rank deficient";
    } else {
      c.kind = Certificate::Kind::Unique;
      c.basis = "prime-exponent matrix has full column rank; the logarithms are linearly independent over Q";
    }
    return c;
  }
  if (gens.size() == 1) {
    c.kind = Certificate::Kind::Unique;
    c.basis = "a single generator";
    return c;
  }
  // a_1 = p1/q1, a_2 = p2/q2: (p2*q1) * a_1 = p1*p2 = (p1*q2) * a_2
  const mpq_class& a1 = gens[0].as_rational();
  const mpq_class& a2 = gens[1].as_rational();
  const mpz_class n1 = a2.get_num() * a1.get_den();
  const mpz_class n2 = a1.get_num() * a2.get_den();
  c.kind = Certificate::Kind::NonUnique;
  c.collision = std::make_pair(ExponentVec().add(1, n1.get_ui()), ExponentVec().add(2, n2.get_ui()));
  c.basis = "two rational generators are linearly dependent over Q";
  return c;
}

}  // namespace

PropertyReport check_uniqueness(const LikenSpec& spec, const Prefix& prefix) {
  PropertyReport r = start("uniqueness", prefix);
  for (const Element& e : prefix.elements()) {
    if (!e.unique()) {
      add_witness(r, Witness{{e.index}, {e.value}, e.reps, "several representations"});
    }
  }
  const Certificate cert = uniqueness_certificate(spec);
  r.details["certificate"] = cert.basis;
  for (const auto& [key, val] : cert.details.items()) r.details[key] = val;
  switch (cert.kind) {
    case Certificate::Kind::Unique:
      if (r.verdict == Verdict::Fail) {
        throw Error(ErrorCode::InternalConsistency,
                    "certified-unique liken '" + spec.name() + "' shows a collision in its prefix");
      }
      r.scope = Scope::Certified;
      break;
    case Certificate::Kind::NonUnique: {
      r.scope = Scope::Certified;
      const auto& [u, v] = *cert.collision;
      if (r.verdict != Verdict::Fail) {
        const Value value = omega(spec, u);
        add_witness(r, Witness{{}, {value}, {u, v}, "collision from the generator certificate"});
      }
      break;
    }
    case Certificate::Kind::None:
      break;
  }
  return r;
}

PropertyReport dimension(const Prefix& prefix) {
  PropertyReport r = start("dimension", prefix);
  const LikenSpec& spec = prefix.spec();
  std::size_t dim = 0;
  bool exact = true;
  if (const auto& info = spec.numerical()) {
    dim = info->minimal.size();
  } else if (spec.is_finite()) {
    const Prefix upto = enumerate(spec, Limit::value_bound(spec.finite_generators().back()));
    dim = irreducibles(upto).size();
  } else {
    dim = irreducibles(prefix).size();
    exact = false;
  }
  r.scope = exact ? Scope::Certified : Scope::Prefix;
  r.details["dimension"] = dim;
  r.details["at_least"] = !exact;
  if (!exact) r.reason = "irreducibles found in the prefix; the liken may have more";
  return r;
}

std::vector<std::size_t> generator_positions(const Prefix& prefix) { return irreducibles(prefix); }

PositionComparison compare_positions(const std::vector<std::size_t>& found,
                                     const std::vector<std::size_t>& target, std::size_t limit) {
  std::set<std::size_t> a(found.begin(), found.end());
  std::set<std::size_t> b;
  for (std::size_t n : target) {
    if (n < limit) b.insert(n);
  }
  std::vector<std::size_t> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  PositionComparison out;
  if (!diff.empty()) {
    out.agree = false;
    out.first_disagreement = diff.front();
  }
  return out;
}

PropertyReport positions_report(const Prefix& prefix, const std::vector<std::size_t>* target) {
  PropertyReport r = start("positions", prefix);
  const auto found = generator_positions(prefix);
  r.details["positions"] = found;
  if (target) {
    const auto cmp = compare_positions(found, *target, prefix.size());
    r.details["agree"] = cmp.agree;
    if (!cmp.agree) {
      const std::size_t n = *cmp.first_disagreement;
      add_witness(r, Witness{{n}, {prefix[n].value}, {}, "positions disagree with the target set"});
    }
  }
  return r;
}

PropertyReport check_gap_lemmas(const Prefix& prefix, std::size_t trials, std::uint64_t seed) {
  PropertyReport r = start("gap-lemmas", prefix);
  if (check_convexity(prefix).verdict != Verdict::Pass) {
    r.verdict = Verdict::Inapplicable;
    r.reason = "the gap lemmas assume convexity, which fails on this prefix";
    return r;
  }
  const std::size_t last = prefix.size() - 1;
  if (last < 3) {
    r.verdict = Verdict::Inapplicable;
    r.reason = "needs indices 1 <= k < p < q <= N with N >= 3";
    return r;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(1, last);
  auto x = [&](std::size_t i) -> const Value& { return prefix[i].value; };
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t k = pick(rng), p = pick(rng), q = pick(rng);
    while (p == k) p = pick(rng);
    while (q == k || q == p) q = pick(rng);
    std::size_t s[3] = {k, p, q};
    std::sort(s, s + 3);
    k = s[0], p = s[1], q = s[2];
    // x_{q-1} - x_{p-1} > x_q - x_p
    if (!(value_add(x(q), x(p - 1)) < value_add(x(q - 1), x(p)))) {
      add_witness(r, Witness{{k, p, q}, {x(p - 1), x(p), x(q - 1), x(q)}, {}, "x_{q-1} - x_{p-1} <= x_q - x_p"});
    }
    // multiplicative indices, hat x_i = exp(x_{i-1}): hat x_p * hat x_{q-k} > hat x_{p-k} * hat x_q
    if (!(value_add(x(p - k - 1), x(q - 1)) < value_add(x(p - 1), x(q - k - 1)))) {
      add_witness(r, Witness{{k, p, q},
                             {x(p - 1), x(q - k - 1), x(p - k - 1), x(q - 1)},
                             {},
                             "hat x_p / hat x_q <= hat x_{p-k} / hat x_{q-k}"});
    }
  }
  r.details["trials"] = trials;
  r.details["seed"] = seed;
  return r;
}

}  // namespace liken
