#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "liken/construct.hpp"
#include "liken/error.hpp"
#include "liken/families.hpp"
#include "liken/morphisms.hpp"
#include "liken/properties.hpp"
#include "liken/semigroup.hpp"
#include "oracles.hpp"

using namespace liken;

namespace {

// Runtime ceilings in seconds.
constexpr double kAc1Seconds = 30;
constexpr double kAc3Seconds = 60;
constexpr double kAc4Seconds = 120;
constexpr double kAc9Seconds = 120;

constexpr std::size_t kAc3Specs = 120;
constexpr std::size_t kAc10Trials = 10000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::size_t sieve_count(std::size_t n) {
  std::vector<bool> composite(n + 1, false);
  std::size_t count = 0;
  for (std::size_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    ++count;
    for (std::size_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return count;
}

// Exponent vectors of 1..n over prime indices from a smallest-prime-factor table.
std::vector<ExponentVec> factor_table(std::size_t n) {
  std::vector<std::size_t> spf(n + 1, 0);
  std::vector<std::uint32_t> index(n + 1, 0);
  std::uint32_t primes = 0;
  for (std::size_t i = 2; i <= n; ++i) {
    if (spf[i]) continue;
    index[i] = ++primes;
    for (std::size_t j = i; j <= n; j += i) {
      if (!spf[j]) spf[j] = i;
    }
  }
  std::vector<ExponentVec> out(n + 1);
  for (std::size_t m = 2; m <= n; ++m) out[m] = ExponentVec(out[m / spf[m]]).add(index[spf[m]]);
  return out;
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Prefix p = enumerate(family_nstar(), Limit::count(100001));
  for (std::size_t n = 0; n < p.size() && o.pass; ++n) {
    o.require(p[n].value.kind() == ValueKind::LogInt && p[n].value.log_argument() == n + 1,
              "x_" + std::to_string(n) + " = " + to_string(p[n].value));
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(p.size() == 100001, "prefix length");
  o.require(s <= kAc1Seconds, "runtime " + secs(s));
  if (o.pass) o.detail = "x_n = ln(n+1) for n <= 100000 in " + secs(s);
  return o;
}

Outcome ac2() {
  Outcome o;
  const Prefix p = enumerate(family_nstar(), Limit::count(11));
  const std::vector<std::string> reps = {"1^1", "2^1", "1^2", "3^1", "1^1*2^1", "4^1", "1^3", "2^2", "1^1*3^1", "5^1"};
  for (std::size_t n = 1; n <= 10; ++n) {
    o.require(reps_to_string(p[n].reps) == reps[n - 1], "rep of x_" + std::to_string(n) + " is " + reps_to_string(p[n].reps));
  }
  o.require(reps_to_string(subliken_z(p, 1).reps) == "1^2", "z(x_1)");
  o.require(reps_to_string(subliken_z(p, 8).reps) == "1^1*3^1", "z(x_8)");
  o.require(reps_to_string(subliken_z(p, 9).reps) == "1^2*2^1", "z(x_9)");
  if (o.pass) o.detail = "reps of x_1..x_10 and z(x_1), z(x_8), z(x_9) match";
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  std::size_t elements = 0;
  for (std::size_t t = 0; t < kAc3Specs && o.pass; ++t) {
    const auto s = oracle::random_small_spec(rng, t % 2 == 0);
    const std::uint64_t w = oracle::default_bound_weight(s);
    const auto grid = oracle::grid_oracle(s, w);
    const Prefix p = enumerate(s.spec(), Limit::value_bound(oracle::oracle_bound(s, w)));
    o.require(p.size() == grid.size(), "spec " + std::to_string(t) + ": length differs");
    for (std::size_t n = 0; n < grid.size() && o.pass; ++n) {
      o.require(p[n].value == grid[n].value && p[n].reps == grid[n].reps,
                "spec " + p.spec().name() + " differs at n=" + std::to_string(n));
    }
    elements += grid.size();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(s <= kAc3Seconds, "runtime " + secs(s));
  if (o.pass) o.detail = std::to_string(kAc3Specs) + " specs, " + std::to_string(elements) + " elements in " + secs(s);
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Prefix p = enumerate(family_nstar(), Limit::count(10000));
  for (auto r : {check_convexity(p), check_disjoint_support(p), check_parity(p), check_or(p), check_bertrand(p)}) {
    o.require(r.verdict == Verdict::Pass, r.property + " is " + std::string(verdict_name(r.verdict)));
  }
  const auto bert = check_bertrand(p);
  o.require(bert.details["checked"].get<std::size_t>() > 0, "bertrand checked nothing");
  const auto sep = check_separation(p);
  o.require(sep.details["count"] == 1, "separation count " + sep.details["count"].dump());
  o.require(sep.details["pairs"][0]["values"] == nlohmann::json({"ln(2)", "ln(3)"}), "separation pair");
  const auto leg = check_legendre(p);
  mpq_class expected(static_cast<unsigned long>(sieve_count(10000)), 9999ul);
  expected.canonicalize();
  o.require(!leg.series.empty() && leg.series.back().first == 9999 && leg.series.back().second == expected,
            "Legendre ratio at 9999");
  o.require(expected == mpq_class(1229, 9999), "sieve oracle");
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(s <= kAc4Seconds, "runtime " + secs(s));
  if (o.pass) o.detail = "C, DS, parity, OR, Bertrand pass; separation {(2,3)}; ratio 1229/9999; " + secs(s);
  return o;
}

Outcome ac5() {
  Outcome o;
  const Prefix p = enumerate(family_modclass(2), Limit::count(101));
  o.require(check_convexity(p).verdict == Verdict::Pass, "convexity");
  const auto r = check_or(p);
  o.require(r.verdict == Verdict::Fail && !r.witnesses.empty(), "OR does not fail");
  if (!o.pass) return o;
  const auto& w = r.witnesses.front();
  o.require(w.indices.front() == 2, "first witness n=" + std::to_string(w.indices.front()));
  o.require(subliken_z(p, 2).value == Value::log_int(9), "z_2");
  o.require(w.values[1] == Value::log_int(9), "witness z_2");
  o.require(p[3].value == Value::log_int(7) && w.values[2] == Value::log_int(7), "x_3");
  if (o.pass) o.detail = "OR fails first at n=2 with z_2 = 9, x_3 = 7";
  return o;
}

Outcome ac6() {
  Outcome o;
  const Prefix num = enumerate(family_numerical({3, 4, 5}), Limit::count(100));
  const auto r = check_uniqueness(num.spec(), num);
  o.require(r.verdict == Verdict::Fail, "<3,4,5> not Fail");
  if (!o.pass) return o;
  const auto& w = r.witnesses.front();
  o.require(w.values.front() == Value::rational(8), "witness value " + to_string(w.values.front()));
  o.require(reps_to_string(w.reps) == "1^1*3^1;2^2", "witness reps " + reps_to_string(w.reps));

  const LikenSpec indep = family_custom({Value::log_int(2), Value::log_int(3), Value::log_int(5)});
  const auto ok = check_uniqueness(indep, enumerate(indep, Limit::count(200)));
  o.require(ok.verdict == Verdict::Pass && ok.scope == Scope::Certified && ok.details["rank"] == 3, "{2,3,5}");

  const LikenSpec dep = family_custom({Value::log_int(2), Value::log_int(3), Value::log_int(6)});
  const auto bad = check_uniqueness(dep, enumerate(dep, Limit::count(200)));
  o.require(bad.verdict == Verdict::Fail && bad.witnesses.front().values.front() == Value::log_int(6), "{2,3,6}");
  const FactorRank fr = factor_matrix_rank({2, 3, 6});
  o.require(fr.rank == 2 && fr.collision.has_value(), "rank of {2,3,6}");
  if (o.pass) o.detail = "8 = 1^1*3^1 = 2^2; {2,3,5} rank 3 certified; {2,3,6} collides at 6";
  return o;
}

Outcome ac7() {
  Outcome o;
  const NumericalSemigroup a({3, 4, 5});
  o.require(frobenius(a) == 2 && genus_and_gaps(a).gaps == std::vector<std::uint64_t>{1, 2}, "<3,4,5>");
  const NumericalSemigroup b({6, 9, 20});
  const auto table = oracle::membership_table({6, 9, 20}, 500);
  std::uint64_t oracle_f = 0, oracle_genus = 0;
  for (std::uint64_t n = 0; n <= 500; ++n) {
    if (!table[n]) {
      oracle_f = n;
      ++oracle_genus;
    }
  }
  o.require(frobenius(b) == 43 && oracle_f == 43, "Frobenius <6,9,20>");
  o.require(genus_and_gaps(b).genus == 22 && oracle_genus == 22, "genus <6,9,20>");

  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::uint64_t> gen(2, 25);
  int done = 0;
  while (done < 20) {
    std::vector<std::uint64_t> gens = {gen(rng), gen(rng), gen(rng)};
    if (std::gcd(std::gcd(gens[0], gens[1]), gens[2]) != 1) continue;
    const NumericalSemigroup s(gens);
    const auto member = oracle::membership_table(gens, 1000);
    std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(1, 40)(rng);
    while (!member[m]) ++m;
    const auto ap = apery_set(s, m);
    std::set<std::uint64_t> classes;
    for (auto x : ap) {
      o.require(member[x] && (x < m || !member[x - m]), "Apery element " + std::to_string(x));
      classes.insert(x % m);
    }
    o.require(ap.size() == m && classes.size() == m, "|Ap(S," + std::to_string(m) + ")|");
    ++done;
  }
  if (o.pass) o.detail = "F<3,4,5> = 2, gaps {1,2}; F<6,9,20> = 43, genus 22; 20 Apery sets of size m";
  return o;
}

Outcome ac8() {
  Outcome o;
  using H = HomothetyResult::Outcome;
  const auto id = homothety_test(family_nstar(), family_nstar(), 20);
  o.require(id.outcome == H::Isomorphic && id.lambda && *id.lambda == 1, "nstar vs nstar");
  const auto sc = homothety_test(family_numerical({3, 4, 5}), family_numerical({6, 8, 10}), 20);
  o.require(sc.outcome == H::Isomorphic && sc.lambda && *sc.lambda == mpq_class(1, 2), "<3,4,5> vs <6,8,10>");
  const auto k2 = homothety_test(family_nstar(), family_modclass(2), 20);
  o.require(k2.outcome == H::NotIsomorphic, "nstar vs modclass(2) homothety");
  const auto iso = order_iso_prefix_test(enumerate(family_nstar(), Limit::count(20)),
                                         enumerate(family_modclass(2), Limit::count(20)));
  o.require(!iso.consistent && iso.mismatch == 3u, "order mismatch index");
  o.require(!iso.rep_a.is_unit() && iso.rep_b.is_unit(), "x_3 composed, y_3 irreducible");
  if (o.pass) o.detail = "Isomorphic(1); Isomorphic(1/2); NotIsomorphic with mismatch at n=3";
  return o;
}

Outcome ac9() {
  Outcome o;
  using V = MainTheoremReport::Verdict;
  const auto t0 = std::chrono::steady_clock::now();
  const auto nstar = verify_main_theorem(enumerate(family_nstar(), Limit::count(10000)));
  o.require(nstar.verdict == V::TheoremConsistent, "nstar: " + std::string(main_verdict_name(nstar.verdict)));
  const auto k2 = verify_main_theorem(enumerate(family_modclass(2), Limit::count(1000)));
  o.require(k2.verdict == V::HypothesisFails && k2.failed == "or", "K2: " + std::string(main_verdict_name(k2.verdict)));

  const ConstructionTrace t = or_construct(ConstructPolicy::convexity_window(), 2000);
  o.require(t.prefix.size() == 2001, "construction length");
  o.require(check_convexity(t.prefix).verdict == Verdict::Pass, "construction fails convexity");
  o.require(check_or(t.prefix).verdict == Verdict::Pass, "construction fails OR");
  const auto factors = factor_table(2001);
  for (std::size_t n = 1; n < t.prefix.size() && o.pass; ++n) {
    o.require(t.prefix[n].rep() == factors[n + 1], "pattern differs at n=" + std::to_string(n));
  }
  const auto main = verify_main_theorem(t.prefix);
  o.require(main.verdict == V::TheoremConsistent, "construction: " + std::string(main_verdict_name(main.verdict)));
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(s <= kAc9Seconds, "runtime " + secs(s));
  if (o.pass) {
    o.detail = "nstar consistent; K2 fails OR; 2000-step construction matches 2..2001 (" +
               std::to_string(t.prefix.generators().size()) + " generators, " + std::to_string(t.backtracks) +
               " backtracks); " + secs(s);
  }
  return o;
}

Outcome ac10() {
  Outcome o;
  const Prefix p = enumerate(family_nstar(), Limit::count(1001));
  const auto r = check_gap_lemmas(p, kAc10Trials, 2024);
  o.require(r.verdict == Verdict::Pass, "nstar gap lemmas: " + std::string(verdict_name(r.verdict)));
  const Prefix gapped = enumerate(family_custom({Value::log_int(2), Value::log_int(3)}), Limit::count(40));
  o.require(check_convexity(gapped).verdict == Verdict::Fail, "control prefix is convex");
  o.require(check_gap_lemmas(gapped, 100).verdict == Verdict::Inapplicable, "non-convex prefix not Inapplicable");
  const Prefix num = enumerate(family_numerical({3, 4, 5}), Limit::count(40));
  o.require(check_gap_lemmas(num, 100).verdict == Verdict::Inapplicable, "<3,4,5> not Inapplicable");
  if (o.pass) o.detail = std::to_string(kAc10Trials) + " samples pass on nstar 0..1000; non-convex prefixes Inapplicable";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::cout << name << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
