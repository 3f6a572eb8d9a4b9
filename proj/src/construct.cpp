#include "liken/construct.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "liken/families.hpp"

namespace liken {

using nlohmann::json;

std::string policy_name(const ConstructPolicy& policy) {
  switch (policy.kind) {
    case ConstructPolicy::Kind::Midpoint: return "midpoint";
    case ConstructPolicy::Kind::ConvexityWindow:
      return policy.backtrack ? "convexity-window" : "convexity-window-plain";
    case ConstructPolicy::Kind::UserValues: return "user-values";
  }
  return "?";
}

namespace {

// sum of coeff * a_k over generator indices
using LinearForm = std::map<std::uint32_t, mpz_class>;

void add_rep(LinearForm& form, long coeff, const ExponentVec& rep) {
  for (const auto& [k, m] : rep.entries()) {
    form[k] += mpz_class(coeff) * mpz_class(static_cast<unsigned long>(m));
  }
}

void drop_zeros(LinearForm& form) {
  std::erase_if(form, [](const auto& kv) { return kv.second == 0; });
}

mpq_class evaluate(const LinearForm& form, const std::vector<mpq_class>& gens) {
  mpq_class sum = 0;
  for (const auto& [k, c] : form) sum += c * gens[k - 1];
  return sum;
}

// c * a + rest > 0 for the generator being chosen, with a double copy of
// the coefficients for screening
struct Bound {
  Bound(mpz_class coeff, LinearForm form) : c(std::move(coeff)), rest(std::move(form)) {
    c_d = c.get_d();
    for (const auto& [i, v] : rest) rest_d.emplace_back(i, v.get_d());
  }

  mpz_class c;
  LinearForm rest;
  double c_d = 0;
  std::vector<std::pair<std::uint32_t, double>> rest_d;
};

LinearForm rep_form(std::initializer_list<std::pair<long, const ExponentVec*>> terms) {
  LinearForm form;
  for (const auto& [coeff, rep] : terms) add_rep(form, coeff, *rep);
  drop_zeros(form);
  return form;
}

class Builder {
 public:
  Builder(const ConstructPolicy& policy, std::size_t steps) : policy_(policy), target_(steps) {
    push_generator(1, 0);
    push_element(0, ExponentVec());
    push_element(1, ExponentVec::unit(1));
    ConstructionStep first;
    first.n = 0;
    first.action = ConstructionStep::Action::InsertedGenerator;
    first.value = Value::rational(1);
    first.rep = ExponentVec::unit(1);
    first.generator = 1;
    steps_.push_back(std::move(first));
    budget_ = 1000 + 50 * steps;
  }

  ConstructionTrace run() {
    std::size_t n = 1;
    while (xs_.size() - 1 < target_) {
      auto [z, z_rep] = compute_z(n);
      const bool disjoint = !reps_[n].shares_support(z_rep);
      ConstructionStep step;
      step.n = n;
      step.z = Value::rational(z);
      step.z_rep = z_rep;
      if (disjoint) {
        step.action = ConstructionStep::Action::TookZ;
        step.value = Value::rational(z);
        step.rep = z_rep;
        push_element(z, z_rep);
      } else {
        const auto k = static_cast<std::uint32_t>(gens_.size() + 1);
        auto chosen = choose(n, z, z_rep, k);
        if (!chosen) {
          n = rewind_to_learned();
          continue;
        }
        auto [a, lo, hi] = *chosen;
        step.action = ConstructionStep::Action::InsertedGenerator;
        step.value = Value::rational(a);
        step.rep = ExponentVec::unit(k);
        step.generator = k;
        step.window = std::make_pair(Value::rational(lo), Value::rational(hi));
        push_generator(a, n);
        push_element(a, ExponentVec::unit(k));
      }
      steps_.push_back(std::move(step));
      if (enforce_convexity() && !last_triple_convex()) {
        const std::size_t m = xs_.size() - 3;
        LinearForm form;
        add_rep(form, 2, reps_[m + 1]);
        add_rep(form, -1, reps_[m]);
        add_rep(form, -1, reps_[m + 2]);
        drop_zeros(form);
        learn(std::move(form), n);
        n = rewind_to_learned();
        continue;
      }
      ++n;
    }
    return finish();
  }

 private:
  bool enforce_convexity() const {
    return policy_.kind == ConstructPolicy::Kind::ConvexityWindow && policy_.backtrack;
  }

  void push_generator(const mpq_class& a, std::size_t step) {
    gens_.push_back(a);
    gens_d_.push_back(a.get_d());
    ins_step_.push_back(step);
  }

  void push_element(const mpq_class& x, ExponentVec rep) {
    xs_.push_back(x);
    xs_d_.push_back(x.get_d());
    reps_.push_back(std::move(rep));
  }

  bool last_triple_convex() const {
    const std::size_t m = xs_.size() - 3;
    const double slack = 2 * xs_d_[m + 1] - xs_d_[m] - xs_d_[m + 2];
    if (slack > kSlack) return true;
    if (slack < -kSlack) return false;
    return xs_[m] + xs_[m + 2] < 2 * xs_[m + 1];
  }

  // Double shadows of the exact values locate candidates; anything within
  // kSlack of a decision boundary is settled with the exact rationals.
  static constexpr double kSlack = 1e-9;

  // z_n = min { x_j + a_i : a_i <= x_n, x_j + a_i > x_n }
  std::pair<mpq_class, ExponentVec> compute_z(std::size_t n) const {
    const mpq_class& xn = xs_[n];
    const double xn_d = xs_d_[n];
    const auto first = xs_d_.begin();
    const auto last = xs_d_.begin() + static_cast<std::ptrdiff_t>(n) + 1;
    struct Candidate {
      std::size_t i, j;
      double v;
    };
    std::vector<Candidate> cands;
    double min_d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_d_[i] > xn_d + kSlack || (gens_d_[i] > xn_d - kSlack && gens_[i] > xn)) break;
      const double t = xn_d - gens_d_[i];
      auto lo = static_cast<std::size_t>(std::lower_bound(first, last, t - kSlack) - first);
      auto hi = static_cast<std::size_t>(std::upper_bound(first, last, t + kSlack) - first);
      std::size_t j = lo;
      if (lo != hi) {
        const mpq_class target = xn - gens_[i];
        j = static_cast<std::size_t>(
            std::upper_bound(xs_.begin() + static_cast<std::ptrdiff_t>(lo),
                             xs_.begin() + static_cast<std::ptrdiff_t>(hi), target) -
            xs_.begin());
      }
      const double v = xs_d_[j] + gens_d_[i];
      if (cands.empty() || v < min_d) min_d = v;
      cands.push_back({i, j, v});
    }
    std::optional<mpq_class> best;
    ExponentVec best_rep;
    for (const Candidate& c : cands) {
      if (c.v > min_d + kSlack) continue;
      const std::size_t i = c.i, j = c.j;
      const mpq_class v = xs_[j] + gens_[i];
      ExponentVec rep = reps_[j];
      rep.add(static_cast<std::uint32_t>(i + 1));
      if (!best || v < *best) {
        best = v;
        best_rep = std::move(rep);
      } else if (v == *best && rep != best_rep) {
        throw Error(ErrorCode::ValueCollision,
                    "step " + std::to_string(n) + ": " + to_string(best_rep) + " and " + to_string(rep) +
                        " share the value " + best->get_str(),
                    n);
      }
    }
    return {*best, best_rep};
  }

  std::optional<std::tuple<mpq_class, mpq_class, mpq_class>> choose(std::size_t n, const mpq_class& z,
                                                                    const ExponentVec& z_rep, std::uint32_t k) {
    const mpq_class& xn = xs_[n];
    switch (policy_.kind) {
      case ConstructPolicy::Kind::Midpoint:
        return std::make_tuple((xn + z) / 2, xn, z);
      case ConstructPolicy::Kind::UserValues: {
        if (next_user_ >= policy_.values.size()) {
          throw Error(ErrorCode::PolicyExhausted,
                      "step " + std::to_string(n) + " needs user value " + std::to_string(next_user_ + 1), n);
        }
        const Value& v = policy_.values[next_user_++];
        if (v.kind() != ValueKind::Rational || !(xn < v.as_rational()) || !(v.as_rational() < z)) {
          throw Error(ErrorCode::InvalidUserValue,
                      "step " + std::to_string(n) + ": " + to_string(v) + " is not inside (" + xn.get_str() + ", " +
                          z.get_str() + ")",
                      n);
        }
        return std::make_tuple(v.as_rational(), xn, z);
      }
      case ConstructPolicy::Kind::ConvexityWindow:
        break;
    }
    const Bound base[3] = {Bound(2, rep_form({{-1, &reps_[n]}, {-1, &z_rep}})),
                           Bound(-1, rep_form({{1, &z_rep}})),
                           Bound(-1, rep_form({{2, &reps_[n]}, {-1, &reps_[n - 1]}}))};
    std::vector<const Bound*> bounds = {&base[0], &base[1], &base[2]};
    if (auto it = learned_.find(k); it != learned_.end()) {
      for (const Bound& b : it->second) bounds.push_back(&b);
    }
    const auto [lo_b, lo] = tightest(bounds, true);
    const auto [hi_b, hi] = tightest(bounds, false);
    if (lo < hi) return std::make_tuple((lo + hi) / 2, lo, hi);
    if (!policy_.backtrack) {
      throw Error(ErrorCode::EmptyConvexityWindow,
                  "step " + std::to_string(n) + ": window (" + lo.get_str() + ", " + hi.get_str() + ") is empty", n);
    }
    // (-c_u)(c_l a + R_l) + c_l (c_u a + R_u) > 0 eliminates a
    LinearForm form;
    for (const auto& [i, c] : lo_b->rest) form[i] += -hi_b->c * c;
    for (const auto& [i, c] : hi_b->rest) form[i] += lo_b->c * c;
    drop_zeros(form);
    learn(std::move(form), n);
    return std::nullopt;
  }

  // Largest lower (or smallest upper) bound -rest/c. Bounds are screened in
  // double precision with a rounding-error margin; only those that may be
  // the extreme one are evaluated exactly.
  std::pair<const Bound*, mpq_class> tightest(const std::vector<const Bound*>& bounds, bool lower) const {
    struct Screen {
      const Bound* b;
      double at, err;
    };
    std::vector<Screen> screens;
    double cut = 0;
    for (const Bound* b : bounds) {
      if ((b->c_d > 0) != lower) continue;
      double sum = 0, mag = 0;
      for (const auto& [i, c] : b->rest_d) {
        const double t = c * gens_d_[i - 1];
        sum += t;
        mag += std::fabs(t);
      }
      const double at = -sum / b->c_d;
      const double err = (mag / std::fabs(b->c_d) + std::fabs(at)) * static_cast<double>(b->rest_d.size() + 4) * 0x1p-50;
      const double sure = lower ? at - err : at + err;
      if (screens.empty() || (lower ? sure > cut : sure < cut)) cut = sure;
      screens.push_back({b, at, err});
    }
    const Bound* best = nullptr;
    mpq_class best_at;
    for (const Screen& s : screens) {
      if (lower ? s.at + s.err < cut : s.at - s.err > cut) continue;
      mpq_class at = -evaluate(s.b->rest, gens_) / s.b->c;
      if (!best || (lower ? at > best_at : at < best_at)) {
        best = s.b;
        best_at = std::move(at);
      }
    }
    return {best, best_at};
  }

  void learn(LinearForm form, std::size_t n) {
    if (form.empty() || form.rbegin()->first == 1) {
      throw Error(ErrorCode::EmptyConvexityWindow,
                  "step " + std::to_string(n) + ": the learned constraints admit no generator values", n);
    }
    if (++backtracks_ > budget_) {
      throw Error(ErrorCode::EmptyConvexityWindow,
                  "step " + std::to_string(n) + ": backtracking budget exhausted", n);
    }
    pending_ = form.rbegin()->first;
    mpz_class c = form.at(pending_);
    form.erase(pending_);
    learned_[pending_].emplace_back(std::move(c), std::move(form));
    ++learned_count_;
  }

  // Drops a_j (j = max index of the newest constraint) and everything built after it.
  std::size_t rewind_to_learned() {
    const std::uint32_t j = pending_;
    const std::size_t s = ins_step_[j - 1];
    gens_.resize(j - 1);
    gens_d_.resize(j - 1);
    ins_step_.resize(j - 1);
    xs_.resize(s + 1);
    xs_d_.resize(s + 1);
    reps_.resize(s + 1);
    steps_.resize(s);
    return s;
  }

  ConstructionTrace finish() {
    std::vector<Value> gens;
    for (const mpq_class& g : gens_) gens.push_back(Value::rational(g));
    std::vector<Element> elements;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      elements.push_back(Element{i, Value::rational(xs_[i]), {reps_[i]}});
    }
    LikenSpec spec = family_custom(gens, "or-construct:" + policy_name(policy_));
    ConstructionTrace trace{policy_name(policy_), std::move(steps_),
                            Prefix(spec, std::move(elements), gens, false), backtracks_, learned_count_};
    return trace;
  }

  const ConstructPolicy& policy_;
  std::size_t target_;
  std::vector<mpq_class> gens_;
  std::vector<std::size_t> ins_step_;
  std::vector<mpq_class> xs_;
  std::vector<double> gens_d_;
  std::vector<double> xs_d_;
  std::vector<ExponentVec> reps_;
  std::vector<ConstructionStep> steps_;
  std::map<std::uint32_t, std::vector<Bound>> learned_;
  std::uint32_t pending_ = 0;
  std::size_t next_user_ = 0;
  std::size_t backtracks_ = 0;
  std::size_t learned_count_ = 0;
  std::size_t budget_ = 0;
};

}  // namespace

ConstructionTrace or_construct(const ConstructPolicy& policy, std::size_t steps) {
  if (steps == 0) throw Error(ErrorCode::InvalidArgument, "steps must be at least 1");
  return Builder(policy, steps).run();
}

std::vector<std::string> verify_trace(const ConstructionTrace& trace) {
  std::vector<std::string> problems;
  const Prefix& p = trace.prefix;
  auto complain = [&](std::size_t n, const std::string& what) {
    problems.push_back("step " + std::to_string(n) + ": " + what);
  };
  if (trace.steps.size() + 1 != p.size()) {
    complain(0, "trace and prefix lengths differ");
    return problems;
  }
  std::uint32_t gens = 0;
  for (const ConstructionStep& s : trace.steps) {
    if (!(p[s.n + 1].value == s.value) || p[s.n + 1].reps != std::vector<ExponentVec>{s.rep}) {
      complain(s.n, "recorded element differs from the prefix");
    }
    if (s.n == 0) {
      gens = 1;
      continue;
    }
    const Element z = subliken_z(p, s.n);
    if (!s.z || !(z.value == *s.z) || z.reps != std::vector<ExponentVec>{s.z_rep}) {
      complain(s.n, "z_n differs from an independent enumeration");
    }
    const bool disjoint = !p[s.n].rep().shares_support(s.z_rep);
    if (s.action == ConstructionStep::Action::TookZ) {
      if (!disjoint) complain(s.n, "took z_n although the supports meet");
      if (!(s.value == z.value)) complain(s.n, "TookZ value is not z_n");
    } else {
      if (disjoint) complain(s.n, "inserted a generator although the supports are disjoint");
      if (!(p[s.n].value < s.value && s.value < z.value)) complain(s.n, "inserted value outside (x_n, z_n)");
      if (s.generator != gens + 1 || !(s.rep == ExponentVec::unit(s.generator))) {
        complain(s.n, "generator index out of sequence");
      }
      gens = s.generator;
      if (s.n + 1 < trace.steps.size()) {
        const ConstructionStep& next = trace.steps[s.n + 1];
        if (next.action != ConstructionStep::Action::TookZ || !(next.value == z.value)) {
          complain(s.n + 1, "x_{n+2} is not the z_n of the preceding insertion");
        }
      }
    }
  }
  return problems;
}

json step_to_json(const ConstructionStep& s) {
  json out{{"n", s.n},
           {"action", s.action == ConstructionStep::Action::TookZ ? "TookZ" : "InsertedGenerator"},
           {"value", to_string(s.value)},
           {"rep", to_string(s.rep)}};
  if (s.z) {
    out["z"] = to_string(*s.z);
    out["z_rep"] = to_string(s.z_rep);
  }
  if (s.action == ConstructionStep::Action::InsertedGenerator) out["generator"] = s.generator;
  if (s.window) out["window"] = {to_string(s.window->first), to_string(s.window->second)};
  return out;
}

// ------------------------------------------------------------ main theorem

std::string_view main_verdict_name(MainTheoremReport::Verdict v) {
  switch (v) {
    case MainTheoremReport::Verdict::TheoremConsistent: return "TheoremConsistent";
    case MainTheoremReport::Verdict::HypothesisFails: return "HypothesisFails";
    case MainTheoremReport::Verdict::CounterexampleFlag: return "COUNTEREXAMPLE-FLAG";
  }
  return "?";
}

ExponentVec prime_exponents(std::uint64_t m, IncrementalSieve& sieve) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "prime_exponents needs m >= 1");
  ExponentVec out;
  for (const auto& [p, e] : factorize(mpz_class(static_cast<unsigned long>(m)))) {
    out.add(static_cast<std::uint32_t>(sieve.count_up_to(p.get_ui())), e);
  }
  return out;
}

namespace {

// Independent re-check used before a counterexample is reported: re-enumerate
// the liken from its generators and recompute (C), (OR) and the pattern directly.
std::string reverify(const Prefix& prefix) {
  const Prefix fresh = enumerate(prefix.spec(), Limit::value_bound(prefix.back().value));
  if (fresh.size() != prefix.size()) return "engine inconsistency: re-enumeration has a different length";
  for (std::size_t n = 0; n < prefix.size(); ++n) {
    if (!(fresh[n].value == prefix[n].value) || fresh[n].reps != prefix[n].reps) {
      return "engine inconsistency: re-enumeration differs at n=" + std::to_string(n);
    }
  }
  for (std::size_t k = 0; k + 2 < fresh.size(); ++k) {
    if (!(value_add(fresh[k].value, fresh[k + 2].value) < value_scale(2, fresh[k + 1].value))) {
      return "engine inconsistency: convexity fails at k=" + std::to_string(k) + " on re-check";
    }
  }
  for (std::size_t n = 1; n + 1 < fresh.size(); ++n) {
    const Element z = subliken_z(fresh, n);
    if (!fresh[n].rep().shares_support(z.rep()) && !(fresh[n + 1].value == z.value)) {
      return "engine inconsistency: OR fails at n=" + std::to_string(n) + " on re-check";
    }
  }
  IncrementalSieve sieve;
  for (std::size_t n = 0; n < fresh.size(); ++n) {
    if (fresh[n].rep() != prime_exponents(n + 1, sieve)) {
      return "confirmed: (C) and (OR) hold but x_" + std::to_string(n) + " has representation " +
             to_string(fresh[n].rep()) + ", not the factorization of " + std::to_string(n + 1);
    }
  }
  return "engine inconsistency: the re-check finds no mismatch";
}

}  // namespace

MainTheoremReport verify_main_theorem(const Prefix& prefix) {
  for (const Element& e : prefix.elements()) (void)e.rep();
  MainTheoremReport r;
  r.convexity = check_convexity(prefix);
  r.ockham = check_or(prefix);
  const bool c_ok = r.convexity.verdict == Verdict::Pass;
  const bool or_ok = r.ockham.verdict == Verdict::Pass;
  if (!c_ok || !or_ok) {
    r.verdict = MainTheoremReport::Verdict::HypothesisFails;
    r.failed = !c_ok && !or_ok ? "convexity,or" : (!c_ok ? "convexity" : "or");
    return r;
  }
  const Prefix nstar = enumerate(family_nstar(), Limit::count(prefix.size()));
  r.iso = order_iso_prefix_test(prefix, nstar);
  IncrementalSieve sieve;
  for (std::size_t n = 0; n < prefix.size(); ++n) {
    if (prefix[n].rep() != prime_exponents(n + 1, sieve)) {
      r.pattern_mismatch = n;
      break;
    }
  }
  if (r.iso->consistent && !r.pattern_mismatch) {
    r.verdict = MainTheoremReport::Verdict::TheoremConsistent;
    return r;
  }
  r.verdict = MainTheoremReport::Verdict::CounterexampleFlag;
  r.reverification = reverify(prefix);
  return r;
}

json main_report_to_json(const MainTheoremReport& r) {
  json out{{"verdict", std::string(main_verdict_name(r.verdict))},
           {"prefix_len", r.convexity.prefix_len},
           {"convexity", report_to_json(r.convexity)},
           {"or", report_to_json(r.ockham)}};
  if (!r.failed.empty()) out["failed"] = r.failed;
  if (r.iso) out["iso_check"] = order_iso_to_json(*r.iso);
  if (r.pattern_mismatch) out["pattern_mismatch"] = *r.pattern_mismatch;
  if (!r.reverification.empty()) out["reverification"] = r.reverification;
  return out;
}

}  // namespace liken
