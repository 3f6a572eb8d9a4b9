#include "liken/morphisms.hpp"

#include <algorithm>

namespace liken {

using nlohmann::json;

std::string_view outcome_name(HomothetyResult::Outcome outcome) {
  switch (outcome) {
    case HomothetyResult::Outcome::Isomorphic: return "Isomorphic";
    case HomothetyResult::Outcome::NotIsomorphic: return "NotIsomorphic";
    case HomothetyResult::Outcome::Undecided: return "UndecidedAtPrecision";
  }
  return "?";
}

std::optional<std::tuple<mpz_class, unsigned long, unsigned long>> common_base(mpz_class g, mpz_class h) {
  if (g < 2 || h < 2) return std::nullopt;
  mpz_class u = g, v = h;
  while (u != v) {
    if (u < v) std::swap(u, v);
    if (!mpz_divisible_p(u.get_mpz_t(), v.get_mpz_t())) return std::nullopt;
    u /= v;
  }
  auto exponent = [&](mpz_class n) {
    unsigned long e = 0;
    while (n > 1) {
      n /= u;
      ++e;
    }
    return e;
  };
  return std::make_tuple(u, exponent(g), exponent(h));
}

namespace {

// Pulls generators 1..k_max from both specs; stops early when either runs out.
struct Aligned {
  std::vector<Value> a;
  std::vector<Value> b;
  bool a_short = false;
  bool b_short = false;
};

Aligned align(const LikenSpec& sa, const LikenSpec& sb, std::size_t k_max) {
  GeneratorCache ca(sa.make_stream());
  GeneratorCache cb(sb.make_stream());
  Aligned out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const Value* x = ca.at(k);
    const Value* y = cb.at(k);
    if (k == 1 && x == nullptr) throw Error(ErrorCode::EmptySpec, "liken '" + sa.name() + "' has no generator");
    if (k == 1 && y == nullptr) throw Error(ErrorCode::EmptySpec, "liken '" + sb.name() + "' has no generator");
    if (x == nullptr || y == nullptr) {
      out.a_short = x == nullptr;
      out.b_short = y == nullptr;
      break;
    }
    out.a.push_back(*x);
    out.b.push_back(*y);
  }
  return out;
}

// Refines a_i * b_j against a_j * b_i; returns the ordering and reached precision.
Comparison cross_ratio(const Value& ai, const Value& bj, const Value& aj, const Value& bi, unsigned ceiling) {
  for (unsigned bits = 64;; bits = std::min(bits * 2, ceiling)) {
    const Interval l = interval_mul(approx(ai, bits), approx(bj, bits));
    const Interval r = interval_mul(approx(aj, bits), approx(bi, bits));
    if (l.hi < r.lo) return {Ordering::Less, bits};
    if (r.hi < l.lo) return {Ordering::Greater, bits};
    if (bits >= ceiling) return {Ordering::Undecided, bits};
  }
}

}  // namespace

HomothetyResult homothety_test(const LikenSpec& sa, const LikenSpec& sb, std::size_t k_max, unsigned precision_bits) {
  if (k_max == 0) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 1");
  HomothetyResult r;
  r.finite_dimensional = sa.is_finite() || sb.is_finite();
  const Aligned g = align(sa, sb, k_max);
  const std::size_t m = g.a.size();
  r.checked = m;
  if (g.a_short != g.b_short) {
    r.outcome = HomothetyResult::Outcome::NotIsomorphic;
    r.witness = {m + 1};
    r.detail = "generator " + std::to_string(m + 1) + " exists on one side only";
    return r;
  }

  const ValueKind ka = sa.value_kind(), kb = sb.value_kind();
  if (ka == ValueKind::Rational && kb == ValueKind::Rational) {
    const mpq_class lambda = g.a[0].as_rational() / g.b[0].as_rational();
    for (std::size_t k = 0; k < m; ++k) {
      if (g.a[k].as_rational() != lambda * g.b[k].as_rational()) {
        r.outcome = HomothetyResult::Outcome::NotIsomorphic;
        r.witness = {k + 1};
        r.detail = "a_" + std::to_string(k + 1) + " != lambda * b_" + std::to_string(k + 1) +
                   " for lambda = a_1/b_1 = " + lambda.get_str();
        return r;
      }
      r.certificate.push_back(to_string(g.a[k]) + " = " + lambda.get_str() + " * " + to_string(g.b[k]));
    }
    r.outcome = HomothetyResult::Outcome::Isomorphic;
    r.lambda = lambda;
    r.lambda_text = lambda.get_str();
    return r;
  }

  if (ka == ValueKind::LogInt && kb == ValueKind::LogInt) {
    if (auto base = common_base(g.a[0].log_argument(), g.b[0].log_argument())) {
      // ln g_1 / ln h_1 = s/t exactly; then a_k = (s/t) b_k iff g_k^t = h_k^s
      auto [b, s, t] = *base;
      mpq_class lambda(s, t);
      lambda.canonicalize();
      const unsigned long sp = lambda.get_num().get_ui(), tp = lambda.get_den().get_ui();
      for (std::size_t k = 0; k < m; ++k) {
        mpz_class lhs, rhs;
        mpz_pow_ui(lhs.get_mpz_t(), g.a[k].log_argument().get_mpz_t(), tp);
        mpz_pow_ui(rhs.get_mpz_t(), g.b[k].log_argument().get_mpz_t(), sp);
        if (lhs != rhs) {
          r.outcome = HomothetyResult::Outcome::NotIsomorphic;
          r.witness = {k + 1};
          r.detail = "ln g_1 / ln h_1 = " + lambda.get_str() + " but g_" + std::to_string(k + 1) + "^" +
                     std::to_string(tp) + " != h_" + std::to_string(k + 1) + "^" + std::to_string(sp);
          return r;
        }
        r.certificate.push_back(g.a[k].log_argument().get_str() + "^" + std::to_string(tp) + " = " +
                                g.b[k].log_argument().get_str() + "^" + std::to_string(sp));
      }
      r.outcome = HomothetyResult::Outcome::Isomorphic;
      r.lambda = lambda;
      r.lambda_text = lambda.get_str();
      return r;
    }
  }

  // lambda = a_1/b_1 is irrational: refute by a cross ratio a_1 * b_j != a_j * b_1
  r.lambda_text = to_string(g.a[0]) + "/" + to_string(g.b[0]);
  unsigned reached = 0;
  for (std::size_t j = 1; j < m; ++j) {
    const Comparison c = cross_ratio(g.a[0], g.b[j], g.a[j], g.b[0], precision_bits);
    reached = std::max(reached, c.precision_bits);
    if (c.ordering == Ordering::Less || c.ordering == Ordering::Greater) {
      r.outcome = HomothetyResult::Outcome::NotIsomorphic;
      r.witness = {1, j + 1};
      r.precision_bits = c.precision_bits;
      r.detail = "a_1 * b_" + std::to_string(j + 1) + (c.ordering == Ordering::Less ? " < " : " > ") + "a_" +
                 std::to_string(j + 1) + " * b_1, separated at " + std::to_string(c.precision_bits) + " bits";
      return r;
    }
  }
  r.precision_bits = reached;
  if (m == 1) {
    r.outcome = HomothetyResult::Outcome::Isomorphic;
    r.certificate.push_back(to_string(g.a[0]) + " = (" + r.lambda_text + ") * " + to_string(g.b[0]));
    r.detail = "one generator on each side within k_max";
    return r;
  }
  r.outcome = HomothetyResult::Outcome::Undecided;
  r.detail = "no cross ratio separated within " + std::to_string(precision_bits) + " bits";
  return r;
}

OrderIsoResult order_iso_prefix_test(const Prefix& a, const Prefix& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "prefix lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  OrderIsoResult r;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const ExponentVec& u = a[n].rep();
    const ExponentVec& v = b[n].rep();
    if (u != v) {
      r.consistent = false;
      r.mismatch = n;
      r.rep_a = u;
      r.rep_b = v;
      r.upto = n - 1;
      return r;
    }
  }
  r.upto = a.size() - 1;
  return r;
}

Value psi_map(const Prefix& source, const LikenSpec& target, std::size_t n) {
  if (n >= source.size()) throw Error(ErrorCode::IndexOutOfRange, "index beyond the source prefix", n);
  return omega(target, source[n].rep());
}

json homothety_to_json(const HomothetyResult& r) {
  json out{{"outcome", std::string(outcome_name(r.outcome))},
           {"checked", r.checked},
           {"finite_dimensional", r.finite_dimensional}};
  if (r.lambda) out["lambda"] = r.lambda->get_str();
  if (!r.lambda_text.empty()) out["lambda_text"] = r.lambda_text;
  if (!r.certificate.empty()) out["certificate"] = r.certificate;
  if (!r.witness.empty()) out["witness"] = r.witness;
  if (!r.detail.empty()) out["detail"] = r.detail;
  if (r.precision_bits) out["precision_bits"] = r.precision_bits;
  return out;
}

json order_iso_to_json(const OrderIsoResult& r) {
  if (r.consistent) return json{{"outcome", "ConsistentUpTo"}, {"n", r.upto}};
  return json{{"outcome", "Mismatch"},
              {"n", *r.mismatch},
              {"rep_a", to_string(r.rep_a)},
              {"rep_b", to_string(r.rep_b)}};
}

}  // namespace liken
