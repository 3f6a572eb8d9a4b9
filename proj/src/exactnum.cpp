#include "liken/exactnum.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <ostream>

#include "liken/error.hpp"

namespace liken {

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
  ~MpfrValue() { mpfr_clear(x_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

mpq_class dyadic_from_mpfr(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return mpq_class(0);
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  mpq_class q(mant);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

// Directed-rounding enclosure of ln(k), k >= 2.
Interval log_enclosure(const mpz_class& k, unsigned precision_bits) {
  const auto prec = static_cast<mpfr_prec_t>(precision_bits + 4);
  MpfrValue lo(prec), hi(prec);
  mpfr_set_z(lo.get(), k.get_mpz_t(), MPFR_RNDD);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_set_z(hi.get(), k.get_mpz_t(), MPFR_RNDU);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return Interval{dyadic_from_mpfr(lo.get()), dyadic_from_mpfr(hi.get()), precision_bits};
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view kind_name(ValueKind kind) {
  return kind == ValueKind::Rational ? "rational" : "logint";
}

Value::Value() : rep_(mpq_class(0)) {}

Value Value::rational(mpq_class q) {
  q.canonicalize();
  if (sgn(q) < 0) throw Error(ErrorCode::InvalidArgument, "values are non-negative");
  Value v;
  v.rep_ = std::move(q);
  return v;
}

Value Value::rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  return rational(mpq_class(num, den));
}

Value Value::log_int(mpz_class k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "ln(k) needs k >= 1");
  Value v;
  v.rep_ = std::move(k);
  return v;
}

Value Value::zero(ValueKind kind) {
  return kind == ValueKind::Rational ? Value() : log_int(mpz_class(1));
}

bool Value::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return sgn(*q) == 0;
  return std::get<mpz_class>(rep_) == 1;
}

const mpq_class& Value::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  throw Error(ErrorCode::KindMismatch, "expected a rational value");
}

const mpz_class& Value::log_argument() const {
  if (const auto* k = std::get_if<mpz_class>(&rep_)) return *k;
  throw Error(ErrorCode::KindMismatch, "expected a ln(k) value");
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == ValueKind::Rational) return a.as_rational() == b.as_rational();
  return a.log_argument() == b.log_argument();
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) {
    throw Error(ErrorCode::KindMismatch, "exact order is only defined within one value kind");
  }
  const int c = a.kind() == ValueKind::Rational ? cmp(a.as_rational(), b.as_rational())
                                                : cmp(a.log_argument(), b.log_argument());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Comparison value_compare(const Value& u, const Value& v, unsigned ceiling_bits) {
  if (u.kind() == v.kind()) {
    const auto c = u <=> v;
    return {c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal), 0};
  }
  unsigned bits = std::min(64u, std::max(1u, ceiling_bits));
  while (true) {
    const Interval a = approx(u, bits);
    const Interval b = approx(v, bits);
    if (a.hi < b.lo) return {Ordering::Less, bits};
    if (a.lo > b.hi) return {Ordering::Greater, bits};
    if (a.lo == a.hi && b.lo == b.hi && a.lo == b.lo) return {Ordering::Equal, bits};
    if (bits >= ceiling_bits) return {Ordering::Undecided, bits};
    bits = bits > ceiling_bits / 2 ? ceiling_bits : bits * 2;
  }
}

Value value_add(const Value& u, const Value& v) {
  if (u.kind() != v.kind()) throw Error(ErrorCode::KindMismatch, "cannot add values of different kinds");
  if (u.kind() == ValueKind::Rational) return Value::rational(u.as_rational() + v.as_rational());
  return Value::log_int(u.log_argument() * v.log_argument());
}

Value value_scale(std::uint64_t n, const Value& v) {
  if (v.kind() == ValueKind::Rational) {
    return Value::rational(v.as_rational() * mpz_class(static_cast<unsigned long>(n)));
  }
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v.log_argument().get_mpz_t(), static_cast<unsigned long>(n));
  return Value::log_int(std::move(r));
}

std::optional<Value> value_sub(const Value& u, const Value& v) {
  if (u.kind() != v.kind()) throw Error(ErrorCode::KindMismatch, "cannot subtract values of different kinds");
  if (u.kind() == ValueKind::Rational) {
    mpq_class d = u.as_rational() - v.as_rational();
    if (sgn(d) < 0) return std::nullopt;
    return Value::rational(std::move(d));
  }
  const mpz_class& a = u.log_argument();
  const mpz_class& b = v.log_argument();
  if (a < b || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
  return Value::log_int(mpz_class(a / b));
}

Interval approx(const Value& v, unsigned precision_bits) {
  if (precision_bits < 1) throw Error(ErrorCode::InvalidArgument, "precision_bits must be >= 1");
  if (v.kind() == ValueKind::Rational) {
    return Interval{v.as_rational(), v.as_rational(), precision_bits};
  }
  if (v.log_argument() == 1) return Interval{mpq_class(0), mpq_class(0), precision_bits};
  return log_enclosure(v.log_argument(), precision_bits);
}

Interval interval_mul(const Interval& a, const Interval& b) {
  if (sgn(a.lo) < 0 || sgn(b.lo) < 0) {
    throw Error(ErrorCode::InvalidArgument, "interval_mul expects non-negative intervals");
  }
  return Interval{a.lo * b.lo, a.hi * b.hi, std::min(a.precision_bits, b.precision_bits)};
}

std::string to_string(const Value& v) {
  if (v.kind() == ValueKind::Rational) {
    const mpq_class& q = v.as_rational();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  return "ln(" + v.log_argument().get_str() + ")";
}

Value parse_value(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.size() > 4 && s.substr(0, 3) == "ln(" && s.back() == ')') {
    const std::string_view arg = s.substr(3, s.size() - 4);
    if (!all_digits(arg)) throw Error(ErrorCode::Parse, "bad ln argument: " + std::string(text));
    return Value::log_int(mpz_class(std::string(arg)));
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::Parse, "bad value: " + std::string(text));
  }
  mpz_class d(std::string{den});
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator: " + std::string(text));
  return Value::rational(mpq_class(mpz_class(std::string(num)), d));
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << to_string(v); }

double to_double(const Value& v) {
  if (v.kind() == ValueKind::Rational) return v.as_rational().get_d();
  MpfrValue x(64);
  mpfr_set_z(x.get(), v.log_argument().get_mpz_t(), MPFR_RNDN);
  mpfr_log(x.get(), x.get(), MPFR_RNDN);
  return mpfr_get_d(x.get(), MPFR_RNDN);
}

}  // namespace liken
