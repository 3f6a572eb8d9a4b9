#include <gtest/gtest.h>

#include <random>

#include "liken/error.hpp"
#include "liken/exactnum.hpp"
#include "oracles.hpp"

using namespace liken;
using liken::oracle::big_float;
using liken::oracle::float_oracle;

namespace {

big_float to_big(const mpq_class& q) { return big_float(q.get_num().get_str()) / big_float(q.get_den().get_str()); }

}  // namespace

TEST(Exactnum, SameKindOrderIsExact) {
  EXPECT_LT(Value::rational(1, 3), Value::rational(34, 100));
  EXPECT_EQ(Value::rational(2, 4), Value::rational(1, 2));
  EXPECT_LT(Value::log_int(8), Value::log_int(9));
  EXPECT_EQ(value_compare(Value::log_int(6), Value::log_int(6)).ordering, Ordering::Equal);
  EXPECT_EQ(value_compare(Value::log_int(6), Value::log_int(6)).precision_bits, 0u);
}

TEST(Exactnum, CrossKindOperatorThrows) {
  try {
    (void)(Value::rational(1) < Value::log_int(3));
    FAIL() << "expected KindMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KindMismatch);
  }
  EXPECT_THROW(value_add(Value::rational(1), Value::log_int(2)), Error);
}

TEST(Exactnum, MixedComparisonMatchesDecimalOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned long> k_dist(2, 100000);
  std::uniform_int_distribution<long> num(1, 2000);
  std::uniform_int_distribution<long> den(1, 200);
  for (int i = 0; i < 400; ++i) {
    const Value a = Value::log_int(k_dist(rng));
    const Value b = Value::rational(num(rng), den(rng));
    const big_float fa = float_oracle(a);
    const big_float fb = float_oracle(b);
    const Comparison c = value_compare(a, b);
    ASSERT_NE(c.ordering, Ordering::Undecided);
    EXPECT_EQ(c.ordering == Ordering::Less, fa < fb) << to_string(a) << " vs " << to_string(b);
    EXPECT_EQ(value_compare(b, a).ordering == Ordering::Greater, fa < fb);
  }
}

TEST(Exactnum, CloseLogsAgainstRationalsNeedRefinement) {
  // ln(2) = 0.693147180559945309417...
  const Value ln2 = Value::log_int(2);
  const Value below = Value::rational(mpq_class("693147180559945309/1000000000000000000"));
  const Value above = Value::rational(mpq_class("693147180559945310/1000000000000000000"));
  EXPECT_EQ(value_compare(ln2, below).ordering, Ordering::Greater);
  EXPECT_EQ(value_compare(ln2, above).ordering, Ordering::Less);
  EXPECT_GT(value_compare(ln2, below).precision_bits, 0u);
}

TEST(Exactnum, TinyCeilingReportsUndecided) {
  const Value ln2 = Value::log_int(2);
  const Value q = Value::rational(mpq_class("6931471805599453094172321/10000000000000000000000000"));
  EXPECT_EQ(value_compare(ln2, q, 64).ordering, Ordering::Undecided);
  EXPECT_NE(value_compare(ln2, q, 4096).ordering, Ordering::Undecided);
}

TEST(Exactnum, ApproxEnclosesOracle) {
  for (unsigned long k : {2ul, 3ul, 10ul, 97ul, 1000003ul}) {
    const big_float truth = oracle::ln_oracle(mpz_class(k));
    Interval prev = approx(Value::log_int(k), 32);
    for (unsigned bits : {32u, 64u, 128u, 256u}) {
      const Interval iv = approx(Value::log_int(k), bits);
      EXPECT_LE(to_big(iv.lo), truth);
      EXPECT_GE(to_big(iv.hi), truth);
      EXPECT_TRUE(prev.contains(iv)) << "enclosures must be nested";
      prev = iv;
    }
  }
  const Interval exact = approx(Value::rational(3, 7), 64);
  EXPECT_EQ(exact.lo, exact.hi);
}

TEST(Exactnum, IntervalProductEnclosesProduct) {
  const Interval a = approx(Value::log_int(3), 80);
  const Interval b = approx(Value::log_int(5), 80);
  const Interval p = interval_mul(a, b);
  const big_float truth = oracle::ln_oracle(mpz_class(3)) * oracle::ln_oracle(mpz_class(5));
  EXPECT_LE(to_big(p.lo), truth);
  EXPECT_GE(to_big(p.hi), truth);
}

TEST(Exactnum, LogIntArithmeticMultiplies) {
  EXPECT_EQ(value_add(Value::log_int(6), Value::log_int(35)), Value::log_int(210));
  EXPECT_EQ(value_scale(3, Value::log_int(2)), Value::log_int(8));
  EXPECT_EQ(value_scale(4, Value::rational(3, 2)), Value::rational(6));
  EXPECT_EQ(value_sub(Value::log_int(12), Value::log_int(4)), Value::log_int(3));
  EXPECT_FALSE(value_sub(Value::log_int(12), Value::log_int(5)).has_value());
  EXPECT_FALSE(value_sub(Value::rational(1), Value::rational(2)).has_value());
  EXPECT_EQ(value_sub(Value::rational(5, 2), Value::rational(1)), Value::rational(3, 2));
}

TEST(Exactnum, TextRoundTrip) {
  for (const char* text : {"3/2", "ln(257)", "7/1", "0/1", "ln(1)"}) {
    EXPECT_EQ(to_string(parse_value(text)), text);
  }
  EXPECT_EQ(parse_value("4"), Value::rational(4));
  EXPECT_EQ(parse_value("6/4"), Value::rational(3, 2));
  for (const char* bad : {"", "ln(", "ln(x)", "1/0", "a/b", "-"}) {
    EXPECT_THROW(parse_value(bad), Error) << bad;
  }
}
