#include <gtest/gtest.h>

#include <random>

#include "qdeform/errors.hpp"
#include "qdeform/symexpr/parse.hpp"
#include "qdeform/symexpr/ratfunc.hpp"

using namespace qdeform;

namespace {

RatFunc P(const char* s) { return parse_ratfunc(s); }

mpq_class rational(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 7);
  mpq_class x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

RatFunc random_ratfunc(std::mt19937& rng) {
  static const char* syms[] = {"q", "r", "s"};
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<int> pick(0, 2);
  auto laurent = [&] {
    RatFunc x(0);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
      RatFunc t(rational(rng, -5, 5));
      t *= RatFunc::symbol(syms[pick(rng)]).pow(expo(rng));
      t *= RatFunc::symbol(syms[pick(rng)]).pow(expo(rng));
      x += t;
    }
    return x;
  };
  RatFunc n = laurent();
  RatFunc d = laurent();
  if (d.is_zero() || pick(rng) == 0) return n;
  return n / d;
}

}  // namespace

TEST(ParamSet, SortedAndUnique) {
  auto p = ParamSet::make({"s", "r", "h'"});
  EXPECT_EQ(p->symbols(), (std::vector<std::string>{"h'", "r", "s"}));
  EXPECT_THROW(ParamSet::make({"r", "r"}), SchemaError);
  EXPECT_THROW(ParamSet::make({"2x"}), SchemaError);
  EXPECT_TRUE(is_valid_symbol("k''"));
  EXPECT_FALSE(is_valid_symbol("k'a"));
}

TEST(RatFuncArith, CancelsCommonFactor) {
  RatFunc x = (P("q") - P("q^-1")) * P("h/(1-q)");
  RatFunc expected = -P("h") * (P("q") + 1) / P("q");
  EXPECT_EQ(x, expected);
  // Independent check: evaluate the uncancelled form at random rational points.
  std::mt19937 rng(7);
  for (int i = 0; i < 3; ++i) {
    mpq_class q = rational(rng, 2, 40), h = rational(rng, -9, 9);
    mpq_class direct = (q - 1 / q) * h / (1 - q);
    EXPECT_EQ(x.evaluate({{"q", q}, {"h", h}}), direct);
    EXPECT_EQ(-h * (q + 1) / q, direct);
  }
}

TEST(RatFuncArith, Trivial) {
  RatFunc x = P("r^2*s - 3/4*s^-1");
  EXPECT_EQ(x + 0, x);
  EXPECT_EQ(P("p/q") / P("p/q"), RatFunc(1));
  EXPECT_TRUE((P("p/q") / P("p/q")).is_one());
  EXPECT_THROW(x / RatFunc(0), DivisionByZero);
  EXPECT_EQ(RatFunc(0).to_string(), "0");
}

TEST(RatFuncArith, NormalizationIsCanonical) {
  RatFunc a = P("(q^2 - 1)/(2*q - 2)");
  EXPECT_EQ(a, P("q/2 + 1/2"));
  EXPECT_TRUE(a.is_polynomial());
  RatFunc b = P("(2*q*r)/(4*q^2*r^3)");
  EXPECT_EQ(b.den().leading_coef(), 1);
  EXPECT_EQ(b.to_string(), "1/2*q^-1*r^-2");
  EXPECT_TRUE(b.is_laurent_monomial());
  EXPECT_EQ(b.laurent_exponent("r"), -2);
}

TEST(RatFuncArith, MultivariateGcd) {
  RatFunc f = P("(r*s - 1)*(r + s^2 + k)");
  RatFunc g = P("(r*s - 1)*(k*r - s)");
  RatFunc q = f / g;
  EXPECT_EQ(q, P("(r + s^2 + k)/(k*r - s)"));
  RatFunc u = P("(a*b + c)^2*(a - b)");
  RatFunc v = P("(a*b + c)*(a + b)^2");
  EXPECT_EQ(u / v, P("(a*b + c)*(a - b)/(a + b)^2"));
}

TEST(RatFuncSubstitute, HomParameterMap) {
  IntConstants n2{{"N", 2}};
  Bindings b{{"p", parse_ratfunc("r^-1*s^N", nullptr, n2)}, {"q", parse_ratfunc("r^-1*s^(-N)", nullptr, n2)}};
  RatFunc pq = P("p*q").substitute(b);
  EXPECT_EQ(pq, P("r^-2"));
  EXPECT_FALSE(pq.depends_on("s"));
}

TEST(RatFuncSubstitute, EmptyAndSingular) {
  RatFunc x = P("(h + q)/(q - r)");
  EXPECT_EQ(x.substitute({}), x);
  EXPECT_THROW(P("1/(1-q)").substitute({{"q", RatFunc(1)}}), SingularSubstitution);
  EXPECT_EQ(x.substitute({{"q", P("r + h")}}), P("(2*h + r)/h"));
}

TEST(RatFuncSubstitute, Simultaneous) {
  RatFunc x = P("p - q^2");
  EXPECT_EQ(x.substitute({{"p", P("q")}, {"q", P("p")}}), P("q - p^2"));
}

TEST(RatFuncLimit, Examples) {
  RatFunc x = (P("q") - P("q^-1")) * P("h/(1-q)");
  EXPECT_EQ(x.limit("q", 1), P("-2*h"));
  EXPECT_EQ(P("h*(q+1)/q").limit("q", 1), P("2*h"));
  EXPECT_THROW(P("1/(1-q)").limit("q", 1), SingularLimit);
  EXPECT_FALSE(x.limit("q", 1).depends_on("q"));
}

TEST(RatFuncLimit, AgreesWithNearbyEvaluation) {
  std::mt19937 rng(11);
  RatFunc x = P("(r^3 - 1)*m/((r - 1)*(r + 2)) + m^2*r^-1");
  RatFunc lim = x.limit("r", 1);
  mpq_class m = 3;
  mpq_class at = lim.evaluate({{"m", m}});
  EXPECT_EQ(at, mpq_class(1) * m + m * m);
  mpq_class prev = 1;
  for (int i = 0; i < 3; ++i) {
    mpq_class eps(1, 10 + 100 * i + static_cast<int>(rng() % 50));
    for (mpq_class sign : {mpq_class(1), mpq_class(-1)}) {
      mpq_class v = x.evaluate({{"r", 1 + sign * eps}, {"m", m}});
      mpq_class diff = abs(v - at);
      EXPECT_LT(diff, 100 * eps);
    }
    prev = eps;
  }
}

TEST(RatFuncProperties, RingLawsAndIdempotentNormalization) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 120; ++i) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c) << a << " | " << b << " | " << c;
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a / a).is_one());
    RatFunc renorm = RatFunc::from_parts(a.params(), a.num(), a.den());
    EXPECT_TRUE(renorm.num() == a.num() && renorm.den() == a.den());
  }
}

TEST(RatFuncText, RoundTrip) {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    RatFunc a = random_ratfunc(rng);
    std::string s = a.to_string();
    RatFunc back = parse_ratfunc(s);
    EXPECT_EQ(back, a) << s;
    EXPECT_EQ(back.to_string(), s);
  }
  EXPECT_EQ(P("q - q^-1").to_string(), "q - q^-1");
  EXPECT_EQ(P("s'^2*k").to_string(), "k*s'^2");
}

TEST(Parse, Errors) {
  EXPECT_THROW(P("r +"), ParseError);
  EXPECT_THROW(P("(r"), ParseError);
  EXPECT_THROW(P("r^x"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
  auto declared = ParamSet::make({"r", "s"});
  EXPECT_THROW(parse_ratfunc("r*t", declared), ParseError);
  RatFunc x = parse_ratfunc("r*s", declared);
  EXPECT_EQ(x.params()->size(), 2U);
  EXPECT_EQ(parse_ratfunc("-m + N*k", nullptr, {{"N", 3}}), P("3*k - m"));
  EXPECT_EQ(parse_ratfunc("w^(2*N)", nullptr, {{"N", -1}}), P("w^-2"));
}
