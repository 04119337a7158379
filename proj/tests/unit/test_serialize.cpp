#include <gtest/gtest.h>

#include "asai/serialize.hpp"
#include "generators.hpp"

namespace asai {
namespace {

using testing::Gen;

TEST(Serialize, RationalFunctionRoundTrip) {
  Gen g;
  for (int k = 0; k < 100; ++k) {
    const RationalFunction f = g.function({Var::u, Var::T, Var::a1, Var::b1, Var::a2});
    const std::string text = to_json(f);
    const RationalFunction back = rational_function_from_json(text);
    EXPECT_EQ(back, f) << text;
    EXPECT_EQ(to_json(back), text);
  }
}

TEST(Serialize, PolyRoundTrip) {
  Gen g;
  for (int k = 0; k < 50; ++k) {
    const RationalPoly p = g.poly({Var::T, Var::b3}, 4);
    EXPECT_EQ(rational_poly_from_json(to_json(p)), p);
  }
}

TEST(Serialize, CyclotomicRoundTrip) {
  for (long level : {1L, 5L, 25L, 7L}) {
    for (long e = 0; e < level; e += 2) {
      const CyclotomicNumber c = CyclotomicNumber::root_of_unity(level, e) * CyclotomicNumber(Rational(3, 4)) +
                                 CyclotomicNumber(1);
      EXPECT_EQ(cyclotomic_from_json(to_json(c)), c);
    }
  }
  const CycloPoly p({Monomial::of(Var::a1, 2), CyclotomicNumber::root_of_unity(5, 1)});
  EXPECT_EQ(cyclo_poly_from_json(to_json(p)), p);
}

TEST(Serialize, ExactText) {
  const RationalFunction f = mono(Monomial::of(Var::T), Rational(3, 2)) / (constant(Rational(1)) - var(Var::a1));
  const RationalFunction back = rational_function_from_json(to_json(f));
  EXPECT_EQ(back, f);
  EXPECT_EQ(to_json(constant(Rational(0))), R"({"num":[],"den":[{"coef":"1","exps":{}}]})");
  EXPECT_EQ(to_json(CyclotomicNumber(Rational(-1, 3))), R"({"level":1,"coeffs":["-1/3"]})");
}

TEST(Serialize, RejectsMalformed) {
  for (const char* bad : {"", "{", "[]", R"({"num":[]})", R"({"num":[{"coef":"x","exps":{}}],"den":[]})",
                          R"({"num":[{"coef":"1","exps":{"zz":1}}],"den":[{"coef":"1","exps":{}}]})",
                          R"({"num":[],"den":[]})", R"({"num":[{"coef":"1","exps":{"T":0.5}}],"den":[{"coef":"1","exps":{}}]})"}) {
    EXPECT_THROW(rational_function_from_json(bad), std::invalid_argument) << bad;
  }
  for (const char* bad : {R"({"level":6,"coeffs":["1"]})", R"({"level":5})", R"({"level":5,"coeffs":[1]})"}) {
    EXPECT_THROW(cyclotomic_from_json(bad), std::invalid_argument) << bad;
  }
}

}  // namespace
}  // namespace asai
