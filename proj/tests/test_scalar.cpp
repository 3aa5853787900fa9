/*
 * Copyright 2026 The cliffbundle Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "cliffbundle/checks.hpp"
#include "cliffbundle/error.hpp"
#include "cliffbundle/random.hpp"
#include "cliffbundle/scalar.hpp"

using namespace cliffbundle;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F7 = FieldSpec::prime(7);

Scalar q(const char* text) { return Scalar::parse(text, Q); }

}  // namespace

TEST(FieldSpec, Characteristic) {
  EXPECT_EQ(characteristic(Q), 0u);
  EXPECT_EQ(characteristic(F2), 2u);
  EXPECT_EQ(characteristic(F7), 7u);
}

TEST(FieldSpec, ParseAndPrint) {
  EXPECT_EQ(FieldSpec::parse("Q"), Q);
  EXPECT_EQ(FieldSpec::parse("Fp:7"), F7);
  EXPECT_EQ(F7.to_string(), "Fp:7");
  EXPECT_EQ(Q.to_string(), "Q");
  EXPECT_THROW(FieldSpec::parse("Fp:8"), ParseError);
  EXPECT_THROW(FieldSpec::prime(8), DomainError);
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
  EXPECT_THROW(FieldSpec::parse("Fp:"), ParseError);
  EXPECT_THROW(FieldSpec::prime(1), DomainError);
}

TEST(FieldSpec, PrimalityTest) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_TRUE(is_prime(2305843009213693951ULL));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));
  EXPECT_FALSE(is_prime(3215031751ULL));
}

TEST(Scalar, Examples) {
  EXPECT_EQ(q("1/2") + q("1/3"), q("5/6"));
  EXPECT_TRUE((Scalar::one(F2) + Scalar::one(F2)).is_zero());
  EXPECT_EQ(Scalar(F7, 3).inverse(), Scalar(F7, 5));
}

TEST(Scalar, ParseExamples) {
  EXPECT_EQ(Scalar::parse("−3/6", Q), q("-1/2"));
  EXPECT_EQ(Scalar::parse("-3/6", Q).to_string(), "-1/2");
  EXPECT_EQ(Scalar::parse("9", F7), Scalar(F7, 2));
  EXPECT_TRUE(Scalar::parse("0", Q).is_zero());
  EXPECT_EQ(Scalar::parse(" -4 ", F7), Scalar(F7, 3));
}

TEST(Scalar, ParseErrors) {
  EXPECT_THROW(Scalar::parse("1/0", Q), ParseError);
  EXPECT_THROW(Scalar::parse("abc", Q), ParseError);
  EXPECT_THROW(Scalar::parse("", Q), ParseError);
  EXPECT_THROW(Scalar::parse("1/2", F7), ParseError);
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(Scalar::zero(Q).inverse(), DomainError);
  EXPECT_THROW(Scalar(F7, 7).inverse(), DomainError);
  EXPECT_THROW(q("1") / q("0"), DomainError);
}

TEST(Scalar, FieldMismatch) {
  EXPECT_THROW(Scalar::one(Q) + Scalar::one(F7), DomainError);
  EXPECT_FALSE(Scalar::one(Q) == Scalar::one(F7));
}

TEST(Scalar, ResiduesAreCanonical) {
  EXPECT_EQ(Scalar(F7, -1).residue(), 6u);
  EXPECT_EQ(Scalar(F7, 700).residue(), 0u);
  EXPECT_EQ(Scalar(F7, mpq_class(1, 3)), Scalar(F7, 5));
  EXPECT_THROW(Scalar(F7, mpq_class(1, 7)), DomainError);
}

TEST(Scalar, LargePrimeArithmetic) {
  const FieldSpec big = FieldSpec::prime(2305843009213693951ULL);
  const Scalar a(big, 123456789123456789LL);
  EXPECT_EQ(a * a.inverse(), Scalar::one(big));
  EXPECT_EQ(a.pow(big.characteristic()), a);
}

TEST(Scalar, Pow) {
  EXPECT_EQ(q("2/3").pow(3), q("8/27"));
  EXPECT_EQ(q("5").pow(0), q("1"));
}

TEST(ScalarProperties, FieldAxiomsAcrossFields) {
  for (const auto& field : {Q, F2, F7, FieldSpec::prime(1000003)}) {
    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
      const Scalar a = random_scalar(rng, field), b = random_scalar(rng, field), c = random_scalar(rng, field);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_TRUE((a - a).is_zero());
      if (!a.is_zero()) ASSERT_EQ(a / a, Scalar::one(field));
    }
  }
}

TEST(ScalarProperties, ParsePrintRoundTrip) {
  Rng rng(3);
  for (const auto& field : {Q, F7}) {
    for (int k = 0; k < 200; ++k) {
      const Scalar a = random_scalar(rng, field) * random_scalar(rng, field) - random_scalar(rng, field);
      ASSERT_EQ(Scalar::parse(a.to_string(), field), a) << a.to_string();
    }
  }
}

TEST(ScalarProperties, NamedSuites) {
  for (const char* id : {"scalar.field-axioms", "scalar.parse-print", "scalar.fermat"}) {
    const SuiteResult r = run_suite(id, SuiteOptions{5, 100, std::nullopt, std::nullopt});
    EXPECT_EQ(r.failed, 0u) << id;
    EXPECT_EQ(r.passed, 100u) << id;
  }
}
