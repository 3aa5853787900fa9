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
#include "cliffbundle/clifford.hpp"
#include "cliffbundle/error.hpp"
#include "cliffbundle/random.hpp"
#include "oracles.hpp"

using namespace cliffbundle;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F7 = FieldSpec::prime(7);

QuadraticForm quad(const AlgebraContext& ctx, std::vector<long long> diag, long long phi12 = 0) {
  ScalarVec d;
  for (long long x : diag) d.push_back(ctx.scalar(x));
  Matrix upper(ctx.field, ctx.dim, ctx.dim);
  if (ctx.dim > 1) upper(0, 1) = ctx.scalar(phi12);
  return QuadraticForm(ctx, d, upper);
}

BilinearForm upper_form(const AlgebraContext& ctx, long long f12) {
  Matrix m(ctx.field, ctx.dim, ctx.dim);
  m(0, 1) = ctx.scalar(f12);
  return BilinearForm(ctx, m);
}

CliffElt blade(const CliffordContext& c, std::initializer_list<std::size_t> idx, long long coeff = 1) {
  return CliffElt::blade(c, blade_of(idx), c.base().scalar(coeff));
}

TensorElt word(const AlgebraContext& ctx, Word w) { return TensorElt::word(ctx, std::move(w)); }

// Lifts a Clifford element to T(V) along ascending words.
TensorElt lift(const CliffElt& w) {
  TensorElt out(w.base());
  for (const auto& [b, c] : w.terms()) {
    Word letters;
    for (auto i : blade_indices(b)) letters.push_back(static_cast<std::uint8_t>(i));
    out.add_term(letters, c);
  }
  return out;
}

}  // namespace

TEST(Clifford, BladeHelpers) {
  EXPECT_EQ(blade_of({0, 2}), 5u);
  EXPECT_EQ(blade_indices(6), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(blade_grade(7), 3u);
}

TEST(Clifford, ProjectionExamples) {
  const AlgebraContext ctx(2, Q);
  const CliffordContext c(quad(ctx, {1, 1}));
  EXPECT_EQ(pi_Q(c, word(ctx, {0, 0})), CliffElt::unit(c));
  EXPECT_EQ(pi_Q(c, word(ctx, {1, 0})), -blade(c, {0, 1}));
  const CliffordContext c5(quad(ctx, {1, 1}, 5));
  EXPECT_EQ(pi_Q(c5, word(ctx, {1, 0})), ctx.scalar(5) * CliffElt::unit(c5) - blade(c5, {0, 1}));
}

TEST(Clifford, ProductExamples) {
  const AlgebraContext ctx(2, Q);
  const CliffordContext c(quad(ctx, {3, 1}, 4));
  EXPECT_EQ(cl_mul(blade(c, {0}), blade(c, {0})), ctx.scalar(3) * CliffElt::unit(c));
  EXPECT_EQ(cl_mul(blade(c, {0}), blade(c, {1})), blade(c, {0, 1}));
  const CliffordContext d(quad(ctx, {1, 1}));
  EXPECT_EQ(cl_mul(blade(d, {1}), blade(d, {0})), -blade(d, {0, 1}));
  EXPECT_THROW(cl_mul(blade(c, {0}), blade(d, {0})), DomainError);
}

TEST(Clifford, InteriorExamples) {
  const AlgebraContext ctx(2, Q);
  const CliffordContext c(quad(ctx, {2, 1}, 1));
  EXPECT_TRUE(cl_apply_i(LinearForm::dual_basis(ctx, 0), CliffElt::unit(c)).is_zero());
  EXPECT_EQ(cl_apply_i(LinearForm::dual_basis(ctx, 0), blade(c, {0, 1})), blade(c, {1}));
  EXPECT_EQ(cl_apply_i(LinearForm::dual_basis(ctx, 1), blade(c, {0, 1})), -blade(c, {0}));
  const CliffElt w = blade(c, {0, 1}, 3) + blade(c, {1});
  EXPECT_EQ(interior(DualElt::unit(ctx), w), w);
  const DualElt pair = wedge(DualElt::linear(LinearForm::dual_basis(ctx, 0)), DualElt::linear(LinearForm::dual_basis(ctx, 1)));
  EXPECT_EQ(interior(pair, blade(c, {0, 1})), -CliffElt::unit(c));
}

TEST(Clifford, ContractionIdentityWithTwoForm) {
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const AlgebraContext ctx(1 + rng.below(4), trial % 2 ? Q : F7);
    const CliffordContext c(random_quadratic(rng, ctx));
    const BilinearForm a = random_alternating(rng, ctx);
    const DualElt astar = DualElt::two_form(dual_two_form(a));
    const Vector x = random_vector(rng, ctx);
    const CliffElt u = random_cliff(rng, c, 4);
    ASSERT_EQ(interior(astar, cl_apply_e(x, u)), cl_apply_e(x, interior(astar, u)) + cl_apply_iF(a, x, u));
  }
}

TEST(Clifford, BlExamples) {
  const AlgebraContext ctx(3, Q);
  Rng rng(6);
  const CliffordContext c(random_quadratic(rng, ctx));
  const CliffElt w = random_cliff(rng, c, 6);
  EXPECT_EQ(bl_map(BilinearForm::zero(ctx), c, c, w), w);

  const BilinearForm f = upper_form(ctx, 7);
  const CliffordContext target(quad(ctx, {1, 2, 3}));
  const CliffordContext source(shifted(target.quadratic(), f));
  const CliffElt product = cl_mul(blade(source, {0}), blade(source, {1}));
  EXPECT_EQ(bl_map(f, source, target, product), blade(target, {0, 1}) + ctx.scalar(7) * CliffElt::unit(target));

  Matrix lower(Q, 3, 3);
  lower(1, 0) = ctx.scalar(4);
  lower(2, 1) = ctx.scalar(-2);
  lower(1, 1) = ctx.scalar(5);
  const BilinearForm g(ctx, lower);
  const CliffordContext src(shifted(target.quadratic(), g));
  EXPECT_EQ(bl_map(g, src, target, blade(src, {0, 1, 2})), blade(target, {0, 1, 2}));
}

TEST(Clifford, BlRequiresMatchingForms) {
  const AlgebraContext ctx(2, Q);
  const CliffordContext c(quad(ctx, {1, 1}));
  EXPECT_THROW(bl_map(upper_form(ctx, 1), c, c, blade(c, {0})), DomainError);
  EXPECT_THROW(bL_apply(upper_form(ctx, 1), blade(c, {0}), CliffElt::unit(c)), DomainError);
}

TEST(Clifford, BigLExamples) {
  Rng rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const AlgebraContext ctx(1 + rng.below(4), trial % 3 == 0 ? F2 : Q);
    const CliffordContext target(random_quadratic(rng, ctx));
    const BilinearForm f = random_bilinear(rng, ctx);
    const CliffordContext source(shifted(target.quadratic(), f));
    const CliffElt v = random_cliff(rng, target, 5);
    ASSERT_EQ(bL_apply(f, CliffElt::unit(source), v), v);
    const Vector x = random_vector(rng, ctx);
    ASSERT_EQ(bL_apply(f, CliffElt::vector(source, x), CliffElt::unit(target)), CliffElt::vector(target, x));
    const CliffElt xx = CliffElt::vector(source, x);
    ASSERT_EQ(bL_apply(f, xx, bL_apply(f, xx, v)), eval_quad(source.quadratic(), x) * v);
  }
}

TEST(Clifford, TwistedExamples) {
  Rng rng(16);
  const AlgebraContext ctx(3, Q);
  const CliffordContext c(random_quadratic(rng, ctx));
  const BilinearForm f = random_bilinear(rng, ctx);
  const Vector x = random_vector(rng, ctx);
  const CliffElt cx = CliffElt::vector(c, x);
  EXPECT_EQ(twisted_mul(f, cx, cx), (eval_quad(c.quadratic(), x) + f.eval(x, x)) * CliffElt::unit(c));
  const CliffElt u = random_cliff(rng, c, 4), v = random_cliff(rng, c, 4);
  EXPECT_EQ(twisted_mul(BilinearForm::zero(ctx), u, v), cl_mul(u, v));
  const auto ext = CliffordContext::exterior(ctx);
  EXPECT_EQ(twisted_mul(upper_form(ctx, 9), blade(ext, {0}), blade(ext, {1})),
            blade(ext, {0, 1}) + ctx.scalar(9) * CliffElt::unit(ext));
}

TEST(Clifford, TwistedMatchesDefinition) {
  Rng rng(18);
  for (int trial = 0; trial < 30; ++trial) {
    const AlgebraContext ctx(1 + rng.below(4), trial % 2 ? F7 : Q);
    const CliffordContext c(random_quadratic(rng, ctx));
    const BilinearForm f = random_bilinear(rng, ctx);
    const CliffordContext shifted_ctx(shifted(c.quadratic(), f));
    const CliffElt u = random_cliff(rng, c, 4), v = random_cliff(rng, c, 4);
    const CliffElt literal =
        bl_map(f, shifted_ctx, c, cl_mul(bl_map(-f, c, shifted_ctx, u), bl_map(-f, c, shifted_ctx, v)));
    ASSERT_EQ(twisted_mul(f, u, v), literal);
  }
}

TEST(Clifford, ExpContractExamples) {
  const AlgebraContext ctx(2, Q);
  const auto ext = CliffordContext::exterior(ctx);
  Matrix m(Q, 2, 2);
  m(0, 1) = ctx.scalar(3);
  m(1, 0) = ctx.scalar(-3);
  const BilinearForm a(ctx, m);
  const DualTwoForm astar = dual_two_form(a);
  EXPECT_EQ(exp_contract(astar, CliffElt::unit(ext)), CliffElt::unit(ext));
  EXPECT_EQ(exp_contract(astar, blade(ext, {0, 1})), blade(ext, {0, 1}) + ctx.scalar(3) * CliffElt::unit(ext));
  const AlgebraContext c7(2, F7);
  EXPECT_THROW(exp_contract(DualTwoForm(c7, Matrix(F7, 2, 2)), CliffElt::unit(CliffordContext::exterior(c7))),
               DomainError);
}

TEST(Clifford, ExpContractEqualsBl) {
  Rng rng(19);
  const AlgebraContext ctx(4, Q);
  for (int trial = 0; trial < 25; ++trial) {
    const BilinearForm a = random_alternating(rng, ctx);
    const CliffordContext c(random_quadratic(rng, ctx));
    const CliffElt w = random_cliff(rng, c, 6);
    ASSERT_EQ(exp_contract(dual_two_form(a), w), bl_map(a, c, c, w));
  }
}

TEST(Clifford, SymbolExamples) {
  const AlgebraContext ctx(3, Q);
  Rng rng(20);
  const CliffordContext c(random_quadratic(rng, ctx));
  const auto ext = CliffordContext::exterior(ctx);
  EXPECT_EQ(symbol(blade(c, {1})), blade(ext, {1}));
  const CliffordContext diag(quad(AlgebraContext(2, Q), {1, 1}));
  EXPECT_EQ(symbol(blade(diag, {0, 1})), blade(CliffordContext::exterior(AlgebraContext(2, Q)), {0, 1}));
  for (int trial = 0; trial < 20; ++trial) {
    const Vector y1 = random_vector(rng, ctx), y2 = random_vector(rng, ctx);
    const CliffElt wedge = cl_mul(CliffElt::vector(ext, y1), CliffElt::vector(ext, y2));
    const CliffElt a = CliffElt::vector(c, y1), b = CliffElt::vector(c, y2);
    ASSERT_EQ(ctx.scalar(2) * quantize(c, wedge), cl_mul(a, b) - cl_mul(b, a));
  }
  const CliffordContext c2(quad(AlgebraContext(2, F2), {1, 1}));
  EXPECT_THROW(symbol(blade(c2, {0})), DomainError);
  EXPECT_THROW(quantize(c2, CliffElt::unit(CliffordContext::exterior(AlgebraContext(2, F2)))), DomainError);
}

TEST(Clifford, Involutions) {
  const AlgebraContext ctx(3, Q);
  Rng rng(22);
  const CliffordContext c(random_quadratic(rng, ctx));
  EXPECT_EQ(cl_alpha(blade(c, {0, 1})), blade(c, {0, 1}));
  EXPECT_EQ(cl_alpha(blade(c, {2})), -blade(c, {2}));
  EXPECT_EQ(cl_tau(blade(c, {0, 1})), pi_Q(c, word(ctx, {1, 0})));
  for (int trial = 0; trial < 30; ++trial) {
    const TensorElt u = random_tensor(rng, ctx, 5, 4);
    ASSERT_EQ(pi_Q(c, tau(u)), cl_tau(pi_Q(c, u)));
    ASSERT_EQ(pi_Q(c, alpha(u)), cl_alpha(pi_Q(c, u)));
  }
}

TEST(CliffordOracle, ProjectionAndProductAgainstRewriting) {
  Rng rng(40);
  for (const auto& field : {Q, F2, F7}) {
    for (int trial = 0; trial < 30; ++trial) {
      const AlgebraContext ctx(1 + rng.below(5), field);
      const CliffordContext c(random_quadratic(rng, ctx));
      const TensorElt u = random_tensor(rng, ctx, 6, 4);
      ASSERT_EQ(pi_Q(c, u), oracle::project(c, u));
      const CliffElt a = random_cliff(rng, c, 4), b = random_cliff(rng, c, 4);
      ASSERT_EQ(cl_mul(a, b), oracle::project(c, t_mul(lift(a), lift(b))));
    }
  }
}

TEST(CliffordOracle, BlAgainstExpansion) {
  Rng rng(41);
  for (const auto& field : {Q, F2, F7}) {
    for (int trial = 0; trial < 30; ++trial) {
      const AlgebraContext ctx(1 + rng.below(5), field);
      const CliffordContext target(random_quadratic(rng, ctx));
      const BilinearForm f = random_bilinear(rng, ctx);
      const CliffordContext source(shifted(target.quadratic(), f));
      const CliffElt w = random_cliff(rng, source, 6);
      ASSERT_EQ(bl_map(f, source, target, w), oracle::bl(f, target, w));
    }
  }
}

TEST(CliffordProperties, NamedSuites) {
  for (const char* id : {"clifford.homomorphism", "clifford.nontrivial", "clifford.quotient-squares",
                         "bl.commutation-square", "bl.group-law", "bL.homomorphism", "twist.associative",
                         "twist.transport", "exp.gauge", "exp.conjugation", "symbol.roundtrip", "symbol.nfac",
                         "char2.bl-suite"}) {
    const SuiteResult r = run_suite(id, SuiteOptions{29, 60, std::nullopt, std::nullopt});
    EXPECT_EQ(r.failed, 0u) << id << ": " << (r.failures.empty() ? "" : r.failures[0].detail);
  }
}
