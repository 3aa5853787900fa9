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

#include "cliffbundle/random.hpp"

namespace cliffbundle {

Scalar random_scalar(Rng& rng, const FieldSpec& field, unsigned zero_percent) {
  if (rng.chance(zero_percent)) return Scalar::zero(field);
  return random_nonzero_scalar(rng, field);
}

Scalar random_nonzero_scalar(Rng& rng, const FieldSpec& field) {
  if (field.is_rational()) {
    long long num = rng.range(1, 3) * (rng.chance(50) ? 1 : -1);
    long long den = rng.range(1, 3);
    return Scalar(field, mpq_class(static_cast<long>(num), static_cast<unsigned long>(den)));
  }
  const std::uint64_t p = field.characteristic();
  return Scalar(field, static_cast<long long>(1 + rng.next() % (p - 1)));
}

Vector random_vector(Rng& rng, const AlgebraContext& ctx) {
  ScalarVec v;
  for (std::size_t i = 0; i < ctx.dim; ++i) v.push_back(random_scalar(rng, ctx.field));
  return Vector(ctx, std::move(v));
}

LinearForm random_linear_form(Rng& rng, const AlgebraContext& ctx) { return LinearForm(ctx, random_vector(rng, ctx).coeffs); }

BilinearForm random_bilinear(Rng& rng, const AlgebraContext& ctx) {
  Matrix m(ctx.field, ctx.dim, ctx.dim);
  for (std::size_t i = 0; i < ctx.dim; ++i) {
    for (std::size_t j = 0; j < ctx.dim; ++j) m(i, j) = random_scalar(rng, ctx.field);
  }
  return BilinearForm(ctx, std::move(m));
}

BilinearForm random_alternating(Rng& rng, const AlgebraContext& ctx) {
  Matrix m(ctx.field, ctx.dim, ctx.dim);
  for (std::size_t i = 0; i < ctx.dim; ++i) {
    for (std::size_t j = i + 1; j < ctx.dim; ++j) {
      m(i, j) = random_scalar(rng, ctx.field);
      m(j, i) = -m(i, j);
    }
  }
  return BilinearForm(ctx, std::move(m));
}

QuadraticForm random_quadratic(Rng& rng, const AlgebraContext& ctx) {
  ScalarVec d;
  Matrix upper(ctx.field, ctx.dim, ctx.dim);
  for (std::size_t i = 0; i < ctx.dim; ++i) {
    d.push_back(random_scalar(rng, ctx.field));
    for (std::size_t j = i + 1; j < ctx.dim; ++j) upper(i, j) = random_scalar(rng, ctx.field);
  }
  return QuadraticForm(ctx, std::move(d), std::move(upper));
}

TensorElt random_tensor(Rng& rng, const AlgebraContext& ctx, std::size_t max_degree, std::size_t max_terms) {
  TensorElt u(ctx);
  const std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    Word w(rng.below(max_degree + 1));
    for (auto& letter : w) letter = static_cast<std::uint8_t>(rng.below(ctx.dim));
    u.add_term(w, random_nonzero_scalar(rng, ctx.field));
  }
  return u;
}

TensorElt random_homogeneous(Rng& rng, const AlgebraContext& ctx, std::size_t degree, std::size_t max_terms) {
  TensorElt u(ctx);
  const std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    Word w(degree);
    for (auto& letter : w) letter = static_cast<std::uint8_t>(rng.below(ctx.dim));
    u.add_term(w, random_nonzero_scalar(rng, ctx.field));
  }
  return u;
}

CliffElt random_cliff(Rng& rng, const CliffordContext& cctx, std::size_t max_terms) {
  CliffElt w(cctx);
  const std::size_t terms = 1 + rng.below(max_terms);
  const Blade limit = Blade{1} << cctx.dim();
  for (std::size_t t = 0; t < terms; ++t) {
    w.add_term(static_cast<Blade>(rng.below(limit)), random_nonzero_scalar(rng, cctx.base().field));
  }
  return w;
}

}  // namespace cliffbundle
