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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cliffbundle/clifford.hpp"
#include "cliffbundle/forms.hpp"
#include "cliffbundle/tensor.hpp"

namespace cliffbundle {

/// Seeded generator for property checks. Draws use plain modular reduction of
/// mt19937_64 output, which is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  /// Uniform in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

/// Small rationals (numerator in [-3, 3], denominator in {1, 2, 3}) or
/// uniform residues; zero with probability `zero_percent`.
Scalar random_scalar(Rng& rng, const FieldSpec& field, unsigned zero_percent = 20);
Scalar random_nonzero_scalar(Rng& rng, const FieldSpec& field);
Vector random_vector(Rng& rng, const AlgebraContext& ctx);
LinearForm random_linear_form(Rng& rng, const AlgebraContext& ctx);
BilinearForm random_bilinear(Rng& rng, const AlgebraContext& ctx);
BilinearForm random_alternating(Rng& rng, const AlgebraContext& ctx);
QuadraticForm random_quadratic(Rng& rng, const AlgebraContext& ctx);
/// Words of length at most `max_degree`.
TensorElt random_tensor(Rng& rng, const AlgebraContext& ctx, std::size_t max_degree, std::size_t max_terms);
/// Words of length exactly `degree`.
TensorElt random_homogeneous(Rng& rng, const AlgebraContext& ctx, std::size_t degree, std::size_t max_terms);
CliffElt random_cliff(Rng& rng, const CliffordContext& cctx, std::size_t max_terms);

}  // namespace cliffbundle
