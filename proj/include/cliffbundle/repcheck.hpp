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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliffbundle/clifford.hpp"
#include "cliffbundle/matrix.hpp"

namespace cliffbundle {

/// Largest dimension for which 2^n x 2^n matrices are materialized.
inline constexpr std::size_t kMaxRepDim = 12;

/// An endomorphism of the exterior algebra of V in the subset basis. Row and
/// column k correspond to the subset S with k = sum over i in S of 2^i
/// (0-based i), i.e. the Blade encoding.
struct EndoMatrix {
  AlgebraContext ctx;
  Matrix entries;
};

/// Coefficients of w indexed by blade bitmask.
ScalarVec coordinates(const CliffElt& w);
CliffElt from_coordinates(const CliffordContext& cctx, std::span<const Scalar> coords);

/// Matrix of a linear map of the exterior algebra of V.
EndoMatrix endomorphism_matrix(const AlgebraContext& ctx, const std::function<CliffElt(const CliffElt&)>& map);

/// rho_F(u) = bL_F(u) acting on the exterior algebra; u must live in Cl(Q_F).
EndoMatrix rho_matrix(const BilinearForm& f, const CliffElt& u);
/// Matrix of bl_A on the exterior algebra, for alternating A.
EndoMatrix bl_matrix(const BilinearForm& a);

struct EquivalenceFailure {
  std::size_t sample = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar lhs;
  Scalar rhs;
};

struct EquivalenceReport {
  std::string identity;
  std::size_t samples = 0;
  std::vector<EquivalenceFailure> failures;
  std::optional<std::uint64_t> seed;

  bool passed() const { return failures.empty(); }
};

/// Checks rho_{F+A}(a) M_A = M_A rho_F(a) for every sample, M_A the matrix of bl_A.
EquivalenceReport check_equivalence(const BilinearForm& f, const BilinearForm& a, std::span<const CliffElt> samples);

/// Smallest subspace containing `seeds` and stable under every matrix.
std::vector<ScalarVec> spin(std::span<const Matrix> mats, std::span<const ScalarVec> seeds);
/// True when span(basis) is stable under every matrix.
bool is_invariant(std::span<const Matrix> mats, std::span<const ScalarVec> basis);
/// Matrices of the actions restricted to the invariant subspace span(basis),
/// in the coordinates of `basis`.
std::vector<Matrix> restrict_to(std::span<const Matrix> mats, std::span<const ScalarVec> basis);
/// Basis of { X : X M = M X for all M }.
std::vector<Matrix> commutant(std::span<const Matrix> mats);

/// The left ideal Cl(Q_F) e, realized inside the exterior algebra through
/// rho_F (it is the orbit of bl_F(e)).
std::vector<ScalarVec> left_ideal_basis(const BilinearForm& f, const CliffElt& idempotent);

struct InvariantSubspace {
  std::size_t dim = 0;
  std::string method;
  std::vector<ScalarVec> basis;
};

/// Outcome of a randomized search. An empty `dims` list means none were found;
/// it does not certify irreducibility.
struct ProbeReport {
  std::uint64_t seed = 0;
  std::size_t module_dim = 0;
  std::vector<std::size_t> dims;
  std::vector<InvariantSubspace> witnesses;
};

/// Searches for proper nonzero subspaces stable under all `mats`: spins
/// vectors (flags of basis vectors, random vectors, kernel vectors of random
/// algebra elements), inspects kernels and eigenspaces of commutant elements,
/// and repeats on the transposes taking annihilators.
ProbeReport invariant_probe(std::span<const Matrix> mats, std::uint64_t seed);
ProbeReport invariant_probe(std::span<const EndoMatrix> mats, std::uint64_t seed);

}  // namespace cliffbundle
