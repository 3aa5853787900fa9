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
#include <span>
#include <utility>
#include <vector>

#include "cliffbundle/matrix.hpp"
#include "cliffbundle/scalar.hpp"

namespace cliffbundle {

/// A based vector space V = K^n. Indices are 0-based internally; the JSON
/// surface uses 1-based indices.
struct AlgebraContext {
  std::size_t dim = 1;
  FieldSpec field;
  /// Longest tensor word any operation may produce.
  std::size_t max_grade = 16;

  AlgebraContext() = default;
  AlgebraContext(std::size_t n, FieldSpec f, std::size_t grade_cap = 16);

  Scalar zero() const { return Scalar::zero(field); }
  Scalar one() const { return Scalar::one(field); }
  Scalar scalar(long long v) const { return Scalar(field, v); }

  /// Throws DomainError unless `other` has the same dimension and field.
  void require_compatible(const AlgebraContext& other) const;

  friend bool operator==(const AlgebraContext& a, const AlgebraContext& b) {
    return a.dim == b.dim && a.field == b.field;
  }
};

/// A vector of V given by its coefficients in the fixed basis.
struct Vector {
  AlgebraContext ctx;
  ScalarVec coeffs;

  Vector(const AlgebraContext& c, ScalarVec v);
  static Vector basis(const AlgebraContext& c, std::size_t i);
  static Vector zero(const AlgebraContext& c);

  friend bool operator==(const Vector&, const Vector&) = default;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& a);

/// f in V*, stored as f(e_i).
struct LinearForm {
  AlgebraContext ctx;
  ScalarVec coeffs;

  LinearForm(const AlgebraContext& c, ScalarVec v);
  static LinearForm dual_basis(const AlgebraContext& c, std::size_t i);
  Scalar operator()(const Vector& x) const;
};

/// F(e_i, e_j) stored as an n x n matrix.
class BilinearForm {
 public:
  BilinearForm(const AlgebraContext& ctx, Matrix entries);
  static BilinearForm zero(const AlgebraContext& ctx);
  static BilinearForm identity(const AlgebraContext& ctx);

  const AlgebraContext& ctx() const { return ctx_; }
  const Matrix& entries() const { return entries_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  Scalar eval(const Vector& x, const Vector& y) const;
  /// The linear form y -> F(x, y).
  LinearForm left_slot(const Vector& x) const;
  /// The linear form y -> F(e_i, y).
  LinearForm left_slot(std::size_t i) const;

  BilinearForm transposed() const;
  bool is_symmetric() const;
  /// F(e_i, e_i) = 0 and F(e_i, e_j) = -F(e_j, e_i); equivalent to F(x, x) = 0 for all x.
  bool is_alternating() const;

  BilinearForm operator-() const;
  friend BilinearForm operator+(const BilinearForm& a, const BilinearForm& b);
  friend BilinearForm operator-(const BilinearForm& a, const BilinearForm& b);
  friend BilinearForm operator*(const Scalar& s, const BilinearForm& a);
  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.ctx_ == b.ctx_ && a.entries_ == b.entries_;
  }

 private:
  AlgebraContext ctx_;
  Matrix entries_;
};

/// A quadratic form stored as Q(e_i) together with the polar values
/// Phi(e_i, e_j) for i < j. This data determines Q in every characteristic.
class QuadraticForm {
 public:
  /// `polar_upper` is n x n; only entries with i < j are read, the rest must be zero.
  QuadraticForm(const AlgebraContext& ctx, ScalarVec diag, Matrix polar_upper);
  static QuadraticForm zero(const AlgebraContext& ctx);
  /// Q(e_i) = d_i with vanishing polar form off the diagonal.
  static QuadraticForm diagonal(const AlgebraContext& ctx, ScalarVec d);

  const AlgebraContext& ctx() const { return ctx_; }
  const Scalar& diag(std::size_t i) const { return diag_[i]; }
  const ScalarVec& diag() const { return diag_; }
  /// Phi(e_i, e_j) for any i, j; Phi(e_i, e_i) = 2 Q(e_i).
  Scalar polar(std::size_t i, std::size_t j) const;
  const Matrix& polar_upper() const { return upper_; }
  bool is_zero() const;

  friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b);
  QuadraticForm operator-() const;
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.ctx_ == b.ctx_ && a.diag_ == b.diag_ && a.upper_ == b.upper_;
  }

 private:
  AlgebraContext ctx_;
  ScalarVec diag_;
  Matrix upper_;
};

/// A* in the second exterior power of V*, as the coefficients c_ij (i < j) of
/// e_i* ^ e_j*.
struct DualTwoForm {
  AlgebraContext ctx;
  Matrix coeffs;

  DualTwoForm(const AlgebraContext& c, Matrix upper);
  DualTwoForm operator-() const;
  friend bool operator==(const DualTwoForm& a, const DualTwoForm& b) {
    return a.ctx == b.ctx && a.coeffs == b.coeffs;
  }
};

BilinearForm polar_form(const QuadraticForm& q);
QuadraticForm quad_of_bilinear(const BilinearForm& f);
Scalar eval_quad(const QuadraticForm& q, std::span<const Scalar> x);
Scalar eval_quad(const QuadraticForm& q, const Vector& x);
/// Upper-triangular F with F(x, x) = Q(x), valid in every characteristic.
BilinearForm bf2_bilinear(const QuadraticForm& q);
/// Q + Q_F.
QuadraticForm shifted(const QuadraticForm& q, const BilinearForm& f);

/// (g, A) with g symmetric, A alternating, F = g + A. Characteristic != 2.
std::pair<BilinearForm, BilinearForm> split_sym_alt(const BilinearForm& f);

/// Pfaffian of an alternating form of even dimension, by memoized expansion
/// along the first row.
Scalar pfaffian(const BilinearForm& a);
Scalar determinant(const BilinearForm& f);

/// Basis of { w : F(v, w) = 0 for all v }.
std::vector<Vector> right_radical(const BilinearForm& g);

/// The pairing <f ^ g, x ^ y> = g(x) f(y) - f(x) g(y) makes e_i* ^ e_j* (i < j)
/// the alternating form with A(e_i, e_j) = -1, so c_ij = -A(e_i, e_j).
DualTwoForm dual_two_form(const BilinearForm& a);
BilinearForm alt_of_dual(const DualTwoForm& astar);

}  // namespace cliffbundle
