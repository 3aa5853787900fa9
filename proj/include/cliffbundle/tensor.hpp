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
#include <map>
#include <vector>

#include "cliffbundle/forms.hpp"

namespace cliffbundle {

/// A basis tensor e_{w0} (x) e_{w1} (x) ... with 0-based letters.
using Word = std::vector<std::uint8_t>;

/// An element of the tensor algebra T(V): a sparse map from words to nonzero
/// coefficients. The empty word is the unit.
class TensorElt {
 public:
  using Terms = std::map<Word, Scalar>;

  explicit TensorElt(const AlgebraContext& ctx) : ctx_(ctx) {}

  static TensorElt unit(const AlgebraContext& ctx);
  static TensorElt scalar(const AlgebraContext& ctx, const Scalar& s);
  static TensorElt word(const AlgebraContext& ctx, Word w, const Scalar& coeff);
  static TensorElt word(const AlgebraContext& ctx, Word w);
  static TensorElt vector(const Vector& x);

  const AlgebraContext& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Word& w) const;
  /// Longest word length, or -1 for the zero element.
  long max_grade() const;

  /// Adds c * w, dropping the term when the coefficient cancels.
  void add_term(const Word& w, const Scalar& c);

  TensorElt& operator+=(const TensorElt& rhs);
  TensorElt& operator-=(const TensorElt& rhs);
  friend TensorElt operator+(TensorElt a, const TensorElt& b) { return a += b; }
  friend TensorElt operator-(TensorElt a, const TensorElt& b) { return a -= b; }
  TensorElt operator-() const;
  friend TensorElt operator*(const Scalar& s, const TensorElt& u);
  friend bool operator==(const TensorElt& a, const TensorElt& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

 private:
  AlgebraContext ctx_;
  Terms terms_;
};

TensorElt t_add(const TensorElt& u, const TensorElt& v);
TensorElt t_scale(const Scalar& s, const TensorElt& u);
/// Concatenation product; throws DomainError when a word would exceed ctx.max_grade.
TensorElt t_mul(const TensorElt& u, const TensorElt& v);

/// e_x(u) = x (x) u.
TensorElt apply_e(const Vector& x, const TensorElt& u);
/// The antiderivation i_f: i_f(1) = 0, i_f(x (x) u) = f(x) u - x (x) i_f(u).
TensorElt apply_i(const LinearForm& f, const TensorElt& u);
/// i_x^F = i_f with f(y) = F(x, y).
TensorElt apply_iF(const BilinearForm& f, const Vector& x, const TensorElt& u);

/// Lambda_F(u)(v): the homomorphism extending x -> e_x + i_x^F, applied to v.
TensorElt lambda_big(const BilinearForm& f, const TensorElt& u, const TensorElt& v);
/// lambda_F(u) = Lambda_F(u)(1), via lambda_F(x (x) u) = x (x) lambda_F(u) + i_x^F(lambda_F(u)).
TensorElt lambda_map(const BilinearForm& f, const TensorElt& u);
/// a_k^F: the part of lambda_F made of exactly k contractions.
TensorElt divided_power(const BilinearForm& f, std::size_t k, const TensorElt& u);

/// Main involution: (-1)^p on grade p.
TensorElt alpha(const TensorElt& u);
/// Main anti-involution: word reversal.
TensorElt tau(const TensorElt& u);
TensorElt grade_project(const TensorElt& u, std::size_t p);

}  // namespace cliffbundle
