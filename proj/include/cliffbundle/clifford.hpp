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

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "cliffbundle/forms.hpp"
#include "cliffbundle/tensor.hpp"

namespace cliffbundle {

/// A basis monomial e_{i1} ... e_{ik} with i1 < ... < ik, encoded as the
/// bitmask sum of 2^i (0-based i).
using Blade = std::uint32_t;

Blade blade_of(std::initializer_list<std::size_t> indices);
std::vector<std::size_t> blade_indices(Blade b);
inline std::size_t blade_grade(Blade b) { return static_cast<std::size_t>(__builtin_popcount(b)); }

/// Fixes the algebra Cl(V, Q). Cheap to copy; the form data is shared.
class CliffordContext {
 public:
  explicit CliffordContext(QuadraticForm q);
  /// The exterior algebra (Q = 0).
  static CliffordContext exterior(const AlgebraContext& base);

  const AlgebraContext& base() const { return data_->q.ctx(); }
  const QuadraticForm& quadratic() const { return data_->q; }
  std::size_t dim() const { return base().dim; }

  /// Same base and the same (diag, polar) data.
  friend bool operator==(const CliffordContext& a, const CliffordContext& b) {
    return a.data_ == b.data_ || a.data_->q == b.data_->q;
  }
  void require_same(const CliffordContext& other) const;

 private:
  struct Data {
    QuadraticForm q;
  };
  std::shared_ptr<const Data> data_;
};

/// An element of Cl(V, Q) in normal form.
class CliffElt {
 public:
  using Terms = std::map<Blade, Scalar>;

  explicit CliffElt(CliffordContext cctx) : cctx_(std::move(cctx)) {}

  static CliffElt unit(const CliffordContext& cctx);
  static CliffElt scalar(const CliffordContext& cctx, const Scalar& s);
  static CliffElt blade(const CliffordContext& cctx, Blade b, const Scalar& coeff);
  static CliffElt blade(const CliffordContext& cctx, Blade b);
  static CliffElt vector(const CliffordContext& cctx, const Vector& x);

  const CliffordContext& cctx() const { return cctx_; }
  const AlgebraContext& base() const { return cctx_.base(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(Blade b) const;

  void add_term(Blade b, const Scalar& c);

  /// Same coefficients, reinterpreted in another algebra over the same space.
  CliffElt with_context(const CliffordContext& other) const;

  CliffElt even_part() const;
  CliffElt odd_part() const;

  CliffElt& operator+=(const CliffElt& rhs);
  CliffElt& operator-=(const CliffElt& rhs);
  friend CliffElt operator+(CliffElt a, const CliffElt& b) { return a += b; }
  friend CliffElt operator-(CliffElt a, const CliffElt& b) { return a -= b; }
  CliffElt operator-() const;
  friend CliffElt operator*(const Scalar& s, const CliffElt& u);
  friend bool operator==(const CliffElt& a, const CliffElt& b) { return a.cctx_ == b.cctx_ && a.terms_ == b.terms_; }

 private:
  CliffordContext cctx_;
  Terms terms_;
};

/// An element of the exterior algebra of V*, on the same subset basis.
class DualElt {
 public:
  using Terms = std::map<Blade, Scalar>;

  explicit DualElt(const AlgebraContext& ctx) : ctx_(ctx) {}
  static DualElt unit(const AlgebraContext& ctx);
  static DualElt blade(const AlgebraContext& ctx, Blade b, const Scalar& coeff);
  static DualElt linear(const LinearForm& f);
  /// The two-form sum c_ij e_i* ^ e_j*.
  static DualElt two_form(const DualTwoForm& astar);

  const AlgebraContext& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  void add_term(Blade b, const Scalar& c);

  DualElt& operator+=(const DualElt& rhs);
  friend DualElt operator+(DualElt a, const DualElt& b) { return a += b; }
  friend bool operator==(const DualElt& a, const DualElt& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

 private:
  AlgebraContext ctx_;
  Terms terms_;
};

DualElt wedge(const DualElt& a, const DualElt& b);

/// The canonical projection T(V) -> Cl(V, Q).
CliffElt pi_Q(const CliffordContext& cctx, const TensorElt& u);
/// The product of Cl(V, Q), normal ordered with e_j e_i -> Phi(e_i, e_j) - e_i e_j
/// (i < j) and e_i e_i -> Q(e_i).
CliffElt cl_mul(const CliffElt& u, const CliffElt& v);
/// Left multiplication by a vector.
CliffElt cl_apply_e(const Vector& x, const CliffElt& w);
/// The descended antiderivation i_f.
CliffElt cl_apply_i(const LinearForm& f, const CliffElt& w);
/// i_x^F on Cl(V, Q).
CliffElt cl_apply_iF(const BilinearForm& f, const Vector& x, const CliffElt& w);

/// Throws DomainError unless source.Q = target.Q + Q_F.
void require_deformation(const BilinearForm& f, const CliffordContext& source, const CliffordContext& target);

/// bl_F : Cl(Q') -> Cl(Q) for Q' = Q + Q_F. `w` must live in `source`.
CliffElt bl_map(const BilinearForm& f, const CliffordContext& source, const CliffordContext& target, const CliffElt& w);
/// bl_F with the source algebra taken from `w` and target Q = Q' - Q_F.
CliffElt bl_map(const BilinearForm& f, const CliffElt& w);
/// bl_{-F} : Cl(Q) -> Cl(Q + Q_F), the inverse of bl_F.
CliffElt bl_inverse(const BilinearForm& f, const CliffElt& w);

/// bL_F(u)(v) with u in Cl(Q + Q_F) and v in Cl(Q).
CliffElt bL_apply(const BilinearForm& f, const CliffElt& u, const CliffElt& v);

/// The product of Cl(Q + Q_F) transported onto Cl(Q) by bl_F.
CliffElt twisted_mul(const BilinearForm& f, const CliffElt& u, const CliffElt& v);

/// The left action of the exterior algebra of V*: i_{f ^ g} = i_f o i_g.
CliffElt interior(const DualElt& ustar, const CliffElt& w);
/// exp(i_{A*})(w), characteristic 0 only.
CliffElt exp_contract(const DualTwoForm& astar, const CliffElt& w);

/// sigma_Q = bl_{Phi/2} : Cl(Q) -> exterior algebra. Characteristic != 2.
CliffElt symbol(const CliffElt& w);
/// q_Q = bl_{-Phi/2} : exterior algebra -> Cl(Q). Characteristic != 2.
CliffElt quantize(const CliffordContext& cctx, const CliffElt& ext);

CliffElt cl_alpha(const CliffElt& w);
CliffElt cl_tau(const CliffElt& w);

}  // namespace cliffbundle
