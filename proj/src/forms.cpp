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

#include "cliffbundle/forms.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace cliffbundle {

AlgebraContext::AlgebraContext(std::size_t n, FieldSpec f, std::size_t grade_cap)
    : dim(n), field(f), max_grade(grade_cap) {
  if (n == 0) throw DomainError("vector space dimension must be positive");
  if (n > 31) throw DomainError("vector space dimension above 31 is not supported");
}

void AlgebraContext::require_compatible(const AlgebraContext& other) const {
  if (!(*this == other)) {
    throw DomainError("context mismatch: dim " + std::to_string(dim) + " over " + field.to_string() + " vs dim " +
                      std::to_string(other.dim) + " over " + other.field.to_string());
  }
}

namespace {

void check_vector(const AlgebraContext& ctx, const ScalarVec& v, const char* what) {
  if (v.size() != ctx.dim) throw DomainError(std::string(what) + ": expected " + std::to_string(ctx.dim) + " coefficients");
  for (const auto& s : v) {
    if (!(s.field() == ctx.field)) throw DomainError(std::string(what) + ": coefficient outside " + ctx.field.to_string());
  }
}

void check_square(const AlgebraContext& ctx, const Matrix& m, const char* what) {
  if (m.rows() != ctx.dim || m.cols() != ctx.dim || !(m.field() == ctx.field)) {
    throw DomainError(std::string(what) + ": expected a " + std::to_string(ctx.dim) + "x" + std::to_string(ctx.dim) +
                      " matrix over " + ctx.field.to_string());
  }
}

}  // namespace

Vector::Vector(const AlgebraContext& c, ScalarVec v) : ctx(c), coeffs(std::move(v)) { check_vector(ctx, coeffs, "vector"); }

Vector Vector::basis(const AlgebraContext& c, std::size_t i) {
  ScalarVec v(c.dim, c.zero());
  v.at(i) = c.one();
  return Vector(c, std::move(v));
}

Vector Vector::zero(const AlgebraContext& c) { return Vector(c, ScalarVec(c.dim, c.zero())); }

Vector operator+(const Vector& a, const Vector& b) {
  a.ctx.require_compatible(b.ctx);
  ScalarVec out = a.coeffs;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs[i];
  return Vector(a.ctx, std::move(out));
}

Vector operator*(const Scalar& s, const Vector& a) {
  ScalarVec out = a.coeffs;
  for (auto& c : out) c *= s;
  return Vector(a.ctx, std::move(out));
}

LinearForm::LinearForm(const AlgebraContext& c, ScalarVec v) : ctx(c), coeffs(std::move(v)) {
  check_vector(ctx, coeffs, "linear form");
}

LinearForm LinearForm::dual_basis(const AlgebraContext& c, std::size_t i) {
  ScalarVec v(c.dim, c.zero());
  v.at(i) = c.one();
  return LinearForm(c, std::move(v));
}

Scalar LinearForm::operator()(const Vector& x) const {
  ctx.require_compatible(x.ctx);
  Scalar s = ctx.zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x.coeffs[i];
  return s;
}

BilinearForm::BilinearForm(const AlgebraContext& ctx, Matrix entries) : ctx_(ctx), entries_(std::move(entries)) {
  check_square(ctx_, entries_, "bilinear form");
}

BilinearForm BilinearForm::zero(const AlgebraContext& ctx) {
  return BilinearForm(ctx, Matrix(ctx.field, ctx.dim, ctx.dim));
}

BilinearForm BilinearForm::identity(const AlgebraContext& ctx) {
  return BilinearForm(ctx, Matrix::identity(ctx.field, ctx.dim));
}

Scalar BilinearForm::eval(const Vector& x, const Vector& y) const {
  ctx_.require_compatible(x.ctx);
  ctx_.require_compatible(y.ctx);
  return left_slot(x)(y);
}

LinearForm BilinearForm::left_slot(const Vector& x) const {
  ctx_.require_compatible(x.ctx);
  ScalarVec f(ctx_.dim, ctx_.zero());
  for (std::size_t i = 0; i < ctx_.dim; ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < ctx_.dim; ++j) f[j] += x.coeffs[i] * entries_(i, j);
  }
  return LinearForm(ctx_, std::move(f));
}

LinearForm BilinearForm::left_slot(std::size_t i) const {
  ScalarVec f;
  f.reserve(ctx_.dim);
  for (std::size_t j = 0; j < ctx_.dim; ++j) f.push_back(entries_(i, j));
  return LinearForm(ctx_, std::move(f));
}

BilinearForm BilinearForm::transposed() const { return BilinearForm(ctx_, entries_.transpose()); }

bool BilinearForm::is_symmetric() const { return entries_ == entries_.transpose(); }

bool BilinearForm::is_alternating() const {
  for (std::size_t i = 0; i < ctx_.dim; ++i) {
    if (!entries_(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < ctx_.dim; ++j) {
      if (!(entries_(i, j) + entries_(j, i)).is_zero()) return false;
    }
  }
  return true;
}

BilinearForm BilinearForm::operator-() const { return BilinearForm(ctx_, entries_.scaled(-ctx_.one())); }

BilinearForm operator+(const BilinearForm& a, const BilinearForm& b) {
  a.ctx_.require_compatible(b.ctx_);
  return BilinearForm(a.ctx_, a.entries_ + b.entries_);
}

BilinearForm operator-(const BilinearForm& a, const BilinearForm& b) {
  a.ctx_.require_compatible(b.ctx_);
  return BilinearForm(a.ctx_, a.entries_ - b.entries_);
}

BilinearForm operator*(const Scalar& s, const BilinearForm& a) { return BilinearForm(a.ctx_, a.entries_.scaled(s)); }

QuadraticForm::QuadraticForm(const AlgebraContext& ctx, ScalarVec diag, Matrix polar_upper)
    : ctx_(ctx), diag_(std::move(diag)), upper_(std::move(polar_upper)) {
  check_vector(ctx_, diag_, "quadratic form diagonal");
  check_square(ctx_, upper_, "quadratic form polar part");
  for (std::size_t i = 0; i < ctx_.dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (!upper_(i, j).is_zero()) throw DomainError("quadratic form polar part must be strictly upper triangular");
    }
  }
}

QuadraticForm QuadraticForm::zero(const AlgebraContext& ctx) {
  return QuadraticForm(ctx, ScalarVec(ctx.dim, ctx.zero()), Matrix(ctx.field, ctx.dim, ctx.dim));
}

QuadraticForm QuadraticForm::diagonal(const AlgebraContext& ctx, ScalarVec d) {
  return QuadraticForm(ctx, std::move(d), Matrix(ctx.field, ctx.dim, ctx.dim));
}

Scalar QuadraticForm::polar(std::size_t i, std::size_t j) const {
  if (i == j) return diag_[i] + diag_[i];
  return i < j ? upper_(i, j) : upper_(j, i);
}

bool QuadraticForm::is_zero() const {
  for (const auto& d : diag_) {
    if (!d.is_zero()) return false;
  }
  return upper_.is_zero();
}

QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
  a.ctx_.require_compatible(b.ctx_);
  ScalarVec d = a.diag_;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += b.diag_[i];
  return QuadraticForm(a.ctx_, std::move(d), a.upper_ + b.upper_);
}

QuadraticForm QuadraticForm::operator-() const {
  ScalarVec d = diag_;
  for (auto& x : d) x = -x;
  return QuadraticForm(ctx_, std::move(d), upper_.scaled(-ctx_.one()));
}

DualTwoForm::DualTwoForm(const AlgebraContext& c, Matrix upper) : ctx(c), coeffs(std::move(upper)) {
  check_square(ctx, coeffs, "dual two-form");
  for (std::size_t i = 0; i < ctx.dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (!coeffs(i, j).is_zero()) throw DomainError("dual two-form coefficients must be strictly upper triangular");
    }
  }
}

DualTwoForm DualTwoForm::operator-() const { return DualTwoForm(ctx, coeffs.scaled(-ctx.one())); }

BilinearForm polar_form(const QuadraticForm& q) {
  const auto& ctx = q.ctx();
  Matrix m(ctx.field, ctx.dim, ctx.dim);
  for (std::size_t i = 0; i < ctx.dim; ++i) {
    for (std::size_t j = 0; j < ctx.dim; ++j) m(i, j) = q.polar(i, j);
  }
  return BilinearForm(ctx, std::move(m));
}

QuadraticForm quad_of_bilinear(const BilinearForm& f) {
  const auto& ctx = f.ctx();
  ScalarVec d(ctx.dim, ctx.zero());
  Matrix upper(ctx.field, ctx.dim, ctx.dim);
  for (std::size_t i = 0; i < ctx.dim; ++i) {
    d[i] = f(i, i);
    for (std::size_t j = i + 1; j < ctx.dim; ++j) upper(i, j) = f(i, j) + f(j, i);
  }
  return QuadraticForm(ctx, std::move(d), std::move(upper));
}

Scalar eval_quad(const QuadraticForm& q, std::span<const Scalar> x) {
  const auto& ctx = q.ctx();
  if (x.size() != ctx.dim) throw DomainError("eval_quad: vector length mismatch");
  Scalar s = ctx.zero();
  for (std::size_t i = 0; i < ctx.dim; ++i) {
    if (x[i].is_zero()) continue;
    s += x[i] * x[i] * q.diag(i);
    for (std::size_t j = i + 1; j < ctx.dim; ++j) {
      if (!x[j].is_zero()) s += x[i] * x[j] * q.polar_upper()(i, j);
    }
  }
  return s;
}

Scalar eval_quad(const QuadraticForm& q, const Vector& x) {
  q.ctx().require_compatible(x.ctx);
  return eval_quad(q, std::span<const Scalar>(x.coeffs));
}

BilinearForm bf2_bilinear(const QuadraticForm& q) {
  const auto& ctx = q.ctx();
  Matrix m(ctx.field, ctx.dim, ctx.dim);
  for (std::size_t i = 0; i < ctx.dim; ++i) {
    m(i, i) = q.diag(i);
    for (std::size_t j = i + 1; j < ctx.dim; ++j) m(i, j) = q.polar_upper()(i, j);
  }
  return BilinearForm(ctx, std::move(m));
}

QuadraticForm shifted(const QuadraticForm& q, const BilinearForm& f) { return q + quad_of_bilinear(f); }

std::pair<BilinearForm, BilinearForm> split_sym_alt(const BilinearForm& f) {
  const auto& ctx = f.ctx();
  if (ctx.field.characteristic() == 2) {
    throw DomainError("symmetric/alternating split needs 1/2, unavailable in characteristic 2");
  }
  Scalar half = ctx.scalar(2).inverse();
  BilinearForm ft = f.transposed();
  return {half * (f + ft), half * (f - ft)};
}

Scalar pfaffian(const BilinearForm& a) {
  const auto& ctx = a.ctx();
  if (ctx.dim % 2 != 0) throw DomainError("Pfaffian requires even dimension");
  if (!a.is_alternating()) throw DomainError("Pfaffian requires an alternating form");

  std::unordered_map<std::uint32_t, Scalar> memo;
  // Pf of the principal submatrix on the index set `rest`.
  auto pf = [&](auto&& self, std::uint32_t rest) -> Scalar {
    if (rest == 0) return ctx.one();
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    const auto first = static_cast<std::size_t>(std::countr_zero(rest));
    std::uint32_t others = rest & (rest - 1);
    Scalar total = ctx.zero();
    bool positive = true;
    for (std::uint32_t bits = others; bits != 0; bits &= bits - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(bits));
      if (!a(first, j).is_zero()) {
        Scalar term = a(first, j) * self(self, others & ~(1U << j));
        total += positive ? term : -term;
      }
      positive = !positive;
    }
    memo.emplace(rest, total);
    return total;
  };
  return pf(pf, ctx.dim == 32 ? ~0U : (1U << ctx.dim) - 1);
}

Scalar determinant(const BilinearForm& f) { return determinant(f.entries()); }

std::vector<Vector> right_radical(const BilinearForm& g) {
  std::vector<Vector> out;
  for (auto& v : nullspace(g.entries())) out.emplace_back(g.ctx(), std::move(v));
  return out;
}

DualTwoForm dual_two_form(const BilinearForm& a) {
  if (!a.is_alternating()) throw DomainError("dual_two_form requires an alternating form");
  const auto& ctx = a.ctx();
  Matrix c(ctx.field, ctx.dim, ctx.dim);
  for (std::size_t i = 0; i < ctx.dim; ++i) {
    for (std::size_t j = i + 1; j < ctx.dim; ++j) c(i, j) = -a(i, j);
  }
  return DualTwoForm(ctx, std::move(c));
}

BilinearForm alt_of_dual(const DualTwoForm& astar) {
  const auto& ctx = astar.ctx;
  Matrix m(ctx.field, ctx.dim, ctx.dim);
  for (std::size_t i = 0; i < ctx.dim; ++i) {
    for (std::size_t j = i + 1; j < ctx.dim; ++j) {
      m(i, j) = -astar.coeffs(i, j);
      m(j, i) = astar.coeffs(i, j);
    }
  }
  return BilinearForm(ctx, std::move(m));
}

}  // namespace cliffbundle
