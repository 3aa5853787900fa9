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

#include "cliffbundle/clifford.hpp"

#include <bit>

namespace cliffbundle {

namespace {

inline Blade bit(std::size_t i) { return Blade{1} << i; }

// out += c * e_i * e_S, normal ordered in Cl(Q). Walks the lowest indices of
// S that are smaller than i, anticommuting past each one.
void left_generator(const QuadraticForm& q, std::size_t i, Blade s, Scalar c, CliffElt& out) {
  Blade prefix = 0;
  while (true) {
    if (s == 0 || i < static_cast<std::size_t>(std::countr_zero(s))) {
      out.add_term(prefix | bit(i) | s, c);
      return;
    }
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    const Blade rest = s & (s - 1);
    if (low == i) {
      out.add_term(prefix | rest, c * q.diag(i));
      return;
    }
    // e_i e_low = Phi(e_low, e_i) - e_low e_i for low < i
    const Scalar& phi = q.polar_upper()(low, i);
    if (!phi.is_zero()) out.add_term(prefix | rest, c * phi);
    c = -c;
    prefix |= bit(low);
    s = rest;
  }
}

CliffElt left_generator(std::size_t i, const CliffElt& w) {
  CliffElt out(w.cctx());
  const auto& q = w.cctx().quadratic();
  for (const auto& [b, c] : w.terms()) left_generator(q, i, b, c, out);
  return out;
}

void contract_blade(const ScalarVec& f, Blade b, const Scalar& c, CliffElt& out) {
  std::size_t position = 0;
  for (Blade bits = b; bits != 0; bits &= bits - 1, ++position) {
    const auto i = static_cast<std::size_t>(std::countr_zero(bits));
    if (f[i].is_zero()) continue;
    Scalar coeff = c * f[i];
    out.add_term(b & ~bit(i), position % 2 == 0 ? coeff : -coeff);
  }
}

CliffElt contract(const ScalarVec& f, const CliffElt& w) {
  CliffElt out(w.cctx());
  for (const auto& [b, c] : w.terms()) contract_blade(f, b, c, out);
  return out;
}

// (e_a + i_a^F)(w) on the algebra of w.
CliffElt deformed_generator(const BilinearForm& f, std::size_t a, const CliffElt& w) {
  CliffElt out = left_generator(a, w);
  const LinearForm row = f.left_slot(a);
  for (const auto& [b, c] : w.terms()) contract_blade(row.coeffs, b, c, out);
  return out;
}

// bL_F(e_S)(v) for the blade S = e_{s1} ... e_{sk} of Cl(Q + Q_F).
CliffElt deformed_blade(const BilinearForm& f, Blade s, const CliffElt& v) {
  CliffElt acc = v;
  for (Blade bits = s; bits != 0;) {
    const auto top = static_cast<std::size_t>(31 - std::countl_zero(bits));
    acc = deformed_generator(f, top, acc);
    bits &= ~bit(top);
  }
  return acc;
}

void require_char_not_two(const AlgebraContext& ctx, const char* what) {
  if (ctx.field.characteristic() == 2) {
    throw DomainError(std::string(what) + " needs 1/2, unavailable in characteristic 2");
  }
}

}  // namespace

Blade blade_of(std::initializer_list<std::size_t> indices) {
  Blade b = 0;
  for (auto i : indices) b |= bit(i);
  return b;
}

std::vector<std::size_t> blade_indices(Blade b) {
  std::vector<std::size_t> out;
  for (; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

CliffordContext::CliffordContext(QuadraticForm q) : data_(std::make_shared<const Data>(Data{std::move(q)})) {}

CliffordContext CliffordContext::exterior(const AlgebraContext& base) {
  return CliffordContext(QuadraticForm::zero(base));
}

void CliffordContext::require_same(const CliffordContext& other) const {
  base().require_compatible(other.base());
  if (!(*this == other)) throw DomainError("Clifford algebra mismatch: elements belong to different quadratic forms");
}

CliffElt CliffElt::unit(const CliffordContext& cctx) { return blade(cctx, 0); }

CliffElt CliffElt::scalar(const CliffordContext& cctx, const Scalar& s) { return blade(cctx, 0, s); }

CliffElt CliffElt::blade(const CliffordContext& cctx, Blade b, const Scalar& coeff) {
  if (cctx.dim() < 32 && (b >> cctx.dim()) != 0) throw DomainError("blade index outside the basis");
  CliffElt out(cctx);
  out.add_term(b, coeff);
  return out;
}

CliffElt CliffElt::blade(const CliffordContext& cctx, Blade b) { return blade(cctx, b, cctx.base().one()); }

CliffElt CliffElt::vector(const CliffordContext& cctx, const Vector& x) {
  cctx.base().require_compatible(x.ctx);
  CliffElt out(cctx);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) out.add_term(bit(i), x.coeffs[i]);
  return out;
}

Scalar CliffElt::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? base().zero() : it->second;
}

void CliffElt::add_term(Blade b, const Scalar& c) {
  if (c.is_zero()) return;
  if (!(c.field() == base().field)) throw DomainError("coefficient field mismatch");
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffElt CliffElt::with_context(const CliffordContext& other) const {
  base().require_compatible(other.base());
  CliffElt out(other);
  out.terms_ = terms_;
  return out;
}

CliffElt CliffElt::even_part() const {
  CliffElt out(cctx_);
  for (const auto& [b, c] : terms_) {
    if (blade_grade(b) % 2 == 0) out.terms_.emplace(b, c);
  }
  return out;
}

CliffElt CliffElt::odd_part() const {
  CliffElt out(cctx_);
  for (const auto& [b, c] : terms_) {
    if (blade_grade(b) % 2 == 1) out.terms_.emplace(b, c);
  }
  return out;
}

CliffElt& CliffElt::operator+=(const CliffElt& rhs) {
  cctx_.require_same(rhs.cctx_);
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

CliffElt& CliffElt::operator-=(const CliffElt& rhs) {
  cctx_.require_same(rhs.cctx_);
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

CliffElt CliffElt::operator-() const {
  CliffElt out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

CliffElt operator*(const Scalar& s, const CliffElt& u) {
  CliffElt out(u.cctx_);
  for (const auto& [b, c] : u.terms_) out.add_term(b, s * c);
  return out;
}

DualElt DualElt::unit(const AlgebraContext& ctx) { return blade(ctx, 0, ctx.one()); }

DualElt DualElt::blade(const AlgebraContext& ctx, Blade b, const Scalar& coeff) {
  if ((b >> ctx.dim) != 0) throw DomainError("blade index outside the basis");
  DualElt out(ctx);
  out.add_term(b, coeff);
  return out;
}

DualElt DualElt::linear(const LinearForm& f) {
  DualElt out(f.ctx);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) out.add_term(bit(i), f.coeffs[i]);
  return out;
}

DualElt DualElt::two_form(const DualTwoForm& astar) {
  DualElt out(astar.ctx);
  for (std::size_t i = 0; i < astar.ctx.dim; ++i) {
    for (std::size_t j = i + 1; j < astar.ctx.dim; ++j) out.add_term(bit(i) | bit(j), astar.coeffs(i, j));
  }
  return out;
}

void DualElt::add_term(Blade b, const Scalar& c) {
  if (c.is_zero()) return;
  if (!(c.field() == ctx_.field)) throw DomainError("coefficient field mismatch");
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DualElt& DualElt::operator+=(const DualElt& rhs) {
  ctx_.require_compatible(rhs.ctx_);
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

DualElt wedge(const DualElt& a, const DualElt& b) {
  a.ctx().require_compatible(b.ctx());
  DualElt out(a.ctx());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      if ((ba & bb) != 0) continue;
      // Count pairs (i in ba, j in bb) with i > j.
      std::size_t swaps = 0;
      for (Blade bits = bb; bits != 0; bits &= bits - 1) {
        const auto j = static_cast<std::size_t>(std::countr_zero(bits));
        swaps += static_cast<std::size_t>(std::popcount(ba >> (j + 1)));
      }
      Scalar c = ca * cb;
      out.add_term(ba | bb, swaps % 2 == 0 ? c : -c);
    }
  }
  return out;
}

CliffElt pi_Q(const CliffordContext& cctx, const TensorElt& u) {
  cctx.base().require_compatible(u.ctx());
  CliffElt out(cctx);
  for (const auto& [w, c] : u.terms()) {
    CliffElt acc = CliffElt::scalar(cctx, c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = left_generator(*it, acc);
    out += acc;
  }
  return out;
}

CliffElt cl_mul(const CliffElt& u, const CliffElt& v) {
  u.cctx().require_same(v.cctx());
  CliffElt out(u.cctx());
  for (const auto& [b, c] : u.terms()) {
    CliffElt acc = c * v;
    for (Blade bits = b; bits != 0;) {
      const auto top = static_cast<std::size_t>(31 - std::countl_zero(bits));
      acc = left_generator(top, acc);
      bits &= ~bit(top);
    }
    out += acc;
  }
  return out;
}

CliffElt cl_apply_e(const Vector& x, const CliffElt& w) {
  w.base().require_compatible(x.ctx);
  CliffElt out(w.cctx());
  const auto& q = w.cctx().quadratic();
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (const auto& [b, c] : w.terms()) left_generator(q, i, b, x.coeffs[i] * c, out);
  }
  return out;
}

CliffElt cl_apply_i(const LinearForm& f, const CliffElt& w) {
  w.base().require_compatible(f.ctx);
  return contract(f.coeffs, w);
}

CliffElt cl_apply_iF(const BilinearForm& f, const Vector& x, const CliffElt& w) {
  return cl_apply_i(f.left_slot(x), w);
}

void require_deformation(const BilinearForm& f, const CliffordContext& source, const CliffordContext& target) {
  source.base().require_compatible(target.base());
  f.ctx().require_compatible(source.base());
  if (!(source.quadratic() == shifted(target.quadratic(), f))) {
    throw DomainError("quadratic form mismatch: source form is not target form + Q_F");
  }
}

CliffElt bl_map(const BilinearForm& f, const CliffordContext& source, const CliffordContext& target, const CliffElt& w) {
  require_deformation(f, source, target);
  w.cctx().require_same(source);
  CliffElt out(target);
  const CliffElt one = CliffElt::unit(target);
  for (const auto& [b, c] : w.terms()) out += c * deformed_blade(f, b, one);
  return out;
}

CliffElt bl_map(const BilinearForm& f, const CliffElt& w) {
  CliffordContext target(shifted(w.cctx().quadratic(), -f));
  return bl_map(f, w.cctx(), target, w);
}

CliffElt bl_inverse(const BilinearForm& f, const CliffElt& w) { return bl_map(-f, w); }

CliffElt bL_apply(const BilinearForm& f, const CliffElt& u, const CliffElt& v) {
  require_deformation(f, u.cctx(), v.cctx());
  CliffElt out(v.cctx());
  for (const auto& [b, c] : u.terms()) out += c * deformed_blade(f, b, v);
  return out;
}

CliffElt twisted_mul(const BilinearForm& f, const CliffElt& u, const CliffElt& v) {
  u.cctx().require_same(v.cctx());
  // u o_F v = bl_F(bl_{-F}(u) bl_{-F}(v)) = bL_F(bl_{-F}(u))(v).
  return bL_apply(f, bl_inverse(f, u), v);
}

CliffElt interior(const DualElt& ustar, const CliffElt& w) {
  w.base().require_compatible(ustar.ctx());
  CliffElt out(w.cctx());
  const std::size_t n = w.base().dim;
  for (const auto& [b, c] : ustar.terms()) {
    CliffElt acc = c * w;
    for (Blade bits = b; bits != 0 && !acc.is_zero();) {
      const auto top = static_cast<std::size_t>(31 - std::countl_zero(bits));
      ScalarVec f(n, w.base().zero());
      f[top] = w.base().one();
      acc = contract(f, acc);
      bits &= ~bit(top);
    }
    out += acc;
  }
  return out;
}

CliffElt exp_contract(const DualTwoForm& astar, const CliffElt& w) {
  if (!w.base().field.is_rational()) {
    throw DomainError("exp_contract needs characteristic 0; use bl_map with alt_of_dual(A*) instead");
  }
  w.base().require_compatible(astar.ctx);
  const DualElt two = DualElt::two_form(astar);
  CliffElt total = w;
  CliffElt term = w;
  for (long k = 1; !term.is_zero(); ++k) {
    term = w.base().scalar(k).inverse() * interior(two, term);
    total += term;
  }
  return total;
}

CliffElt symbol(const CliffElt& w) {
  const auto& ctx = w.base();
  require_char_not_two(ctx, "symbol map");
  const BilinearForm half_polar = ctx.scalar(2).inverse() * polar_form(w.cctx().quadratic());
  return bl_map(half_polar, w.cctx(), CliffordContext::exterior(ctx), w);
}

CliffElt quantize(const CliffordContext& cctx, const CliffElt& ext) {
  const auto& ctx = cctx.base();
  require_char_not_two(ctx, "quantization map");
  if (!ext.cctx().quadratic().is_zero()) throw DomainError("quantize expects an element of the exterior algebra");
  const BilinearForm half_polar = ctx.scalar(2).inverse() * polar_form(cctx.quadratic());
  return bl_map(-half_polar, ext.cctx(), cctx, ext);
}

CliffElt cl_alpha(const CliffElt& w) { return w.even_part() - w.odd_part(); }

CliffElt cl_tau(const CliffElt& w) {
  CliffElt out(w.cctx());
  for (const auto& [b, c] : w.terms()) {
    // e_{sk} ... e_{s1}: the generator e_{s1} acts first.
    CliffElt acc = CliffElt::scalar(w.cctx(), c);
    for (Blade bits = b; bits != 0; bits &= bits - 1) {
      acc = left_generator(static_cast<std::size_t>(std::countr_zero(bits)), acc);
    }
    out += acc;
  }
  return out;
}

}  // namespace cliffbundle
