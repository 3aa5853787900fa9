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

#include "cliffbundle/tensor.hpp"

#include <algorithm>
#include <functional>

namespace cliffbundle {

namespace {

void check_word(const AlgebraContext& ctx, const Word& w) {
  if (w.size() > ctx.max_grade) {
    throw DomainError("tensor word of length " + std::to_string(w.size()) + " exceeds the grade cap " +
                      std::to_string(ctx.max_grade));
  }
  for (auto letter : w) {
    if (letter >= ctx.dim) throw DomainError("tensor word letter outside the basis");
  }
}

// x (x) w for the basis vector e_a.
Word prepend(std::uint8_t a, const Word& w) {
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(a);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word erase_at(const Word& w, std::size_t pos) {
  Word out;
  out.reserve(w.size() - 1);
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t != pos) out.push_back(w[t]);
  }
  return out;
}

void contract_into(const ScalarVec& f, const Word& w, const Scalar& c, TensorElt& out) {
  for (std::size_t t = 0; t < w.size(); ++t) {
    const Scalar& ft = f[w[t]];
    if (ft.is_zero()) continue;
    Scalar coeff = c * ft;
    out.add_term(erase_at(w, t), t % 2 == 0 ? coeff : -coeff);
  }
}

// (e_a + i_a^F)(u) for the basis vector e_a.
TensorElt step_basis(const BilinearForm& f, std::uint8_t a, const TensorElt& u) {
  const LinearForm row = f.left_slot(a);
  TensorElt out(u.ctx());
  for (const auto& [w, c] : u.terms()) {
    if (w.size() + 1 > u.ctx().max_grade) {
      throw DomainError("result exceeds the grade cap " + std::to_string(u.ctx().max_grade));
    }
    out.add_term(prepend(a, w), c);
    contract_into(row.coeffs, w, c, out);
  }
  return out;
}

// Parity of the number of inversions of a sequence of distinct integers.
bool odd_permutation(const std::vector<std::size_t>& seq) {
  bool odd = false;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] > seq[b]) odd = !odd;
    }
  }
  return odd;
}

}  // namespace

TensorElt TensorElt::unit(const AlgebraContext& ctx) { return word(ctx, Word{}); }

TensorElt TensorElt::scalar(const AlgebraContext& ctx, const Scalar& s) { return word(ctx, Word{}, s); }

TensorElt TensorElt::word(const AlgebraContext& ctx, Word w, const Scalar& coeff) {
  check_word(ctx, w);
  TensorElt out(ctx);
  out.add_term(w, coeff);
  return out;
}

TensorElt TensorElt::word(const AlgebraContext& ctx, Word w) { return word(ctx, std::move(w), ctx.one()); }

TensorElt TensorElt::vector(const Vector& x) {
  TensorElt out(x.ctx);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) out.add_term(Word{static_cast<std::uint8_t>(i)}, x.coeffs[i]);
  return out;
}

Scalar TensorElt::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ctx_.zero() : it->second;
}

long TensorElt::max_grade() const {
  long g = -1;
  for (const auto& [w, c] : terms_) g = std::max(g, static_cast<long>(w.size()));
  return g;
}

void TensorElt::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  if (!(c.field() == ctx_.field)) throw DomainError("coefficient field mismatch");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElt& TensorElt::operator+=(const TensorElt& rhs) {
  ctx_.require_compatible(rhs.ctx_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& rhs) {
  ctx_.require_compatible(rhs.ctx_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

TensorElt TensorElt::operator-() const {
  TensorElt out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

TensorElt operator*(const Scalar& s, const TensorElt& u) {
  TensorElt out(u.ctx_);
  for (const auto& [w, c] : u.terms_) out.add_term(w, s * c);
  return out;
}

TensorElt t_add(const TensorElt& u, const TensorElt& v) { return u + v; }

TensorElt t_scale(const Scalar& s, const TensorElt& u) { return s * u; }

TensorElt t_mul(const TensorElt& u, const TensorElt& v) {
  u.ctx().require_compatible(v.ctx());
  TensorElt out(u.ctx());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      check_word(u.ctx(), w);
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

TensorElt apply_e(const Vector& x, const TensorElt& u) {
  x.ctx.require_compatible(u.ctx());
  TensorElt out(u.ctx());
  for (const auto& [w, c] : u.terms()) {
    if (w.size() + 1 > u.ctx().max_grade) {
      throw DomainError("result exceeds the grade cap " + std::to_string(u.ctx().max_grade));
    }
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
      if (!x.coeffs[i].is_zero()) out.add_term(prepend(static_cast<std::uint8_t>(i), w), x.coeffs[i] * c);
    }
  }
  return out;
}

TensorElt apply_i(const LinearForm& f, const TensorElt& u) {
  f.ctx.require_compatible(u.ctx());
  TensorElt out(u.ctx());
  for (const auto& [w, c] : u.terms()) contract_into(f.coeffs, w, c, out);
  return out;
}

TensorElt apply_iF(const BilinearForm& f, const Vector& x, const TensorElt& u) {
  return apply_i(f.left_slot(x), u);
}

TensorElt lambda_big(const BilinearForm& f, const TensorElt& u, const TensorElt& v) {
  f.ctx().require_compatible(u.ctx());
  f.ctx().require_compatible(v.ctx());
  TensorElt out(v.ctx());
  for (const auto& [w, c] : u.terms()) {
    TensorElt acc = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = step_basis(f, *it, acc);
    out += c * acc;
  }
  return out;
}

TensorElt lambda_map(const BilinearForm& f, const TensorElt& u) {
  f.ctx().require_compatible(u.ctx());
  TensorElt out(u.ctx());
  for (const auto& [w, c] : u.terms()) {
    TensorElt acc = TensorElt::unit(u.ctx());
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = step_basis(f, *it, acc);
    out += c * acc;
  }
  return out;
}

TensorElt divided_power(const BilinearForm& f, std::size_t k, const TensorElt& u) {
  f.ctx().require_compatible(u.ctx());
  if (k == 0) return u;
  TensorElt out(u.ctx());
  for (const auto& [w, c] : u.terms()) {
    const std::size_t p = w.size();
    if (p < 2 * k) continue;
    std::vector<bool> used(p, false);
    std::vector<std::size_t> order;  // i1, j1, ..., ik, jk
    order.reserve(p);

    std::function<void(std::size_t, std::size_t, const Scalar&)> choose = [&](std::size_t pairs, std::size_t min_first,
                                                                          const Scalar& weight) {
      if (pairs == k) {
        std::vector<std::size_t> perm = order;
        Word rest;
        for (std::size_t t = 0; t < p; ++t) {
          if (!used[t]) {
            perm.push_back(t);
            rest.push_back(w[t]);
          }
        }
        out.add_term(rest, odd_permutation(perm) ? -weight : weight);
        return;
      }
      for (std::size_t i = min_first; i < p; ++i) {
        if (used[i]) continue;
        used[i] = true;
        for (std::size_t j = i + 1; j < p; ++j) {
          if (used[j] || f(w[i], w[j]).is_zero()) continue;
          used[j] = true;
          order.push_back(i);
          order.push_back(j);
          choose(pairs + 1, i + 1, weight * f(w[i], w[j]));
          order.resize(order.size() - 2);
          used[j] = false;
        }
        used[i] = false;
      }
    };
    choose(0, 0, c);
  }
  return out;
}

TensorElt alpha(const TensorElt& u) {
  TensorElt out(u.ctx());
  for (const auto& [w, c] : u.terms()) out.add_term(w, w.size() % 2 == 0 ? c : -c);
  return out;
}

TensorElt tau(const TensorElt& u) {
  TensorElt out(u.ctx());
  for (const auto& [w, c] : u.terms()) out.add_term(Word(w.rbegin(), w.rend()), c);
  return out;
}

TensorElt grade_project(const TensorElt& u, std::size_t p) {
  TensorElt out(u.ctx());
  for (const auto& [w, c] : u.terms()) {
    if (w.size() == p) out.add_term(w, c);
  }
  return out;
}

}  // namespace cliffbundle
