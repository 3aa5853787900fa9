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

// Brute-force reference implementations used only by tests. They share no
// code paths with the library beyond the scalar and container types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "cliffbundle/clifford.hpp"
#include "cliffbundle/forms.hpp"
#include "cliffbundle/tensor.hpp"

namespace oracle {

using namespace cliffbundle;

// Sign of a permutation from its cycle decomposition.
inline int cycle_sign(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t k = start; !seen[k]; k = perm[k]) {
      seen[k] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

// A partial matching of {0..p-1} as a list of pairs (i < j), pairs listed
// with increasing first entries.
using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

// All partial matchings, found by filtering the partner maps of every
// involution of {0..p-1}.
inline const std::vector<Matching>& all_matchings(std::size_t p) {
  static std::map<std::size_t, std::vector<Matching>> cache;
  if (auto it = cache.find(p); it != cache.end()) return it->second;
  std::vector<Matching>& out = cache[p];
  std::vector<std::size_t> partner(p);
  // Every map partner: {0..p-1} -> {0..p-1}, keeping the involutions.
  std::size_t total = 1;
  for (std::size_t k = 0; k < p; ++k) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t k = 0; k < p; ++k) {
      partner[k] = c % p;
      c /= p;
    }
    bool involution = true;
    for (std::size_t k = 0; k < p && involution; ++k) involution = partner[partner[k]] == k;
    if (!involution) continue;
    Matching m;
    for (std::size_t k = 0; k < p; ++k) {
      if (partner[k] > k) m.emplace_back(k, partner[k]);
    }
    out.push_back(m);
  }
  return out;
}

// Permutation (i1, j1, ..., ik, jk, remaining ascending) of a matching.
inline std::vector<std::size_t> matching_order(const Matching& m, std::size_t p) {
  std::vector<std::size_t> order;
  std::vector<bool> used(p, false);
  for (const auto& [i, j] : m) {
    order.push_back(i);
    order.push_back(j);
    used[i] = used[j] = true;
  }
  for (std::size_t k = 0; k < p; ++k) {
    if (!used[k]) order.push_back(k);
  }
  return order;
}

// The combinatorial expansion of lambda_F on one word, restricted to
// matchings with `pairs` pairs (all when pairs < 0).
inline TensorElt lambda_word(const BilinearForm& f, const Word& w, const Scalar& coeff, int pairs = -1) {
  TensorElt out(f.ctx());
  const std::size_t p = w.size();
  for (const auto& m : all_matchings(p)) {
    if (pairs >= 0 && m.size() != static_cast<std::size_t>(pairs)) continue;
    const auto order = matching_order(m, p);
    Scalar c = coeff * Scalar(f.ctx().field, cycle_sign(order));
    for (const auto& [i, j] : m) c *= f(w[i], w[j]);
    Word rest(order.begin() + static_cast<long>(2 * m.size()), order.end());
    for (auto& k : rest) k = w[k];
    out.add_term(rest, c);
  }
  return out;
}

inline TensorElt lambda(const BilinearForm& f, const TensorElt& u, int pairs = -1) {
  TensorElt out(f.ctx());
  for (const auto& [w, c] : u.terms()) out += lambda_word(f, w, c, pairs);
  return out;
}

// Pfaffian as a signed sum over perfect matchings.
inline Scalar pfaffian(const BilinearForm& a) {
  const std::size_t n = a.ctx().dim;
  Scalar total = a.ctx().zero();
  for (const auto& m : all_matchings(n)) {
    if (2 * m.size() != n) continue;
    Scalar term(a.ctx().field, cycle_sign(matching_order(m, n)));
    for (const auto& [i, j] : m) term *= a(i, j);
    total += term;
  }
  return total;
}

// Leibniz determinant.
inline Scalar determinant(const BilinearForm& a) {
  const std::size_t n = a.ctx().dim;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = a.ctx().zero();
  do {
    Scalar term(a.ctx().field, cycle_sign(perm));
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Normal form of a word in Cl(Q) by repeated adjacent rewriting.
inline std::map<Blade, Scalar> clifford_word(const QuadraticForm& q, const Word& w, const Scalar& coeff) {
  std::map<Blade, Scalar> out;
  std::vector<std::pair<Word, Scalar>> stack{{w, coeff}};
  while (!stack.empty()) {
    auto [word, c] = stack.back();
    stack.pop_back();
    if (c.is_zero()) continue;
    std::size_t k = 0;
    while (k + 1 < word.size() && word[k] < word[k + 1]) ++k;
    if (k + 1 >= word.size()) {
      Blade b = 0;
      for (auto letter : word) b |= Blade{1} << letter;
      auto it = out.find(b);
      if (it == out.end()) out.emplace(b, c); else it->second += c;
      continue;
    }
    const std::size_t hi = word[k], lo = word[k + 1];
    Word shorter = word;
    shorter.erase(shorter.begin() + static_cast<long>(k), shorter.begin() + static_cast<long>(k) + 2);
    if (hi == lo) {
      stack.emplace_back(shorter, c * q.diag(hi));
      continue;
    }
    stack.emplace_back(shorter, c * q.polar(lo, hi));
    Word swapped = word;
    std::swap(swapped[k], swapped[k + 1]);
    stack.emplace_back(swapped, -c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

inline CliffElt project(const CliffordContext& cctx, const TensorElt& u) {
  CliffElt out(cctx);
  for (const auto& [w, c] : u.terms()) {
    for (const auto& [b, x] : clifford_word(cctx.quadratic(), w, c)) out.add_term(b, x);
  }
  return out;
}

// bl_F on Cl(Q') by the matching expansion on ascending blades; the unmatched
// indices are still ascending, so they form a basis blade of the target.
inline CliffElt bl(const BilinearForm& f, const CliffordContext& target, const CliffElt& w) {
  CliffElt out(target);
  for (const auto& [b, c] : w.terms()) {
    Word letters;
    for (std::size_t i = 0; i < 32; ++i) {
      if (b >> i & 1u) letters.push_back(static_cast<std::uint8_t>(i));
    }
    const TensorElt expanded = lambda_word(f, letters, c);
    for (const auto& [rest, x] : expanded.terms()) {
      Blade r = 0;
      for (auto letter : rest) r |= Blade{1} << letter;
      out.add_term(r, x);
    }
  }
  return out;
}

}  // namespace oracle
