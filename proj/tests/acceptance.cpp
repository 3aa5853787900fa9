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

// Acceptance criteria, one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "cliffbundle/checks.hpp"
#include "cliffbundle/clifford.hpp"
#include "cliffbundle/random.hpp"
#include "cliffbundle/repcheck.hpp"
#include "cliffbundle/serialize.hpp"
#include "cliffbundle/tensor.hpp"
#include "oracles.hpp"

using namespace cliffbundle;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const std::vector<FieldSpec> kFields = {Q, FieldSpec::prime(2), FieldSpec::prime(7)};

struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string note;
  std::vector<std::string> details;

  void expect(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
};

int failed_criteria = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    ++out.failures;
    out.note = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || seconds < limit_seconds;
  const bool pass = out.failures == 0 && in_time;
  if (!pass) ++failed_criteria;
  std::printf("%s [%2d] %s: %zu checks, %zu failures, %.2f s", pass ? "PASS" : "FAIL", number, title.c_str(), out.checks,
              out.failures, seconds);
  if (limit_seconds > 0) std::printf(" (limit %.0f s)", limit_seconds);
  if (!out.note.empty()) std::printf("; %s", out.note.c_str());
  std::printf("\n");
  for (const auto& d : out.details) std::printf("       %s\n", d.c_str());
  std::fflush(stdout);
}

AlgebraContext random_context(Rng& rng, const FieldSpec& field, std::size_t max_dim) {
  return AlgebraContext(1 + rng.below(max_dim), field);
}

std::vector<Word> all_words(std::size_t letters, std::size_t max_length) {
  std::vector<Word> out{{}};
  for (std::size_t begin = 0; begin < out.size(); ++begin) {
    if (out[begin].size() == max_length) continue;
    for (std::size_t l = 0; l < letters; ++l) {
      Word w = out[begin];
      w.push_back(static_cast<std::uint8_t>(l));
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "antiderivation suite (i_f^2, i_f i_g + i_g i_f, e_x i_f + i_f e_x)", 10, [](Outcome& out) {
    Rng rng(101);
    for (const auto& field : kFields) {
      for (int k = 0; k < 200; ++k) {
        const AlgebraContext ctx = random_context(rng, field, 5);
        const LinearForm f = random_linear_form(rng, ctx), g = random_linear_form(rng, ctx);
        const Vector x = random_vector(rng, ctx);
        const TensorElt u = random_tensor(rng, ctx, 6, 5);
        const TensorElt v = random_tensor(rng, ctx, 5, 5);
        out.expect(apply_i(f, apply_i(f, u)).is_zero());
        out.expect((apply_i(f, apply_i(g, u)) + apply_i(g, apply_i(f, u))).is_zero());
        out.expect(apply_e(x, apply_i(f, v)) + apply_i(f, apply_e(x, v)) == f(x) * v);
      }
    }
  });

  criterion(2, "lambda group law (lambda_F lambda_G = lambda_(F+G), lambda_F lambda_(-F) = Id)", 10, [](Outcome& out) {
    Rng rng(202);
    for (const auto& field : kFields) {
      for (int k = 0; k < 100; ++k) {
        const AlgebraContext ctx = random_context(rng, field, 5);
        const BilinearForm f = random_bilinear(rng, ctx), g = random_bilinear(rng, ctx);
        const TensorElt u = random_tensor(rng, ctx, 6, 5);
        out.expect(lambda_map(f, lambda_map(g, u)) == lambda_map(f + g, u));
        out.expect(lambda_map(f, lambda_map(-f, u)) == u);
      }
    }
  });

  criterion(3, "recursive lambda_F equals the matching expansion on all words of length <= 5 (n = 4)", 0,
            [](Outcome& out) {
              Rng rng(303);
              const auto words = all_words(4, 5);
              for (const auto& field : kFields) {
                const AlgebraContext ctx(4, field);
                for (int k = 0; k < 50; ++k) {
                  const BilinearForm f = random_bilinear(rng, ctx);
                  for (const auto& w : words) {
                    const TensorElt u = TensorElt::word(ctx, w);
                    out.expect(lambda_map(f, u) == oracle::lambda(f, u));
                  }
                }
              }
              out.note = std::to_string(words.size()) + " words per form";
            });

  criterion(4, "divided powers a_k a_l = C(k+l, k) a_(k+l) on grade-8 tensors; exp(a_1) = lambda_F over Q", 0,
            [](Outcome& out) {
              Rng rng(404);
              for (const auto& field : kFields) {
                for (int trial = 0; trial < 10; ++trial) {
                  const AlgebraContext ctx(1 + rng.below(4), field);
                  const BilinearForm f = random_bilinear(rng, ctx);
                  const TensorElt u = random_homogeneous(rng, ctx, 8, 3);
                  for (std::size_t k = 0; k <= 4; ++k) {
                    for (std::size_t l = 0; k + l <= 4; ++l) {
                      long long c = 1;
                      for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<long long>(l + i) / static_cast<long long>(i);
                      out.expect(divided_power(f, k, divided_power(f, l, u)) == Scalar(field, c) * divided_power(f, k + l, u));
                    }
                  }
                  out.expect(divided_power(f, 2, u) == oracle::lambda(f, u, 2));
                  if (field.is_rational()) {
                    TensorElt sum = u, term = u;
                    for (long long k = 1; !term.is_zero(); ++k) {
                      term = Scalar(field, k).inverse() * divided_power(f, 1, term);
                      sum += term;
                    }
                    out.expect(sum == lambda_map(f, u));
                  }
                }
              }
            });

  criterion(5, "Pf(A)^2 = det(A) for sizes 2, 4, 6 over Q and GF(7); grade 0 of lambda_A on e_1...e_2n is Pf(A)", 0,
            [](Outcome& out) {
              Rng rng(505);
              for (const auto& field : {Q, FieldSpec::prime(7)}) {
                for (std::size_t n : {2u, 4u, 6u}) {
                  const AlgebraContext ctx(n, field);
                  Word full(n);
                  std::iota(full.begin(), full.end(), 0);
                  for (int k = 0; k < 100; ++k) {
                    const BilinearForm a = random_alternating(rng, ctx);
                    const Scalar pf = pfaffian(a);
                    out.expect(pf * pf == oracle::determinant(a));
                    out.expect(pf == oracle::pfaffian(a));
                    out.expect(grade_project(lambda_map(a, TensorElt::word(ctx, full)), 0).coeff({}) == pf);
                  }
                }
              }
            });

  criterion(6, "pi_Q is multiplicative and bl_F pi_Q' = pi_Q lambda_F (n <= 4)", 30, [](Outcome& out) {
    Rng rng(606);
    for (const auto& field : kFields) {
      for (int k = 0; k < 200; ++k) {
        const AlgebraContext ctx = random_context(rng, field, 4);
        const CliffordContext target(random_quadratic(rng, ctx));
        const BilinearForm f = random_bilinear(rng, ctx);
        const CliffordContext source(shifted(target.quadratic(), f));
        const TensorElt u = random_tensor(rng, ctx, 6, 4), v = random_tensor(rng, ctx, 6, 4);
        out.expect(pi_Q(target, t_mul(u, v)) == cl_mul(pi_Q(target, u), pi_Q(target, v)));
        out.expect(pi_Q(target, u) == oracle::project(target, u));
        out.expect(bl_map(f, source, target, pi_Q(source, u)) == pi_Q(target, lambda_map(f, u)));
      }
    }
  });

  criterion(7, "characteristic 2: bf2_bilinear reproduces Q on all vectors (n <= 4); bl/bL identities over GF(2)", 0,
            [](Outcome& out) {
              const FieldSpec f2 = FieldSpec::prime(2);
              Rng rng(707);
              for (std::size_t n = 1; n <= 4; ++n) {
                const AlgebraContext ctx(n, f2);
                for (int k = 0; k < 50; ++k) {
                  const QuadraticForm q = random_quadratic(rng, ctx);
                  const BilinearForm f = bf2_bilinear(q);
                  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                    ScalarVec x;
                    for (std::size_t i = 0; i < n; ++i) x.push_back(ctx.scalar(static_cast<long long>(mask >> i & 1)));
                    const Vector v(ctx, x);
                    out.expect(f.eval(v, v) == eval_quad(q, v));
                  }
                }
              }
              std::size_t suites = 0;
              for (const char* id :
                   {"char2.bl-suite", "bl.commutation-square", "bl.group-law", "bL.homomorphism", "twist.associative",
                    "twist.transport", "clifford.homomorphism", "clifford.quotient-squares", "lambda.group-law",
                    "lambda.commutes-i", "lambda.radical-lemma", "lambda.parity", "rho.homomorphism",
                    "rho.unit-column", "rho.equivalence"}) {
                const SuiteResult r = run_suite(id, SuiteOptions{77, 100, f2, std::nullopt});
                for (std::size_t k = 0; k < r.passed; ++k) out.expect(true);
                for (std::size_t k = 0; k < r.failed; ++k) out.expect(false);
                ++suites;
              }
              out.note = std::to_string(suites) + " identity suites over GF(2)";
            });

  criterion(8, "exp_contract(A*) = bl_A and exp(i_A*) e_x exp(-i_A*) = e_x + i_x^A (n = 4, Q)", 0, [](Outcome& out) {
    Rng rng(808);
    const AlgebraContext ctx(4, Q);
    for (int k = 0; k < 100; ++k) {
      const BilinearForm a = random_alternating(rng, ctx);
      const DualTwoForm astar = dual_two_form(a);
      const CliffordContext c(random_quadratic(rng, ctx));
      const CliffElt w = random_cliff(rng, c, 8);
      const Vector x = random_vector(rng, ctx);
      out.expect(exp_contract(astar, w) == bl_map(a, c, c, w));
      out.expect(exp_contract(astar, cl_apply_e(x, exp_contract(-astar, w))) == cl_apply_e(x, w) + cl_apply_iF(a, x, w));
    }
  });

  criterion(9, "rho_(F+A)(a) M_A = M_A rho_F(a) as 16 x 16 matrices (n = 4, Q)", 60, [](Outcome& out) {
    Rng rng(909);
    const AlgebraContext ctx(4, Q);
    for (int k = 0; k < 50; ++k) {
      const BilinearForm f = random_bilinear(rng, ctx);
      const BilinearForm a = random_alternating(rng, ctx);
      const CliffordContext cl(quad_of_bilinear(f));
      const std::vector<CliffElt> samples{random_cliff(rng, cl, 8)};
      out.expect(check_equivalence(f, a, samples).passed());
    }
  });

  criterion(10, "quantize(symbol(w)) = w; n! q(y_1 ^ ... ^ y_n) = sum over n! permutations (n <= 4, Q)", 0,
            [](Outcome& out) {
              Rng rng(1010);
              for (const auto& field : {Q, FieldSpec::prime(7)}) {
                for (int k = 0; k < 100; ++k) {
                  const AlgebraContext ctx = random_context(rng, field, 4);
                  const CliffordContext c(random_quadratic(rng, ctx));
                  const CliffElt w = random_cliff(rng, c, 6);
                  out.expect(quantize(c, symbol(w)) == w);
                }
              }
              for (int k = 0; k < 100; ++k) {
                const AlgebraContext ctx = random_context(rng, Q, 4);
                const CliffordContext c(random_quadratic(rng, ctx));
                const auto ext = CliffordContext::exterior(ctx);
                const std::size_t n = 1 + static_cast<std::size_t>(k % 4);
                std::vector<Vector> ys;
                for (std::size_t i = 0; i < n; ++i) ys.push_back(random_vector(rng, ctx));
                CliffElt wedge = CliffElt::unit(ext);
                for (const auto& y : ys) wedge = cl_mul(wedge, CliffElt::vector(ext, y));
                // Expand each permuted product multilinearly and normal-order it with the rewriting oracle.
                std::vector<std::size_t> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                TensorElt sum(ctx);
                long long factorial = 1;
                do {
                  TensorElt product = TensorElt::scalar(ctx, ctx.scalar(oracle::cycle_sign(perm)));
                  for (auto i : perm) product = t_mul(product, TensorElt::vector(ys[i]));
                  sum += product;
                } while (std::next_permutation(perm.begin(), perm.end()));
                for (std::size_t i = 2; i <= n; ++i) factorial *= static_cast<long long>(i);
                out.expect(ctx.scalar(factorial) * quantize(c, wedge) == oracle::project(c, sum));
              }
            });

  criterion(11, "signature (2,2) twisted left ideal of dim 8 has a proper invariant subspace", 0, [](Outcome& out) {
    const AlgebraContext ctx(4, Q);
    Matrix g(Q, 4, 4), a(Q, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) g(i, i) = ctx.scalar(i < 2 ? 1 : -1);
    const long long twist[4][4] = {{0, 1, 0, 1}, {-1, 0, 0, 0}, {0, 0, 0, 2}, {-1, 0, -2, 0}};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = ctx.scalar(twist[i][j]);
    }
    const BilinearForm f = BilinearForm(ctx, g) + BilinearForm(ctx, a);
    const CliffordContext cl(quad_of_bilinear(f));
    const CliffElt e = ctx.scalar(2).inverse() * (CliffElt::unit(cl) + CliffElt::blade(cl, 1));
    const auto ideal = left_ideal_basis(f, e);
    out.expect(ideal.size() == 8);
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < 4; ++i) gens.push_back(rho_matrix(f, CliffElt::blade(cl, Blade{1} << i)).entries);
    out.expect(is_invariant(gens, ideal));
    const std::vector<Matrix> restricted = restrict_to(gens, ideal);
    const std::uint64_t seed = 2024;
    const ProbeReport report = invariant_probe(restricted, seed);
    out.expect(!report.dims.empty());
    for (const auto& w : report.witnesses) out.expect(is_invariant(restricted, w.basis));
    std::ostringstream dims;
    for (auto d : report.dims) dims << (dims.tellp() > 0 ? "," : "") << d;
    out.note = "seed " + std::to_string(seed) + ", dims {" + dims.str() + "}";
    if (!report.witnesses.empty()) {
      const auto& w = report.witnesses.front();
      Json basis = Json::array();
      for (const auto& v : w.basis) {
        Json row = Json::array();
        for (const auto& s : v) row.push_back(s.to_string());
        basis.push_back(row);
      }
      out.details.push_back("witness dim " + std::to_string(w.dim) + " via " + w.method +
                            " (coordinates in the ideal basis): " + basis.dump());
      Json ideal_json = Json::array();
      for (const auto& v : ideal) {
        Json row = Json::array();
        for (const auto& s : v) row.push_back(s.to_string());
        ideal_json.push_back(row);
      }
      out.details.push_back("ideal basis (exterior algebra coordinates, bitmask order): " + ideal_json.dump());
    }
  });

  std::printf("%s: %d criteria failed\n", failed_criteria == 0 ? "ALL PASS" : "SOME FAIL", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
