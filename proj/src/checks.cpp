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

#include "cliffbundle/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "cliffbundle/clifford.hpp"
#include "cliffbundle/error.hpp"
#include "cliffbundle/forms.hpp"
#include "cliffbundle/random.hpp"
#include "cliffbundle/repcheck.hpp"
#include "cliffbundle/tensor.hpp"

namespace cliffbundle {

namespace {

// Records the first violated condition of a sample.
class Probe {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && !failure_) failure_ = what;
  }
  const std::optional<std::string>& failure() const { return failure_; }

 private:
  std::optional<std::string> failure_;
};

enum class Fields { All, NotTwo, CharZero, CharTwo, Prime };

struct Suite {
  std::string id;
  std::string description;
  Fields fields;
  std::size_t min_dim;
  std::size_t max_dim;
  bool even_dim;
  std::function<void(Rng&, const AlgebraContext&, Probe&)> body;
};

const FieldSpec kQ = FieldSpec::rationals();

std::vector<FieldSpec> default_fields(Fields f) {
  switch (f) {
    case Fields::All:
      return {kQ, FieldSpec::prime(2), FieldSpec::prime(7)};
    case Fields::NotTwo:
      return {kQ, FieldSpec::prime(7)};
    case Fields::CharZero:
      return {kQ};
    case Fields::CharTwo:
      return {FieldSpec::prime(2)};
    case Fields::Prime:
      return {FieldSpec::prime(2), FieldSpec::prime(7), FieldSpec::prime(1000003)};
  }
  return {};
}

bool field_allowed(Fields f, const FieldSpec& field) {
  switch (f) {
    case Fields::All:
      return true;
    case Fields::NotTwo:
      return field.characteristic() != 2;
    case Fields::CharZero:
      return field.is_rational();
    case Fields::CharTwo:
      return field.characteristic() == 2;
    case Fields::Prime:
      return !field.is_rational();
  }
  return false;
}

constexpr std::size_t kDegree = 6;
constexpr std::size_t kTerms = 4;

TensorElt rand_tensor(Rng& rng, const AlgebraContext& ctx, std::size_t degree = kDegree) {
  return random_tensor(rng, ctx, degree, kTerms);
}

Scalar binomial(const FieldSpec& field, std::size_t n, std::size_t k) {
  long long c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<long long>(n - k + i) / static_cast<long long>(i);
  return Scalar(field, c);
}

long long factorial(std::size_t n) {
  long long f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long long>(i);
  return f;
}

// Random tensor built from vectors of the right radical of g.
TensorElt radical_tensor(Rng& rng, const BilinearForm& g) {
  const AlgebraContext& ctx = g.ctx();
  const auto radical = right_radical(g);
  TensorElt w = TensorElt::scalar(ctx, random_nonzero_scalar(rng, ctx.field));
  if (radical.empty()) return w;
  const std::size_t terms = 1 + rng.below(2);
  for (std::size_t t = 0; t < terms; ++t) {
    TensorElt product = TensorElt::scalar(ctx, random_nonzero_scalar(rng, ctx.field));
    const std::size_t length = 1 + rng.below(2);
    for (std::size_t k = 0; k < length; ++k) {
      Vector v = Vector::zero(ctx);
      for (const auto& r : radical) v = v + random_scalar(rng, ctx.field) * r;
      product = t_mul(product, TensorElt::vector(v));
    }
    w += product;
  }
  return w;
}

// Random form with some columns cleared; its right radical is nonzero.
BilinearForm degenerate_bilinear(Rng& rng, const AlgebraContext& ctx) {
  Matrix m = random_bilinear(rng, ctx).entries();
  const std::size_t cleared = 1 + rng.below(ctx.dim);
  for (std::size_t c = 0; c < cleared; ++c) {
    const std::size_t col = rng.below(ctx.dim);
    for (std::size_t i = 0; i < ctx.dim; ++i) m(i, col) = ctx.zero();
  }
  return BilinearForm(ctx, std::move(m));
}

CliffordContext rand_clifford(Rng& rng, const AlgebraContext& ctx) { return CliffordContext(random_quadratic(rng, ctx)); }

CliffElt rand_cliff(Rng& rng, const CliffordContext& cctx) { return random_cliff(rng, cctx, 4); }

// ---------------------------------------------------------------- scalars

void field_axioms(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const Scalar a = random_scalar(rng, ctx.field), b = random_scalar(rng, ctx.field), c = random_scalar(rng, ctx.field);
  p.require((a + b) + c == a + (b + c), "additive associativity");
  p.require((a * b) * c == a * (b * c), "multiplicative associativity");
  p.require(a + b == b + a && a * b == b * a, "commutativity");
  p.require(a * (b + c) == a * b + a * c, "distributivity");
  p.require((a + (-a)).is_zero(), "additive inverse");
  if (!a.is_zero()) p.require((a * a.inverse()).is_one(), "multiplicative inverse");
}

void parse_print(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  Scalar a = random_scalar(rng, ctx.field);
  for (int k = 0; k < 3; ++k) a = a * random_scalar(rng, ctx.field) + random_scalar(rng, ctx.field);
  p.require(Scalar::parse(a.to_string(), ctx.field) == a, "parse(print(a)) != a for " + a.to_string());
}

void fermat(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  Scalar a(ctx.field, static_cast<long long>(rng.next() % ctx.field.characteristic()));
  p.require(a.pow(ctx.field.characteristic()) == a, "a^p != a");
}

// ---------------------------------------------------------------- forms

void polar_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const QuadraticForm q = random_quadratic(rng, ctx);
  const Vector x = random_vector(rng, ctx), y = random_vector(rng, ctx);
  p.require(polar_form(q).eval(x, y) == eval_quad(q, x + y) - eval_quad(q, x) - eval_quad(q, y), "polar identity");
}

// Every vector of V when the field is GF(2), random vectors otherwise.
std::vector<Vector> test_vectors(Rng& rng, const AlgebraContext& ctx) {
  std::vector<Vector> out;
  if (ctx.field.characteristic() == 2 && ctx.dim <= 8) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << ctx.dim); ++mask) {
      ScalarVec v;
      for (std::size_t i = 0; i < ctx.dim; ++i) v.push_back(ctx.scalar(static_cast<long long>((mask >> i) & 1)));
      out.emplace_back(ctx, std::move(v));
    }
    return out;
  }
  for (int k = 0; k < 4; ++k) out.push_back(random_vector(rng, ctx));
  return out;
}

void quad_of_bilinear_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const QuadraticForm q = quad_of_bilinear(f);
  for (const auto& x : test_vectors(rng, ctx)) p.require(eval_quad(q, x) == f.eval(x, x), "Q_F(x) != F(x, x)");
}

void bf2_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const QuadraticForm q = random_quadratic(rng, ctx);
  const BilinearForm f = bf2_bilinear(q);
  p.require(quad_of_bilinear(f) == q, "Q_F != Q");
  for (const auto& x : test_vectors(rng, ctx)) p.require(f.eval(x, x) == eval_quad(q, x), "F(x, x) != Q(x)");
}

void pfaffian_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm a = random_alternating(rng, ctx);
  const Scalar pf = pfaffian(a);
  p.require(pf * pf == determinant(a), "Pf(A)^2 != det(A)");
}

void split_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const auto [g, a] = split_sym_alt(f);
  p.require(g.is_symmetric(), "symmetric part not symmetric");
  p.require(a.is_alternating(), "alternating part not alternating");
  p.require(g + a == f, "g + A != F");
  const auto [g2, a2] = split_sym_alt(g + a);
  p.require(g2 == g && a2 == a, "split not unique");
}

void dual_roundtrip(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm a = random_alternating(rng, ctx);
  p.require(alt_of_dual(dual_two_form(a)) == a, "alt_of_dual(dual_two_form(A)) != A");
  const DualTwoForm c = dual_two_form(random_alternating(rng, ctx));
  p.require(dual_two_form(alt_of_dual(c)) == c, "dual_two_form(alt_of_dual(c)) != c");
}

// ---------------------------------------------------------------- tensor

void antiderivation(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const LinearForm f = random_linear_form(rng, ctx), g = random_linear_form(rng, ctx);
  const TensorElt u = rand_tensor(rng, ctx);
  p.require(apply_i(f, apply_i(f, u)).is_zero(), "i_f^2 != 0");
  p.require((apply_i(f, apply_i(g, u)) + apply_i(g, apply_i(f, u))).is_zero(), "i_f i_g + i_g i_f != 0");
}

void e_i_anticommutator(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const LinearForm f = random_linear_form(rng, ctx);
  const Vector x = random_vector(rng, ctx);
  const TensorElt u = rand_tensor(rng, ctx, kDegree - 1);
  p.require(apply_e(x, apply_i(f, u)) + apply_i(f, apply_e(x, u)) == f(x) * u, "e_x i_f + i_f e_x != f(x)");
}

void lambda_commutation(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const LinearForm g = random_linear_form(rng, ctx);
  const std::size_t grade = rng.below(4);
  const TensorElt u = random_homogeneous(rng, ctx, grade, kTerms);
  const TensorElt v = rand_tensor(rng, ctx, 3);
  TensorElt rhs = lambda_big(f, apply_i(g, u), v);
  const TensorElt tail = lambda_big(f, u, apply_i(g, v));
  if (grade % 2 == 0) rhs += tail; else rhs -= tail;
  p.require(apply_i(g, lambda_big(f, u, v)) == rhs, "graded commutation of i_f with Lambda_F");
}

void divided_powers(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx), g = random_bilinear(rng, ctx);
  const TensorElt u = rand_tensor(rng, ctx);
  const std::size_t k = rng.below(5);
  const std::size_t l = rng.below(5 - k);
  p.require(divided_power(f, k, divided_power(g, l, u)) == divided_power(g, l, divided_power(f, k, u)),
            "a_k^F a_l^G != a_l^G a_k^F");
  p.require(divided_power(f, k, divided_power(f, l, u)) == binomial(ctx.field, k + l, k) * divided_power(f, k + l, u),
            "a_k a_l != C(k+l, k) a_(k+l)");
}

// sum_k (a_1)^k / k! applied to u.
TensorElt exp_divided(const BilinearForm& f, const TensorElt& u) {
  TensorElt sum = u;
  TensorElt term = u;
  for (std::size_t k = 1; !term.is_zero(); ++k) {
    term = Scalar(f.ctx().field, static_cast<long long>(k)).inverse() * divided_power(f, 1, term);
    sum += term;
  }
  return sum;
}

void exp_divided_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const TensorElt u = rand_tensor(rng, ctx);
  p.require(exp_divided(f, u) == lambda_map(f, u), "exp(a_1) != lambda_F");
}

void lambda_group_law(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx), g = random_bilinear(rng, ctx);
  const TensorElt u = rand_tensor(rng, ctx);
  p.require(lambda_map(f, lambda_map(g, u)) == lambda_map(f + g, u), "lambda_F lambda_G != lambda_(F+G)");
  p.require(lambda_map(f, lambda_map(-f, u)) == u, "lambda_F lambda_(-F) != Id");
}

void lambda_commutes_i(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const LinearForm g = random_linear_form(rng, ctx);
  const TensorElt u = rand_tensor(rng, ctx);
  p.require(lambda_map(f, apply_i(g, u)) == apply_i(g, lambda_map(f, u)), "lambda_F i_f != i_f lambda_F");
}

void radical_lemma(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const BilinearForm g = degenerate_bilinear(rng, ctx);
  const TensorElt u = rand_tensor(rng, ctx, 3), v = rand_tensor(rng, ctx, 3);
  const TensorElt w = radical_tensor(rng, g);
  p.require(lambda_big(f, lambda_big(g, u, v), w) == lambda_big(f + g, u, lambda_big(f, v, w)),
            "Lambda_F(Lambda_G(u)(v))(w) != Lambda_(F+G)(u)(Lambda_F(v)(w))");
}

void lambda_expansion(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const TensorElt u = rand_tensor(rng, ctx);
  TensorElt sum(ctx);
  for (std::size_t k = 0; 2 * k <= kDegree; ++k) sum += divided_power(f, k, u);
  p.require(sum == lambda_map(f, u), "recursive lambda_F != sum of divided powers");
}

void lambda_parity(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const TensorElt u = rand_tensor(rng, ctx);
  p.require(alpha(lambda_map(f, u)) == lambda_map(f, alpha(u)), "alpha lambda_F != lambda_F alpha");
}

// ---------------------------------------------------------------- clifford

void pi_homomorphism(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const auto cctx = rand_clifford(rng, ctx);
  const TensorElt u = rand_tensor(rng, ctx), v = rand_tensor(rng, ctx);
  p.require(pi_Q(cctx, t_mul(u, v)) == cl_mul(pi_Q(cctx, u), pi_Q(cctx, v)), "pi(u v) != pi(u) pi(v)");
}

void pi_nontrivial(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const auto cctx = rand_clifford(rng, ctx);
  const CliffElt one = pi_Q(cctx, TensorElt::unit(ctx));
  p.require(!one.is_zero() && one == CliffElt::unit(cctx), "pi(1) != 1");
}

void quotient_squares(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const auto cctx = rand_clifford(rng, ctx);
  const Vector x = random_vector(rng, ctx);
  const TensorElt tx = TensorElt::vector(x);
  const TensorElt relation = t_mul(tx, tx) - TensorElt::scalar(ctx, eval_quad(cctx.quadratic(), x));
  p.require(pi_Q(cctx, relation).is_zero(), "pi(x x - Q(x)) != 0");
}

void commutation_square(const BilinearForm& f, const CliffordContext& target, const TensorElt& u, Probe& p) {
  const CliffordContext source(shifted(target.quadratic(), f));
  p.require(bl_map(f, source, target, pi_Q(source, u)) == pi_Q(target, lambda_map(f, u)),
            "bl_F pi_Q' != pi_Q lambda_F");
}

void commutation_square_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  commutation_square(random_bilinear(rng, ctx), rand_clifford(rng, ctx), rand_tensor(rng, ctx), p);
}

void bl_group_law(const BilinearForm& f, const BilinearForm& g, const CliffordContext& c0, Rng& rng, Probe& p) {
  const CliffordContext c1(shifted(c0.quadratic(), f));
  const CliffordContext c2(shifted(c1.quadratic(), g));
  const CliffElt w = rand_cliff(rng, c2);
  p.require(bl_map(f, c1, c0, bl_map(g, c2, c1, w)) == bl_map(f + g, c2, c0, w), "bl_F bl_G != bl_(F+G)");
  const CliffElt v = rand_cliff(rng, c1);
  p.require(bl_map(-f, c0, c1, bl_map(f, c1, c0, v)) == v, "bl_(-F) bl_F != Id");
  p.require(bl_inverse(f, bl_map(f, v)) == v, "bl_inverse(bl_F(v)) != v");
}

void bl_group_law_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx), g = random_bilinear(rng, ctx);
  bl_group_law(f, g, rand_clifford(rng, ctx), rng, p);
}

void bL_homomorphism(const BilinearForm& f, const CliffordContext& target, Rng& rng, Probe& p) {
  const CliffordContext source(shifted(target.quadratic(), f));
  const CliffElt u = rand_cliff(rng, source), v = rand_cliff(rng, source);
  const CliffElt w = rand_cliff(rng, target);
  p.require(bL_apply(f, cl_mul(u, v), w) == bL_apply(f, u, bL_apply(f, v, w)), "bL_F(u v) != bL_F(u) bL_F(v)");
  p.require(bL_apply(f, u, CliffElt::unit(target)) == bl_map(f, source, target, u), "bL_F(u)(1) != bl_F(u)");
}

void bL_homomorphism_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  bL_homomorphism(random_bilinear(rng, ctx), rand_clifford(rng, ctx), rng, p);
}

void twist_associative(const BilinearForm& f, const CliffordContext& cctx, Rng& rng, Probe& p) {
  const CliffElt u = rand_cliff(rng, cctx), v = rand_cliff(rng, cctx), w = rand_cliff(rng, cctx);
  p.require(twisted_mul(f, twisted_mul(f, u, v), w) == twisted_mul(f, u, twisted_mul(f, v, w)),
            "twisted product not associative");
}

void twist_associative_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  twist_associative(random_bilinear(rng, ctx), rand_clifford(rng, ctx), rng, p);
}

void twist_transport(const BilinearForm& f, const CliffordContext& cctx, Rng& rng, Probe& p) {
  const CliffElt u = rand_cliff(rng, cctx), v = rand_cliff(rng, cctx);
  p.require(bl_inverse(f, twisted_mul(f, u, v)) == cl_mul(bl_inverse(f, u), bl_inverse(f, v)),
            "bl_(-F)(u o v) != bl_(-F)(u) bl_(-F)(v)");
  const Vector x = random_vector(rng, cctx.base());
  p.require(twisted_mul(f, CliffElt::vector(cctx, x), v) == cl_apply_e(x, v) + cl_apply_iF(f, x, v),
            "x o_F v != x v + i_x^F v");
}

void twist_transport_check(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  twist_transport(random_bilinear(rng, ctx), rand_clifford(rng, ctx), rng, p);
}

void exp_gauge(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm a = random_alternating(rng, ctx);
  const auto cctx = rand_clifford(rng, ctx);
  const CliffElt w = rand_cliff(rng, cctx);
  p.require(exp_contract(dual_two_form(a), w) == bl_map(a, cctx, cctx, w), "exp(i_A*) != bl_A");
}

void exp_conjugation(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm a = random_alternating(rng, ctx);
  const DualTwoForm astar = dual_two_form(a);
  const auto cctx = rand_clifford(rng, ctx);
  const CliffElt w = rand_cliff(rng, cctx);
  const Vector x = random_vector(rng, ctx);
  p.require(exp_contract(astar, cl_apply_e(x, exp_contract(-astar, w))) == cl_apply_e(x, w) + cl_apply_iF(a, x, w),
            "exp(i_A*) e_x exp(-i_A*) != e_x + i_x^A");
}

void symbol_roundtrip(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const auto cctx = rand_clifford(rng, ctx);
  const CliffElt w = rand_cliff(rng, cctx);
  p.require(quantize(cctx, symbol(w)) == w, "quantize(symbol(w)) != w");
  const CliffElt z = rand_cliff(rng, CliffordContext::exterior(ctx));
  p.require(symbol(quantize(cctx, z)) == z, "symbol(quantize(z)) != z");
}

void symbol_nfac(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const auto cctx = rand_clifford(rng, ctx);
  const auto ext = CliffordContext::exterior(ctx);
  const std::size_t n = 1 + rng.below(4);
  std::vector<Vector> ys;
  for (std::size_t k = 0; k < n; ++k) ys.push_back(random_vector(rng, ctx));
  CliffElt wedge = CliffElt::unit(ext);
  for (const auto& y : ys) wedge = cl_mul(wedge, CliffElt::vector(ext, y));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CliffElt sum(cctx);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    CliffElt product = CliffElt::unit(cctx);
    for (auto k : perm) product = cl_mul(product, CliffElt::vector(cctx, ys[k]));
    if (inversions % 2 == 0) sum += product; else sum -= product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  p.require(Scalar(ctx.field, factorial(n)) * quantize(cctx, wedge) == sum, "n! q(y_1 ^ ... ^ y_n) != antisymmetrized product");
}

void char2_suite(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const QuadraticForm q0 = random_quadratic(rng, ctx);
  const BilinearForm f = bf2_bilinear(q0);
  const auto target = rng.chance(50) ? CliffordContext::exterior(ctx) : rand_clifford(rng, ctx);
  commutation_square(f, target, rand_tensor(rng, ctx), p);
  bl_group_law(f, bf2_bilinear(random_quadratic(rng, ctx)), target, rng, p);
  bL_homomorphism(f, target, rng, p);
  twist_associative(f, target, rng, p);
  twist_transport(f, target, rng, p);
}

// ---------------------------------------------------------------- repcheck

void rho_homomorphism(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const CliffordContext source(quad_of_bilinear(f));
  const CliffElt u = rand_cliff(rng, source), v = rand_cliff(rng, source);
  p.require(rho_matrix(f, cl_mul(u, v)).entries == rho_matrix(f, u).entries * rho_matrix(f, v).entries,
            "rho(u v) != rho(u) rho(v)");
}

void rho_unit_column(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const CliffordContext source(quad_of_bilinear(f));
  const CliffElt u = rand_cliff(rng, source);
  const auto ext = CliffordContext::exterior(ctx);
  p.require(rho_matrix(f, u).entries.column(0) == coordinates(bl_map(f, source, ext, u)), "rho(u) e_0 != bl_F(u)");
}

void rho_equivalence(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  const BilinearForm f = random_bilinear(rng, ctx);
  const BilinearForm a = random_alternating(rng, ctx);
  const CliffordContext source(quad_of_bilinear(f));
  const std::vector<CliffElt> samples{rand_cliff(rng, source)};
  const auto report = check_equivalence(f, a, samples);
  p.require(report.passed(), "rho_(F+A)(a) M_A != M_A rho_F(a)");
}

void probe_intertwined(Rng& rng, const AlgebraContext& ctx, Probe& p) {
  Matrix g(ctx.field, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) g(i, i) = ctx.scalar(i < 2 ? 1 : -1);
  const BilinearForm f(ctx, std::move(g));
  BilinearForm a = random_alternating(rng, ctx);
  while (a.entries().is_zero()) a = random_alternating(rng, ctx);
  const CliffordContext cl(quad_of_bilinear(f));
  const CliffElt idempotent = ctx.scalar(2).inverse() * (CliffElt::unit(cl) + CliffElt::blade(cl, 1));
  const std::uint64_t seed = rng.next();
  std::vector<std::vector<std::size_t>> dims;
  std::vector<std::vector<ScalarVec>> ideals;
  for (const BilinearForm& form : {f, f + a}) {
    const auto ideal = left_ideal_basis(form, idempotent);
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < 4; ++i) gens.push_back(rho_matrix(form, CliffElt::blade(cl, Blade{1} << i)).entries);
    dims.push_back(invariant_probe(restrict_to(gens, ideal), seed).dims);
    ideals.push_back(ideal);
  }
  p.require(ideals[0].size() == 8 && ideals[1].size() == 8, "left ideal is not 8-dimensional");
  const Matrix m = bl_matrix(a).entries;
  std::vector<ScalarVec> images;
  for (const auto& v : ideals[0]) images.push_back(m.apply(v));
  std::vector<ScalarVec> both = ideals[1];
  both.insert(both.end(), images.begin(), images.end());
  p.require(rank(Matrix::from_columns(ctx.field, m.rows(), both)) == ideals[1].size(), "M_A does not map ideal onto ideal");
  p.require(dims[0] == dims[1], "invariant subspace dimensions differ");
  p.require(!dims[0].empty(), "no invariant subspace found");
}

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"scalar.field-axioms", "field axioms on random triples", Fields::All, 1, 1, false, field_axioms},
      {"scalar.parse-print", "parse(print(a)) = a", Fields::All, 1, 1, false, parse_print},
      {"scalar.fermat", "a^p = a in GF(p)", Fields::Prime, 1, 1, false, fermat},
      {"forms.polar", "polar form of Q", Fields::All, 1, 5, false, polar_check},
      {"forms.quad-of-bilinear", "Q_F(x) = F(x, x)", Fields::All, 1, 5, false, quad_of_bilinear_check},
      {"forms.bf2", "bf2_bilinear reproduces Q", Fields::All, 1, 4, false, bf2_check},
      {"forms.pfaffian-det", "Pf(A)^2 = det(A)", Fields::All, 2, 6, true, pfaffian_check},
      {"forms.split", "symmetric plus alternating split", Fields::NotTwo, 1, 5, false, split_check},
      {"forms.dual-roundtrip", "dual_two_form and alt_of_dual are inverse", Fields::All, 1, 5, false, dual_roundtrip},
      {"tensor.antiderivation", "i_f^2 = 0 and i_f i_g = -i_g i_f", Fields::All, 1, 5, false, antiderivation},
      {"tensor.e-i-anticommutator", "e_x i_f + i_f e_x = f(x)", Fields::All, 1, 5, false, e_i_anticommutator},
      {"tensor.lambda-commutation", "graded commutation of i_f and Lambda_F", Fields::All, 1, 4, false,
       lambda_commutation},
      {"tensor.divided-powers", "a_k a_l relations", Fields::All, 1, 4, false, divided_powers},
      {"tensor.exp-divided", "lambda_F = exp(a_1)", Fields::CharZero, 1, 4, false, exp_divided_check},
      {"lambda.group-law", "lambda_F lambda_G = lambda_(F+G)", Fields::All, 1, 5, false, lambda_group_law},
      {"lambda.commutes-i", "lambda_F commutes with i_f", Fields::All, 1, 5, false, lambda_commutes_i},
      {"lambda.radical-lemma", "composition of Lambda maps on radical vectors", Fields::All, 1, 4, false,
       radical_lemma},
      {"lambda.expansion", "lambda_F = sum of divided powers", Fields::All, 1, 5, false, lambda_expansion},
      {"lambda.parity", "alpha lambda_F = lambda_F alpha", Fields::All, 1, 5, false, lambda_parity},
      {"clifford.homomorphism", "pi_Q is multiplicative", Fields::All, 1, 5, false, pi_homomorphism},
      {"clifford.nontrivial", "pi_Q(1) = 1", Fields::All, 1, 5, false, pi_nontrivial},
      {"clifford.quotient-squares", "pi_Q(x x - Q(x)) = 0", Fields::All, 1, 5, false, quotient_squares},
      {"bl.commutation-square", "bl_F pi_Q' = pi_Q lambda_F", Fields::All, 1, 4, false, commutation_square_check},
      {"bl.group-law", "bl_F bl_G = bl_(F+G)", Fields::All, 1, 4, false, bl_group_law_check},
      {"bL.homomorphism", "bL_F is multiplicative", Fields::All, 1, 4, false, bL_homomorphism_check},
      {"twist.associative", "twisted product is associative", Fields::All, 1, 4, false, twist_associative_check},
      {"twist.transport", "twisted product is transported by bl_F", Fields::All, 1, 4, false,
       twist_transport_check},
      {"exp.gauge", "exp(i_A*) = bl_A", Fields::CharZero, 1, 4, false, exp_gauge},
      {"exp.conjugation", "exp(i_A*) e_x exp(-i_A*) = e_x + i_x^A", Fields::CharZero, 1, 4, false, exp_conjugation},
      {"symbol.roundtrip", "quantize and symbol are inverse", Fields::NotTwo, 1, 4, false, symbol_roundtrip},
      {"symbol.nfac", "n! q(y_1 ^ ... ^ y_n) = antisymmetrized product", Fields::NotTwo, 1, 4, false, symbol_nfac},
      {"char2.bl-suite", "bl and bL identities with F = bf2_bilinear(Q)", Fields::CharTwo, 1, 4, false, char2_suite},
      {"rho.homomorphism", "rho_F is multiplicative", Fields::All, 1, 3, false, rho_homomorphism},
      {"rho.unit-column", "rho_F(u) applied to 1 is bl_F(u)", Fields::All, 1, 3, false, rho_unit_column},
      {"rho.equivalence", "rho_(F+A) M_A = M_A rho_F", Fields::All, 1, 3, false, rho_equivalence},
      {"probe.intertwined", "probe dims agree on twisted and untwisted left ideals", Fields::NotTwo, 4, 4, false,
       probe_intertwined},
  };
  return suites;
}

}  // namespace

std::vector<SuiteInfo> list_suites() {
  std::vector<SuiteInfo> out;
  for (const auto& s : registry()) out.push_back(SuiteInfo{s.id, s.description, default_fields(s.fields)});
  return out;
}

SuiteResult run_suite(const std::string& id, const SuiteOptions& options) {
  const auto& suites = registry();
  auto it = std::find_if(suites.begin(), suites.end(), [&](const Suite& s) { return s.id == id; });
  if (it == suites.end()) throw ParseError("unknown identity suite \"" + id + "\"");
  const Suite& suite = *it;
  if (options.field && !field_allowed(suite.fields, *options.field)) {
    throw DomainError("suite " + id + " does not support field " + options.field->to_string());
  }
  if (options.dim) {
    const bool fixed = suite.min_dim == suite.max_dim && suite.max_dim > 1;
    if (*options.dim < suite.min_dim || (fixed && *options.dim != suite.min_dim) || *options.dim > kMaxRepDim ||
        (suite.even_dim && *options.dim % 2 != 0)) {
      throw DomainError("suite " + id + " does not support dim " + std::to_string(*options.dim));
    }
  }
  const auto fields = options.field ? std::vector<FieldSpec>{*options.field} : default_fields(suite.fields);

  SuiteResult result;
  result.id = id;
  result.seed = options.seed;
  result.samples = options.samples;
  for (std::size_t k = 0; k < options.samples; ++k) {
    Rng rng(options.seed * 0x9E3779B97F4A7C15ULL + k + 1);
    const FieldSpec& field = fields[k % fields.size()];
    std::size_t dim = options.dim.value_or(0);
    if (!options.dim) {
      if (suite.even_dim) {
        dim = 2 * (suite.min_dim / 2 + rng.below((suite.max_dim - suite.min_dim) / 2 + 1));
      } else {
        dim = suite.min_dim + rng.below(suite.max_dim - suite.min_dim + 1);
      }
    }
    const AlgebraContext ctx(dim, field);
    Probe probe;
    try {
      suite.body(rng, ctx, probe);
    } catch (const std::exception& e) {
      probe.require(false, std::string("exception: ") + e.what());
    }
    if (probe.failure()) {
      ++result.failed;
      result.failures.push_back(SuiteFailure{k, field.to_string(), dim, *probe.failure()});
    } else {
      ++result.passed;
    }
  }
  return result;
}

}  // namespace cliffbundle
