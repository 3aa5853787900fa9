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

#include "cliffbundle/repcheck.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "cliffbundle/random.hpp"

namespace cliffbundle {

namespace {

void require_rep_dim(const AlgebraContext& ctx) {
  if (ctx.dim > kMaxRepDim) {
    throw DomainError("representation matrices are limited to dim <= " + std::to_string(kMaxRepDim));
  }
}

// Incrementally maintained reduced row echelon basis.
class Echelon {
 public:
  Echelon(const FieldSpec& field, std::size_t dim) : field_(field), dim_(dim) {}

  ScalarVec reduce(ScalarVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar factor = v[pivots_[r]];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!rows_[r][j].is_zero()) v[j] -= factor * rows_[r][j];
      }
    }
    return v;
  }

  bool contains(const ScalarVec& v) const {
    const ScalarVec rest = reduce(v);
    return std::all_of(rest.begin(), rest.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  /// Returns the new normalized row, or nothing when v is dependent.
  std::optional<ScalarVec> insert(const ScalarVec& v) {
    ScalarVec w = reduce(v);
    auto it = std::find_if(w.begin(), w.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == w.end()) return std::nullopt;
    const auto pivot = static_cast<std::size_t>(it - w.begin());
    const Scalar inv = w[pivot].inverse();
    for (auto& x : w) x *= inv;
    for (auto& row : rows_) {
      const Scalar factor = row[pivot];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!w[j].is_zero()) row[j] -= factor * w[j];
      }
    }
    rows_.push_back(w);
    pivots_.push_back(pivot);
    return w;
  }

  std::size_t size() const { return rows_.size(); }
  const std::vector<ScalarVec>& rows() const { return rows_; }

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<ScalarVec> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t module_dim(std::span<const Matrix> mats) {
  if (mats.empty()) throw DomainError("invariant_probe needs at least one matrix");
  const std::size_t d = mats.front().rows();
  for (const auto& m : mats) {
    if (m.rows() != d || m.cols() != d) throw DomainError("invariant_probe: matrix dimension mismatch");
    if (!(m.field() == mats.front().field())) throw DomainError("invariant_probe: field mismatch");
  }
  return d;
}

// Monic minimal polynomial of a square matrix, lowest degree first.
ScalarVec minimal_polynomial(const Matrix& c) {
  const std::size_t d = c.rows();
  const FieldSpec& field = c.field();
  std::vector<ScalarVec> powers;
  Matrix power = Matrix::identity(field, d);
  for (std::size_t k = 0; k <= d; ++k) {
    ScalarVec flat;
    flat.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) flat.push_back(power(i, j));
    }
    powers.push_back(std::move(flat));
    const Matrix cols = Matrix::from_columns(field, d * d, powers);
    auto kernel = nullspace(cols);
    if (!kernel.empty()) {
      ScalarVec poly = kernel.front();
      const Scalar lead = poly.back().inverse();
      for (auto& x : poly) x *= lead;
      return poly;
    }
    power = power * c;
  }
  throw DomainError("minimal polynomial search failed");
}

Scalar evaluate(const ScalarVec& poly, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(n / k);
    }
  }
  return out;
}

// Roots of `poly` in the field: rational root theorem over Q, exhaustive
// search over small prime fields.
std::vector<Scalar> field_roots(const ScalarVec& poly) {
  const FieldSpec& field = poly.front().field();
  std::vector<Scalar> roots;
  if (!field.is_rational()) {
    const std::uint64_t limit = std::min<std::uint64_t>(field.characteristic(), 512);
    for (std::uint64_t c = 0; c < limit; ++c) {
      Scalar x(field, static_cast<long long>(c));
      if (evaluate(poly, x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  mpz_class common = 1;
  for (const auto& a : poly) common = lcm(common, a.rational().get_den());
  std::vector<mpz_class> ints;
  for (const auto& a : poly) ints.push_back(mpz_class(a.rational() * common));
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar::zero(field));
  if (low + 1 >= ints.size()) return roots;
  mpz_class constant = abs(ints[low]);
  mpz_class lead = abs(ints.back());
  if (!constant.fits_slong_p() || !lead.fits_slong_p() || constant > 1000000 || lead > 1000000) return roots;
  for (long long num : divisors(constant.get_si())) {
    for (long long den : divisors(lead.get_si())) {
      if (std::gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        Scalar x(field, mpq_class(mpz_class(static_cast<long>(sign * num)), mpz_class(static_cast<long>(den))));
        if (evaluate(poly, x).is_zero()) roots.push_back(x);
      }
    }
  }
  return roots;
}

Matrix random_algebra_element(Rng& rng, std::span<const Matrix> mats) {
  const std::size_t d = mats.front().rows();
  const FieldSpec& field = mats.front().field();
  Matrix total = Matrix::identity(field, d).scaled(random_scalar(rng, field));
  const std::size_t terms = 1 + rng.below(3);
  for (std::size_t t = 0; t < terms; ++t) {
    Matrix product = mats[rng.below(mats.size())];
    const std::size_t length = rng.below(3);
    for (std::size_t k = 0; k < length; ++k) product = product * mats[rng.below(mats.size())];
    total += product.scaled(random_nonzero_scalar(rng, field));
  }
  return total;
}

class ProbeState {
 public:
  ProbeState(std::span<const Matrix> mats, ProbeReport& report) : mats_(mats), report_(report) {}

  void offer(std::vector<ScalarVec> basis, const std::string& method) {
    const std::size_t d = report_.module_dim;
    if (basis.empty() || basis.size() >= d) return;
    if (std::find(report_.dims.begin(), report_.dims.end(), basis.size()) != report_.dims.end()) return;
    if (!is_invariant(mats_, basis)) return;
    report_.dims.push_back(basis.size());
    report_.witnesses.push_back(InvariantSubspace{basis.size(), method, std::move(basis)});
  }

 private:
  std::span<const Matrix> mats_;
  ProbeReport& report_;
};

// Vector-spinning strategies on one set of matrices; `finish` turns a found
// subspace into one for the original action.
void spin_strategies(std::span<const Matrix> mats, Rng& rng, const std::string& tag,
                     const std::function<void(std::vector<ScalarVec>, const std::string&)>& found) {
  const std::size_t d = mats.front().rows();
  const FieldSpec& field = mats.front().field();

  std::vector<ScalarVec> seeds;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    ScalarVec e(d, Scalar::zero(field));
    e[k] = Scalar::one(field);
    seeds.push_back(std::move(e));
    auto sub = spin(mats, seeds);
    found(sub, tag + "flag");
    if (sub.size() == d) break;
  }

  for (int trial = 0; trial < 6; ++trial) {
    ScalarVec v;
    for (std::size_t k = 0; k < d; ++k) v.push_back(random_scalar(rng, field));
    std::vector<ScalarVec> one{v};
    found(spin(mats, one), tag + "random-vector");
  }

  for (int trial = 0; trial < 12; ++trial) {
    const Matrix a = random_algebra_element(rng, mats);
    for (const auto& v : nullspace(a)) {
      std::vector<ScalarVec> one{v};
      found(spin(mats, one), tag + "kernel-spin");
    }
  }
}

}  // namespace

ScalarVec coordinates(const CliffElt& w) {
  require_rep_dim(w.base());
  ScalarVec v(std::size_t{1} << w.base().dim, w.base().zero());
  for (const auto& [b, c] : w.terms()) v[b] = c;
  return v;
}

CliffElt from_coordinates(const CliffordContext& cctx, std::span<const Scalar> coords) {
  require_rep_dim(cctx.base());
  if (coords.size() != (std::size_t{1} << cctx.dim())) throw DomainError("coordinate vector length mismatch");
  CliffElt w(cctx);
  for (std::size_t k = 0; k < coords.size(); ++k) w.add_term(static_cast<Blade>(k), coords[k]);
  return w;
}

EndoMatrix endomorphism_matrix(const AlgebraContext& ctx, const std::function<CliffElt(const CliffElt&)>& map) {
  require_rep_dim(ctx);
  const auto ext = CliffordContext::exterior(ctx);
  const std::size_t size = std::size_t{1} << ctx.dim;
  Matrix m(ctx.field, size, size);
  for (std::size_t col = 0; col < size; ++col) {
    const CliffElt image = map(CliffElt::blade(ext, static_cast<Blade>(col)));
    ext.require_same(image.cctx());
    for (const auto& [b, c] : image.terms()) m(b, col) = c;
  }
  return EndoMatrix{ctx, std::move(m)};
}

EndoMatrix rho_matrix(const BilinearForm& f, const CliffElt& u) {
  require_rep_dim(f.ctx());
  require_deformation(f, u.cctx(), CliffordContext::exterior(f.ctx()));
  return endomorphism_matrix(f.ctx(), [&](const CliffElt& v) { return bL_apply(f, u, v); });
}

EndoMatrix bl_matrix(const BilinearForm& a) {
  if (!a.is_alternating()) throw DomainError("bl_matrix expects an alternating form");
  const auto ext = CliffordContext::exterior(a.ctx());
  return endomorphism_matrix(a.ctx(), [&](const CliffElt& v) { return bl_map(a, ext, ext, v); });
}

EquivalenceReport check_equivalence(const BilinearForm& f, const BilinearForm& a, std::span<const CliffElt> samples) {
  if (!a.is_alternating()) throw DomainError("check_equivalence: the twist must be an alternating form");
  EquivalenceReport report;
  report.identity = "rho.equivalence";
  report.samples = samples.size();
  const BilinearForm twisted = f + a;
  const Matrix intertwiner = bl_matrix(a).entries;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Matrix lhs = rho_matrix(twisted, samples[s]).entries * intertwiner;
    const Matrix rhs = intertwiner * rho_matrix(f, samples[s]).entries;
    if (lhs == rhs) continue;
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
      for (std::size_t j = 0; j < lhs.cols(); ++j) {
        if (!(lhs(i, j) == rhs(i, j))) {
          report.failures.push_back(EquivalenceFailure{s, i, j, lhs(i, j), rhs(i, j)});
          i = lhs.rows();
          break;
        }
      }
    }
  }
  return report;
}

std::vector<ScalarVec> spin(std::span<const Matrix> mats, std::span<const ScalarVec> seeds) {
  if (seeds.empty()) return {};
  const std::size_t d = seeds.front().size();
  Echelon echelon(seeds.front().front().field(), d);
  std::deque<ScalarVec> queue(seeds.begin(), seeds.end());
  while (!queue.empty() && echelon.size() < d) {
    auto row = echelon.insert(queue.front());
    queue.pop_front();
    if (!row) continue;
    for (const auto& m : mats) queue.push_back(m.apply(*row));
  }
  return echelon.rows();
}

bool is_invariant(std::span<const Matrix> mats, std::span<const ScalarVec> basis) {
  if (basis.empty()) return true;
  Echelon echelon(basis.front().front().field(), basis.front().size());
  for (const auto& b : basis) echelon.insert(b);
  for (const auto& m : mats) {
    for (const auto& b : basis) {
      if (!echelon.contains(m.apply(b))) return false;
    }
  }
  return true;
}

std::vector<Matrix> restrict_to(std::span<const Matrix> mats, std::span<const ScalarVec> basis) {
  if (basis.empty()) throw DomainError("restrict_to: empty basis");
  const Matrix b = Matrix::from_columns(basis.front().front().field(), basis.front().size(), basis);
  if (rank(b) != basis.size()) throw DomainError("restrict_to: basis vectors are dependent");
  std::vector<Matrix> out;
  for (const auto& m : mats) out.push_back(solve(b, m * b));
  return out;
}

std::vector<Matrix> commutant(std::span<const Matrix> mats) {
  const std::size_t d = module_dim(mats);
  const FieldSpec& field = mats.front().field();
  Matrix equations(field, mats.size() * d * d, d * d);
  std::size_t row = 0;
  for (const auto& m : mats) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j, ++row) {
        // (X M - M X)_{ij}
        for (std::size_t k = 0; k < d; ++k) {
          if (!m(k, j).is_zero()) equations(row, i * d + k) += m(k, j);
          if (!m(i, k).is_zero()) equations(row, k * d + j) -= m(i, k);
        }
      }
    }
  }
  std::vector<Matrix> out;
  for (const auto& x : nullspace(equations)) {
    Matrix c(field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) c(i, j) = x[i * d + j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ScalarVec> left_ideal_basis(const BilinearForm& f, const CliffElt& idempotent) {
  require_rep_dim(f.ctx());
  std::vector<Matrix> generators;
  for (std::size_t i = 0; i < f.ctx().dim; ++i) {
    const CliffElt e = CliffElt::blade(idempotent.cctx(), Blade{1} << i);
    generators.push_back(rho_matrix(f, e).entries);
  }
  const auto ext = CliffordContext::exterior(f.ctx());
  std::vector<ScalarVec> seed{coordinates(bl_map(f, idempotent.cctx(), ext, idempotent))};
  return spin(generators, seed);
}

ProbeReport invariant_probe(std::span<const Matrix> mats, std::uint64_t seed) {
  ProbeReport report;
  report.seed = seed;
  report.module_dim = module_dim(mats);
  const std::size_t d = report.module_dim;
  const FieldSpec& field = mats.front().field();
  ProbeState state(mats, report);
  Rng rng(seed);

  spin_strategies(mats, rng, "", [&](std::vector<ScalarVec> basis, const std::string& method) {
    state.offer(std::move(basis), method);
  });

  // Kernels, images and eigenspaces of commutant elements are invariant.
  std::vector<Matrix> centralizer = commutant(mats);
  std::vector<Matrix> candidates = centralizer;
  for (int trial = 0; trial < 8 && centralizer.size() > 1; ++trial) {
    Matrix c(field, d, d);
    for (const auto& basis_elt : centralizer) c += basis_elt.scaled(random_scalar(rng, field, 30));
    candidates.push_back(std::move(c));
  }
  for (const auto& c : candidates) {
    state.offer(column_basis(c), "commutant-image");
    for (const auto& root : field_roots(minimal_polynomial(c))) {
      state.offer(nullspace(c - Matrix::identity(field, d).scaled(root)), "commutant-eigenspace");
    }
  }

  // A subspace stable under the transposes has a stable annihilator.
  std::vector<Matrix> transposes;
  for (const auto& m : mats) transposes.push_back(m.transpose());
  spin_strategies(transposes, rng, "dual-", [&](std::vector<ScalarVec> basis, const std::string& method) {
    if (basis.empty() || basis.size() >= d) return;
    state.offer(nullspace(Matrix::from_columns(field, d, basis).transpose()), method);
  });

  std::vector<std::size_t> order(report.dims.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return report.dims[a] < report.dims[b]; });
  ProbeReport sorted{report.seed, report.module_dim, {}, {}};
  for (auto k : order) {
    sorted.dims.push_back(report.dims[k]);
    sorted.witnesses.push_back(std::move(report.witnesses[k]));
  }
  return sorted;
}

ProbeReport invariant_probe(std::span<const EndoMatrix> mats, std::uint64_t seed) {
  std::vector<Matrix> plain;
  for (const auto& m : mats) plain.push_back(m.entries);
  return invariant_probe(plain, seed);
}

}  // namespace cliffbundle
