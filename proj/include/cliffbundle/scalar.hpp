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
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "cliffbundle/error.hpp"

namespace cliffbundle {

/// The ground field: either the rationals or a prime field GF(p) with p
/// fitting in a machine word.
class FieldSpec {
 public:
  /// Defaults to the rationals.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws DomainError when p is not prime or does not fit below 2^63.
  static FieldSpec prime(std::uint64_t p);

  /// Parses "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals, p otherwise.
  std::uint64_t characteristic() const { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

std::uint64_t characteristic(const FieldSpec& spec);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p). Arithmetic between scalars of
/// different fields throws DomainError.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;
  Scalar(const FieldSpec& field, long long value);
  Scalar(const FieldSpec& field, const mpq_class& value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

  /// Accepts "<int>" or "<int>/<int>"; the fractional form is rejected for
  /// prime fields.
  static Scalar parse(std::string_view text, const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Equality requires the same field.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

  /// Only meaningful over the rationals.
  const mpq_class& rational() const { return q_; }
  /// Only meaningful over a prime field.
  std::uint64_t residue() const { return r_; }

 private:
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace cliffbundle
