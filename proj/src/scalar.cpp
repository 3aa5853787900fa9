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

#include "cliffbundle/scalar.hpp"

#include <cctype>
#include <limits>

namespace cliffbundle {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These bases are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 63U) || !is_prime(p)) {
    throw DomainError("field characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view digits = text.substr(prefix.size());
    if (all_digits(digits) && digits.size() <= 19) {
      std::uint64_t p = std::stoull(std::string(digits));
      if (!is_prime(p) || p >= (1ULL << 63U)) {
        throw ParseError("field \"" + std::string(text) + "\": modulus is not a supported prime");
      }
      return FieldSpec(p);
    }
  }
  throw ParseError("malformed field specification \"" + std::string(text) + "\" (expected Q or Fp:<p>)");
}

std::string FieldSpec::to_string() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

std::uint64_t characteristic(const FieldSpec& spec) { return spec.characteristic(); }

Scalar::Scalar(const FieldSpec& field, long long value) : field_(field) {
  if (field_.is_rational()) {
    q_ = mpq_class(mpz_class(static_cast<signed long>(value)));
  } else {
    std::uint64_t p = field_.characteristic();
    __int128 v = static_cast<__int128>(value) % static_cast<__int128>(p);
    if (v < 0) v += p;
    r_ = static_cast<std::uint64_t>(v);
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
    q_.canonicalize();
  } else {
    std::uint64_t p = field_.characteristic();
    std::uint64_t den = reduce(value.get_den(), p);
    if (den == 0) throw DomainError("denominator vanishes in " + field_.to_string());
    r_ = mulmod(reduce(value.get_num(), p), powmod(den, p - 2, p), p);
  }
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& field) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  constexpr std::string_view unicode_minus = "\xE2\x88\x92";
  if (s.substr(0, unicode_minus.size()) == unicode_minus) {
    negative = true;
    s.remove_prefix(unicode_minus.size());
  } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  std::string_view num = s;
  std::string_view den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!field.is_rational()) {
      throw ParseError("fractions are not accepted over " + field.to_string() + ": \"" + std::string(text) + "\"");
    }
    if (!all_digits(den)) throw ParseError("malformed scalar \"" + std::string(text) + "\"");
  }
  if (!all_digits(num)) throw ParseError("malformed scalar \"" + std::string(text) + "\"");

  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Scalar(field, mpq_class(n, d));
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw DomainError("field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = field_.characteristic() - r_;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    std::uint64_t p = field_.characteristic();
    out.r_ = powmod(r_, p - 2, p);
  }
  return out;
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (!field_.is_rational()) {
    Scalar out = *this;
    out.r_ = powmod(r_, e, field_.characteristic());
    return out;
  }
  Scalar result = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    std::uint64_t p = field_.characteristic();
    r_ += rhs.r_;
    if (r_ >= p) r_ -= p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ -= rhs.q_;
  } else {
    std::uint64_t p = field_.characteristic();
    r_ = r_ >= rhs.r_ ? r_ - rhs.r_ : r_ + (p - rhs.r_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = mulmod(r_, rhs.r_, field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

}  // namespace cliffbundle
