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

#include <cstddef>
#include <span>
#include <vector>

#include "cliffbundle/scalar.hpp"

namespace cliffbundle {

using ScalarVec = std::vector<Scalar>;

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, std::span<const ScalarVec> columns);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ScalarVec column(std::size_t j) const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  ScalarVec apply(std::span<const Scalar> v) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; pivots by first nonzero entry.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
Scalar determinant(Matrix m);
/// Basis of { v : m v = 0 }.
std::vector<ScalarVec> nullspace(const Matrix& m);
/// Basis (as vectors) of the column space, taken from the pivot columns.
std::vector<ScalarVec> column_basis(const Matrix& m);
/// Solves a X = b exactly; throws DomainError when no solution exists.
Matrix solve(const Matrix& a, const Matrix& b);
/// Inverse of a square matrix; throws DomainError when singular.
Matrix inverse(const Matrix& m);

}  // namespace cliffbundle
