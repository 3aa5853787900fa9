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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffbundle/scalar.hpp"

namespace cliffbundle {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 20;
  /// Restricts every sample to one field; otherwise samples cycle through the
  /// suite's default fields.
  std::optional<FieldSpec> field;
  /// Fixes the dimension; otherwise each sample draws one in the suite's range.
  std::optional<std::size_t> dim;
};

struct SuiteFailure {
  std::size_t sample = 0;
  std::string field;
  std::size_t dim = 0;
  std::string detail;
};

struct SuiteResult {
  std::string id;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<SuiteFailure> failures;
};

struct SuiteInfo {
  std::string id;
  std::string description;
  std::vector<FieldSpec> default_fields;
};

std::vector<SuiteInfo> list_suites();

/// Runs a named identity suite. Unknown ids throw ParseError; a field or
/// dimension the suite cannot use throws DomainError. Sample k draws from an
/// RNG seeded by (seed, k), so results depend only on the options.
SuiteResult run_suite(const std::string& id, const SuiteOptions& options);

}  // namespace cliffbundle
