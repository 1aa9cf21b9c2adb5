// Copyright 2026 The postdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POSTDIST_SUITE_HPP
#define POSTDIST_SUITE_HPP

// Seeded verification corpus: for each statement id, `trials` instances that
// satisfy the statement's hypotheses, cycling through the configured input
// dimensions. Instance i of statement S is generated from
// derive_seed(seed, S, i) alone, so any subset of statements reproduces the
// same instances.

#include <cstdint>
#include <string>
#include <vector>

#include "postdist/theorems.hpp"

namespace postdist {

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims = {2, 3};
  std::size_t trials = 10;
  OptimizerConfig optimizer = default_suite_optimizer();

  static OptimizerConfig default_suite_optimizer();
};

/// L1 F2 T1 T2 T3 C1 T4 C2 L2 T5 T6 CE1 CE2 CE3, in report order.
const std::vector<std::string>& statement_ids();

/// Throws ParameterError on an unknown id. "all" expands to every id.
std::vector<std::string> parse_statement_list(const std::string& spec);

struct SuiteEntry {
  std::size_t instance;
  TheoremReport report;
};

struct SuiteResult {
  std::vector<SuiteEntry> entries;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

SuiteResult run_suite(const std::vector<std::string>& ids, const SuiteConfig& cfg);

/// One line per entry, failing side conditions indented below it, then a
/// summary line. Byte-identical for identical inputs.
std::string format_suite(const SuiteResult& result);
std::string format_entry(const SuiteEntry& entry);

}  // namespace postdist

#endif  // POSTDIST_SUITE_HPP
