// include/puncap/common.hpp

// Copyright 2026 The puncap authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PUNCAP_COMMON_HPP
#define PUNCAP_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace puncap {

/// Raised for malformed or unusable input data (bad files, failed parses,
/// version mismatches). The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Per-line issues collected while parsing line-oriented inputs.
/// Parsers keep going past recoverable problems and report them here;
/// they throw DataError only when nothing valid could be read at all.
struct ParseReport {
  struct Issue {
    std::size_t line = 0;  // 1-based; 0 when not line-addressable
    std::string message;
  };
  std::vector<Issue> issues;

  void add(std::size_t line, std::string message) {
    issues.push_back(Issue{line, std::move(message)});
  }
  bool empty() const { return issues.empty(); }
};

}  // namespace puncap

#endif  // PUNCAP_COMMON_HPP
