// Copyright 2026 The schnyder-greedy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace sgr {

struct Issue {
  std::string check;
  std::string message;
  std::vector<int> vertices;
};

/// Outcome of a validator. `issues` are failures; `notes` are audit entries
/// (boundary cases and the like) that do not make the report fail.
struct ValidationReport {
  std::vector<Issue> issues;
  std::vector<Issue> notes;

  bool ok() const { return issues.empty(); }

  void fail(std::string check, std::string message, std::vector<int> vertices = {}) {
    issues.push_back({std::move(check), std::move(message), std::move(vertices)});
  }
  void note(std::string check, std::string message, std::vector<int> vertices = {}) {
    notes.push_back({std::move(check), std::move(message), std::move(vertices)});
  }
  void merge(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace sgr
