/*
   Copyright 2026 The ncl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <climits>
#include <string>
#include <vector>

namespace ncl {

// Result of one identity instance.  method records how the instance was
// established: "direct(<N> products)" for a streamed expansion, or
// "chain[<premises>]" when the identity was reduced to directly checked
// premises by an exact rewriting argument.
struct CheckEntry {
  static constexpr long kNoIndex = LONG_MIN;

  std::string name;
  long index = kNoIndex;
  bool pass = false;
  std::string method;
  std::string detail;  // first counterexample term, or auxiliary info
};

class VerifyReport {
 public:
  void add(CheckEntry e) { entries_.push_back(std::move(e)); }
  void merge(const VerifyReport& other);

  bool all_passed() const;
  std::size_t failures() const;
  const std::vector<CheckEntry>& entries() const noexcept { return entries_; }

  // One line per run of consecutive indices of the same check with the same
  // verdict and method family, plus a summary line.
  std::string to_text() const;

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace ncl
