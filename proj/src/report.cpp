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

#include "ncl/report.hpp"

namespace ncl {

void VerifyReport::merge(const VerifyReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries_) {
    if (!e.pass) ++n;
  }
  return n;
}

namespace {

// "direct(8122 products)" and "direct(950 products)" belong to the same
// family; chain methods group only when their premise list is identical.
std::string method_family(const std::string& m) {
  auto p = m.find('(');
  return p == std::string::npos ? m : m.substr(0, p);
}

}  // namespace

std::string VerifyReport::to_text() const {
  std::string out;
  std::size_t i = 0;
  while (i < entries_.size()) {
    std::size_t j = i + 1;
    const auto& e = entries_[i];
    bool groupable = e.index != CheckEntry::kNoIndex && e.detail.empty();
    while (groupable && j < entries_.size()) {
      const auto& f = entries_[j];
      if (f.name != e.name || f.pass != e.pass || f.index != entries_[j - 1].index + 1 ||
          !f.detail.empty() || method_family(f.method) != method_family(e.method)) {
        break;
      }
      ++j;
    }
    out += e.pass ? "ok   " : "FAIL ";
    out += e.name;
    if (e.index != CheckEntry::kNoIndex) {
      out += " n=" + std::to_string(e.index);
      if (j - i > 1) out += ".." + std::to_string(entries_[j - 1].index);
    }
    out += "  [" + (j - i > 1 ? method_family(e.method) : e.method) + "]";
    if (!e.detail.empty()) out += "  " + e.detail;
    out += '\n';
    i = j;
  }
  std::size_t bad = failures();
  if (bad == 0) {
    out += "all " + std::to_string(entries_.size()) + " checks passed\n";
  } else {
    out += std::to_string(bad) + " of " + std::to_string(entries_.size()) + " checks FAILED\n";
  }
  return out;
}

}  // namespace ncl
