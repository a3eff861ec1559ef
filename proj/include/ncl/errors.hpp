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

#include <stdexcept>
#include <string>

namespace ncl {

// Every error thrown by this library derives from Error, so callers can
// catch the whole family at once (the CLI maps subclasses to exit codes).
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Inverting a polynomial that is not a single term with coefficient +-1.
struct NotAUnit : Error {
  explicit NotAUnit(const std::string& what) : Error(what) {}
};

// Commutative Laurent division left a nonzero remainder.
struct DivisionNotExact : Error {
  explicit DivisionNotExact(const std::string& what) : Error(what) {}
};

// right_divide: the linear system over the candidate support is inconsistent
// within the allotted support growth.
struct NoSolutionInSupport : Error {
  explicit NoSolutionInSupport(const std::string& what) : Error(what) {}
};

// right_divide: a solution exists over the rationals but is not integral.
struct NonIntegerSolution : Error {
  explicit NonIntegerSolution(const std::string& what) : Error(what) {}
};

// A trajectory was asked for an index it has not materialized.
struct IndexUnavailable : Error {
  explicit IndexUnavailable(const std::string& what) : Error(what) {}
};

// An enumeration or verification exceeded its work budget.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// The requested operation is not defined for the given case tag.
struct UnsupportedCase : Error {
  explicit UnsupportedCase(const std::string& what) : Error(what) {}
};

// A syllable exponent left the representable range.  With the recursions in
// this project exponents stay tiny; hitting this indicates corrupted input.
struct ExponentOverflow : Error {
  explicit ExponentOverflow(const std::string& what) : Error(what) {}
};

}  // namespace ncl
