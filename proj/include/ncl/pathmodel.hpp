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

#include <cstdint>
#include <string>
#include <vector>

#include "ncl/dynamics.hpp"
#include "ncl/ncpoly.hpp"
#include "ncl/report.hpp"

namespace ncl {

// Weighted walk graph behind a sequence: entries arise as
//     partition(steps_per_index * n) * base,
// where partition(s) sums, over all s-step walks from the start vertex to
// an accepting one, the ordered product of the edge weights along the walk
// (the empty walk contributes 1).  Every weight is a Laurent monomial or a
// short positive sum of them, which is what makes positivity of the
// sequence entries visible term by term.
struct PathModel {
  CaseTag tag{};
  std::vector<std::string> names;          // names[v], used in listings
  std::vector<std::vector<NCPoly>> edge;   // edge[i][j]; a zero entry means no edge
  int start = 0;
  std::vector<int> accept;
  NCPoly base;
  // Walk steps consumed per sequence index: 2 on the (2,2) segment, where a
  // round trip needs an up and a down move per index, 1 on the barbell.
  // Functions below take raw step counts, never the sequence index, so odd
  // lengths on the segment stay expressible (their partition vanishes).
  int steps_per_index = 1;
  // Sequence index reached by partition(steps_per_index * n) * base: for
  // the (2,2) model this is R_n itself; the (1,4) flavors produce the even
  // subsequence, u_n for the xy data and u_{n+1} for the XY data (whose u_0
  // is not invertible, so its series is anchored one step later).
  long u_offset = 0;

  std::size_t size() const noexcept { return names.size(); }
};

// Models exist for B22, B14_xy and B14_XY; the (4,1) translates are index
// shifts of the (1,4) sequences and have no automaton of their own, so
// asking for one throws UnsupportedCase.
PathModel build_model(CaseTag tag);

// Sum over accepted length-n walks via powers of the weight matrix.
NCPoly partition_fn_matrix(const PathModel& m, long n);

struct PathListing {
  NCPoly total;
  std::uint64_t count = 0;      // accepted walks
  std::uint64_t monomials = 0;  // walk weight products counted term by term
  std::vector<std::string> paths;
  std::vector<NCPoly> weights;  // parallel to paths
};

// Same sum by explicit depth-first enumeration, visiting successors in
// ascending vertex order, so the listing is lexicographic in the vertex
// sequences.  budget caps the number of DFS steps; exceeding it throws
// BudgetExceeded.  When keep_paths is set each walk is recorded as a vertex
// name string (including the start vertex) next to its weight product.
PathListing partition_fn_enumerate(const PathModel& m, long n,
                                   std::uint64_t budget = 1'000'000,
                                   bool keep_paths = false);

// Coefficients 0..n_terms of the nested geometric series attached to the
// model: for the (2,2) case three levels deep, one per weight, and for the
// (1,4) flavors the two-level form with the loop weight inside.  Equals the
// walk partition function coefficientwise.
std::vector<NCPoly> continued_fraction_series(CaseTag tag, long n_terms);

// Multiplies the truncated series F(t) on the left by 1 - tK + t^2 C and
// checks the product against the closed numerator 1 + t(y1 - K): one entry
// per available power of t, each of which must cancel to the expected
// coefficient exactly.  This restates the linear recursion at the series
// level without going through the sequence entries.
VerifyReport series_multiply_check(CaseTag tag,
                                   const std::vector<NCPoly>& series,
                                   std::uint64_t budget = 40'000'000);

}  // namespace ncl
