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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncl/checker.hpp"
#include "ncl/ncpoly.hpp"
#include "ncl/report.hpp"

namespace ncl {

// The five sequence families handled by this library.  B22 is the (2,2)
// exchange system.  The (1,4) system comes in two seed flavors, and the
// (4,1) families are index translates of those; see seq_41.
enum class CaseTag { B22, B14_xy, B14_XY, B41_xy, B41_XY };

std::string to_string(CaseTag tag);
CaseTag parse_case(std::string_view text);  // throws ParseError

// Exchange exponents: relation at center n reads
//     R_{n+1} C R_{n-1} = 1 + R_n^a,
// with a = odd_power for odd n and a = even_power for even n.
struct CasePowers {
  int odd_power;
  int even_power;
};
CasePowers powers_for(CaseTag tag);

enum class SeedData { xy, XY };

// Materialized slice of one sequence.  r holds R_n for 0 <= n <= top();
// the (1,4) flavors also carry the even-index subsequence u_n = R_{2n}
// they are built from.  c is the commutator monomial (the same word for
// every case) and k the conserved linearizing element, zero for the (4,1)
// translates which have no single three-term linear recursion.
struct Trajectory {
  CaseTag tag{};
  std::map<long, NCPoly> r;
  std::map<long, NCPoly> u;
  NCPoly c;
  NCPoly k;
  Word c_word;

  bool has(long n) const noexcept { return r.count(n) != 0; }
  const NCPoly& at(long n) const;    // throws IndexUnavailable
  const NCPoly& u_at(long n) const;  // throws IndexUnavailable
  long top() const;
};

// (2,2): seeds R_0 = y x y^-1, R_1 = y, iterated through the left linear
// recursion R_{n+1} = K R_n - C R_{n-1}.
Trajectory seq_22(long n_max);

// (1,4): the even subsequence u_{n+2} = K u_{n+1} - C u_n is iterated and
// odd entries are reconstructed as R_{2n+1} = u_n u_{n+1} - C^-1.
// SeedData::xy starts from (x, y); SeedData::XY from the translated data
// with R_1 = y x y^-1, R_2 = y, whose own seeds and K are different.
Trajectory seq_14(SeedData data, long n_max);

// (4,1) families as exact index translates: the xy flavor is the (1,4) XY
// sequence shifted down by one, the XY flavor is the (1,4) xy sequence
// shifted up by one (its index 0 entry comes through the star involution).
Trajectory seq_41(SeedData data, long n_max);

// Sequence member for an arbitrary integer index.  Negative indices go
// through the star involution; the two (1,4) trajectories serve all four
// (1,4)/(4,1) families, and t14_XY may be null for B22.
NCPoly value_at(CaseTag tag, long n, const Trajectory& t22_or_14xy,
                const Trajectory* t14_XY);

// One substitution step (p, q) -> (p q p^-1, (1 + q^a) p^-1).  Inverses of
// single-term units are exact; otherwise the two divisions are delegated to
// right_divide and inherit its errors.
std::pair<NCPoly, NCPoly> mutation_T(int a, const std::pair<NCPoly, NCPoly>& pq,
                                     int support_rounds = 2);

struct VerifyOptions {
  std::uint64_t budget = 40'000'000;  // elementary products per direct check
  std::size_t mem_limit = ProductAccum::kDefaultMemLimit;
};

// Exchange relation R_{n+1} C R_{n-1} = 1 + R_n^a at every materialized
// center.  Each center is checked by direct expansion when the predicted
// product count fits the budget; beyond that the relation is reduced to
// directly checked premises (linear recursions for (2,2), the quasi
// commutation and cube identities for (1,4)), and the report's method field
// says which route ran.
VerifyReport verify_nonlinear(const Trajectory& t, const VerifyOptions& opt = {});

// The conserved structure: linear recursions on both sides, quasi
// commutation, and for the (1,4) flavors the shift and cube identities,
// the C^-1 coefficient facts and the weight identities.
VerifyReport verify_conserved(const Trajectory& t, const VerifyOptions& opt = {});

// Iterates the exchange relation for arbitrary (b, c) via right division
// and searches for a period p and conjugation power j with
//     R_{n+p} = C^j R_n C^-j   for all computed n.
// The finite-type data (1,1), (1,2), (1,3) should close up; anything that
// goes wrong on the way (division failures, no match) is reported in note
// rather than thrown, so callers can surface skips explicitly.
struct ProbeResult {
  bool found = false;
  long period = 0;
  long conj_power = 0;
  long checked_to = 0;
  std::string note;
  std::vector<NCPoly> entries;  // R_0 .. R_checked_to as far as iteration got
};
ProbeResult finite_type_probe(int b, int c, long n_max = 20);

}  // namespace ncl
