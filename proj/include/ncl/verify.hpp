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

#include "ncl/checker.hpp"
#include "ncl/commpoly.hpp"
#include "ncl/dynamics.hpp"
#include "ncl/report.hpp"

namespace ncl {

// Commutative reference orbit.  Kept free of any noncommutative machinery
// so the abelianization comparison is a genuine cross-implementation test.
struct CommTrajectory {
  int b = 0;
  int c = 0;
  std::map<long, CommPoly> r;

  bool has(long n) const noexcept { return r.count(n) != 0; }
  const CommPoly& at(long n) const;  // throws IndexUnavailable
};

// Iterates R_{n+1} R_{n-1} = 1 + R_n^e, with e = b at odd centers and c at
// even ones, from R_{seed_index} = x and R_{seed_index+1} = y, forward to
// n_max and backward to n_min.  Every division must be exact in the Laurent
// ring; DivisionNotExact escaping from here means a bug or an unsupported
// (b, c).
CommTrajectory comm_oracle(int b, int c, long n_max, long seed_index = 0,
                           long n_min = 0);

// abelianize(R_n) against the oracle on every shared index.
VerifyReport check_abelianization(const Trajectory& t,
                                  const CommTrajectory& comm);

// q_specialize(R_n R_{n+1}) = q * q_specialize(R_{n+1} R_n) on every
// adjacent pair, plus q_specialize(C) = q.  Small pairs are multiplied as
// noncommutative polynomials first; large ones are multiplied after
// specialization, which agrees because q_specialize is a ring morphism.
// The method field says which route ran.
VerifyReport check_quantum(const Trajectory& t);

// The reconstruction of odd entries subtracts a single inverse commutator
// word; this checks that each product u_n u_{n+1} really contains it with
// coefficient at least one.  Needs a trajectory with u data.
VerifyReport check_c_inverse_term(const Trajectory& t);

// Exchange relations at centers -n_neg+1 .. 0, on values extended to
// negative indices through the star involution.  Centers too large to
// multiply out directly are accepted through their mirror image: the
// involution maps the relation at center -m onto the relation at center
// m+2 of the partner family, so a verdict for that center (looked up in
// partner_nonlinear, the partner's exchange-relation report) settles the
// negative one.  Passing nullptr limits the check to the direct centers.
VerifyReport check_star_seam(CaseTag tag, const Trajectory& t22_or_14xy,
                             const Trajectory* t14_XY, long n_neg,
                             const VerifyOptions& opt = {},
                             const VerifyReport* partner_nonlinear = nullptr);

// Coefficient tests across a family: every value positive over the index
// window, and for the (2,2) case every coefficient exactly one.
VerifyReport check_family_positivity(CaseTag tag,
                                     const Trajectory& t22_or_14xy,
                                     const Trajectory* t14_XY, long n_lo,
                                     long n_hi);

// Number of 2n-step nearest-neighbor walks on the integer interval
// [0, top] from 0 back to 0, counted by dynamic programming.  Independent
// oracle for the (2,2) term counts; odd step counts give zero.
std::uint64_t walk_count_updown(int top, long steps);

// Term count of R_n R_0^-1 against walk_count_updown(3, 2n), for the (2,2)
// trajectory, plus the emptiness of odd step counts.
VerifyReport check_path_counts(const Trajectory& t22);

// Transfer matrix power, walk enumeration and nested series agree with
// each other and with the trajectory, per case, up to depth.
VerifyReport check_path_agreement(const Trajectory& t, long depth,
                                  std::uint64_t enum_budget = 5'000'000);

// Index-translation web between the four (1,4)/(4,1) families and the star
// reflection tying negative indices to the partner family.  These hold by
// construction of the translated sequences; the entries guard the plumbing
// on both code paths rather than prove anything new.
VerifyReport check_translations(const Trajectory& t14xy,
                                const Trajectory& t14XY,
                                const Trajectory& t41xy,
                                const Trajectory& t41XY, long n_hi);

// Finite-type experiment: iterate the (b, c) system by exact division and
// look for a conjugation period.  With expect_period > 0 the entries fail
// unless that period is found, the abelianized orbit repeats with it, and
// every computed entry has zero-one coefficients.  With expect_period = 0
// the run is exploratory: the outcome, including an iteration that could
// not be continued, is surfaced in the entry detail and never counts as a
// verified pass of anything.
VerifyReport check_probe(int b, int c, long n_max, long expect_period);

struct SuiteOptions {
  long n22 = 12;   // exchange-relation depth for (2,2)
  long n14 = 8;    // depth for both (1,4) data flavors
  long n41 = 6;    // depth for the (4,1) translates
  long n_neg = 6;  // negative depth via the star involution
  std::uint64_t budget = 40'000'000;
  std::size_t mem_limit = ProductAccum::kDefaultMemLimit;
  // "" for none; "entry" corrupts a (2,2) entry, "k" corrupts its K, so the
  // suite is known to be able to fail.
  std::string inject_fault;
};

// Everything above plus the dynamics-level relation and conservation
// suites, across all five cases, merged into one report.
VerifyReport full_suite(const SuiteOptions& opt = {});
VerifyReport full_suite(long n_max);

}  // namespace ncl
