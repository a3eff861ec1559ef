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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncl/division.hpp"
#include "ncl/dynamics.hpp"
#include "ncl/errors.hpp"

using namespace ncl;

TEST_CASE("case tags round trip") {
  for (CaseTag tag : {CaseTag::B22, CaseTag::B14_xy, CaseTag::B14_XY,
                      CaseTag::B41_xy, CaseTag::B41_XY})
    CHECK(parse_case(to_string(tag)) == tag);
  CHECK_THROWS_AS(parse_case("33"), ParseError);
  CHECK(powers_for(CaseTag::B22).odd_power == 2);
  CHECK(powers_for(CaseTag::B14_xy).even_power == 4);
  CHECK(powers_for(CaseTag::B41_XY).odd_power == 4);
}

TEST_CASE("(2,2) low entries") {
  Trajectory t = seq_22(4);
  CHECK(t.at(0) == parse_poly("y x y^-1"));
  CHECK(t.at(1) == parse_poly("y"));
  CHECK(t.at(2) == parse_poly("x^-1 + y^2 x^-1"));
  CHECK(t.at(3) == parse_poly("x^-1 y x^-1 + x^-1 y^-1 x^-1 + x y^-1 x^-1 + "
                              "y^2 x^-1 y x^-1 + y^2 x^-1 y^-1 x^-1"));
  CHECK(t.at(4).terms() == 13);
  CHECK(t.top() == 4);
  CHECK_THROWS_AS(t.at(5), IndexUnavailable);
  CHECK_THROWS_AS(t.u_at(0), IndexUnavailable);
}

TEST_CASE("(2,2) term counts are the odd-index Fibonacci numbers") {
  Trajectory t = seq_22(13);
  const std::size_t expected[] = {1,   1,    2,    5,     13,    34,   89,
                                  233, 610,  1597, 4181,  10946, 28657, 75025};
  for (long n = 0; n <= 13; ++n) {
    CHECK(t.at(n).terms() == expected[n]);
    if (n <= 6) CHECK(is_positive(t.at(n)));
  }
  CHECK(is_positive(t.at(13)));
}

TEST_CASE("(1,4) xy flavor low entries") {
  Trajectory t = seq_14(SeedData::xy, 5);
  CHECK(t.u_at(0) == parse_poly("y x y^-1"));
  CHECK(t.u_at(1) == parse_poly("x^-1 + y x^-1"));
  // Nine monomials, all with unit coefficient.
  CHECK(t.u_at(2) ==
        parse_poly("x^2 y^-1 x^-1 + x^-3 + x^-2 y^-1 x^-1 + x^-1 y x^-2 + "
                   "x^-1 y x^-1 y^-1 x^-1 + y x^-3 + y x^-2 y^-1 x^-1 + "
                   "y x^-1 y x^-2 + y x^-1 y x^-1 y^-1 x^-1"));
  CHECK(t.at(0) == t.u_at(0));
  CHECK(t.at(1) == parse_poly("y"));
  CHECK(t.at(2) == t.u_at(1));
  CHECK(t.at(4) == t.u_at(2));
  // The odd reconstruction subtracts C^-1 and stays positive.
  CHECK(is_positive(t.at(3)));
  CHECK(is_positive(t.at(5)));
}

TEST_CASE("(1,4) XY flavor low entries") {
  Trajectory t = seq_14(SeedData::XY, 4);
  CHECK(t.u_at(0) == parse_poly("y x y^-1 x^-1 y^-1 + y x y^-2"));
  CHECK(t.u_at(1) == parse_poly("y"));
  CHECK(t.u_at(2) == parse_poly("y^3 x^-1 + y^-1 x^-1 + x y^-1 x^-1"));
  CHECK(t.at(1) == parse_poly("y x y^-1"));
  CHECK(t.at(2) == parse_poly("y"));
  CHECK(t.at(3) == parse_poly("x^-1 + y^4 x^-1"));
}

TEST_CASE("(1,4) growth profile") {
  // Monomials merge with positive coefficients as the words collide, so the
  // counts fall slightly short of the collision-free bound 5a_{n+1} - a_n
  // and coefficients above one appear from u_4 on.
  Trajectory a = seq_14(SeedData::xy, 9);
  Trajectory b = seq_14(SeedData::XY, 9);
  const std::size_t xy_counts[] = {1, 2, 9, 43, 204, 963};
  const std::size_t XY_counts[] = {2, 1, 3, 14, 67, 317};
  for (long n = 0; n <= 5; ++n) {
    CHECK(a.u_at(n).terms() == xy_counts[n]);
    CHECK(b.u_at(n).terms() == XY_counts[n]);
    CHECK(is_positive(a.u_at(n)));
    CHECK(is_positive(b.u_at(n)));
  }
  CHECK(max_abs_coeff(a.u_at(5)) == 3);
  CHECK(max_abs_coeff(b.u_at(5)) == 2);
}

TEST_CASE("(4,1) translates") {
  Trajectory f = seq_41(SeedData::xy, 5);
  Trajectory gxy = seq_14(SeedData::xy, 4);
  Trajectory gXY = seq_14(SeedData::XY, 6);
  for (long m = 0; m <= 5; ++m) CHECK(f.at(m) == gXY.at(m + 1));

  Trajectory g = seq_41(SeedData::XY, 5);
  for (long m = 1; m <= 5; ++m) CHECK(g.at(m) == gxy.at(m - 1));
  CHECK(g.at(0) == star(gXY.at(3)));
  CHECK(g.at(0) == parse_poly("y x y^-1 x^-1 y^-1 + y x y^-1 x^3 y^-1"));
}

TEST_CASE("negative indices through the star involution") {
  Trajectory t = seq_22(4);
  // Solving the center-0 relation backwards: R_-1 = (R_1 C)^-1 (1 + R_0^2).
  NCPoly backward = mul(inv_unit(mul(t.at(1), t.c)),
                        add(NCPoly::one(), pow(t.at(0), 2)));
  CHECK(value_at(CaseTag::B22, -1, t, nullptr) == backward);
  CHECK(value_at(CaseTag::B22, -1, t, nullptr) ==
        parse_poly("y x y^-1 x^-1 y^-1 + y x y^-1 x y^-1"));
  CHECK(value_at(CaseTag::B22, 3, t, nullptr) == t.at(3));

  Trajectory axy = seq_14(SeedData::xy, 5);
  Trajectory aXY = seq_14(SeedData::XY, 5);
  // Same backward solve for the (1,4) xy family at center 0 (power 4).
  NCPoly b14 = mul(inv_unit(mul(axy.at(1), axy.c)),
                   add(NCPoly::one(), pow(axy.at(0), 4)));
  CHECK(value_at(CaseTag::B14_xy, -1, axy, &aXY) == b14);
  // And the translated families line up with their sources.
  CHECK(value_at(CaseTag::B41_xy, 2, axy, &aXY) == aXY.at(3));
  CHECK(value_at(CaseTag::B41_XY, 2, axy, &aXY) == axy.at(1));
  CHECK_THROWS_AS(value_at(CaseTag::B14_xy, -1, axy, nullptr), IndexUnavailable);
}

TEST_CASE("substitution step reproduces the (2,2) sequence") {
  NCPoly x = parse_poly("x");
  NCPoly y = parse_poly("y");
  auto p1 = mutation_T(2, {x, y});
  CHECK(p1.first == parse_poly("x y x^-1"));
  CHECK(p1.second == parse_poly("x^-1 + y^2 x^-1"));

  Trajectory t = seq_22(4);
  auto p2 = mutation_T(2, p1);
  CHECK(p2.second == t.at(3));
}

TEST_CASE("substitution step falls back to right division") {
  Trajectory t = seq_22(5);
  // 1 + R_3^2 divided by C R_2 is exactly R_4; the divisor has two terms,
  // so the unit shortcut does not apply.
  NCPoly num = add(NCPoly::one(), pow(t.at(3), 2));
  NCPoly den = mul(t.c, t.at(2));
  CHECK(right_divide(num, den, 3) == t.at(4));
}

TEST_CASE("(2,2) verification passes at small depth") {
  Trajectory t = seq_22(8);
  VerifyOptions opt;
  VerifyReport nl = verify_nonlinear(t, opt);
  CHECK(nl.all_passed());
  CHECK(nl.entries().size() == 7);
  for (const auto& e : nl.entries()) CHECK(e.method.rfind("direct", 0) == 0);

  VerifyReport cons = verify_conserved(t, opt);
  CHECK(cons.all_passed());
  bool saw_weight = false;
  for (const auto& e : cons.entries()) saw_weight |= (e.name == "weight_identity");
  CHECK(saw_weight);
}

TEST_CASE("(2,2) chain reductions engage under a tight budget") {
  Trajectory t = seq_22(8);
  VerifyOptions opt;
  opt.budget = 5000;
  VerifyReport nl = verify_nonlinear(t, opt);
  CHECK(nl.all_passed());
  bool chained = false;
  for (const auto& e : nl.entries()) chained |= (e.method.rfind("chain", 0) == 0);
  CHECK(chained);

  VerifyReport cons = verify_conserved(t, opt);
  CHECK(cons.all_passed());
  chained = false;
  for (const auto& e : cons.entries())
    if (e.name == "quasi_commutation") chained |= (e.method.rfind("chain", 0) == 0);
  CHECK(chained);
}

TEST_CASE("(1,4) verification passes for both flavors") {
  VerifyOptions opt;
  for (SeedData data : {SeedData::xy, SeedData::XY}) {
    Trajectory t = seq_14(data, 7);
    VerifyReport nl = verify_nonlinear(t, opt);
    CHECK(nl.all_passed());
    VerifyReport cons = verify_conserved(t, opt);
    CHECK(cons.all_passed());
    bool saw_witness = false, saw_cube = false;
    for (const auto& e : cons.entries()) {
      saw_witness |= (e.name == "c_inverse_witness");
      saw_cube |= (e.name == "cube_identity");
    }
    CHECK(saw_witness);
    CHECK(saw_cube);
  }
}

TEST_CASE("(1,4) even centers chain through the cube identity") {
  Trajectory t = seq_14(SeedData::xy, 7);
  VerifyOptions opt;
  opt.budget = 200'000;  // pushes the center-6 fourth power over the line
  VerifyReport nl = verify_nonlinear(t, opt);
  CHECK(nl.all_passed());
  bool chained = false;
  for (const auto& e : nl.entries())
    if (e.index == 6) chained = (e.method.rfind("chain", 0) == 0);
  CHECK(chained);
}

TEST_CASE("(4,1) verification passes") {
  VerifyOptions opt;
  for (SeedData data : {SeedData::xy, SeedData::XY}) {
    Trajectory t = seq_41(data, 5);
    CHECK(verify_nonlinear(t, opt).all_passed());
    CHECK(verify_conserved(t, opt).all_passed());
  }
}

TEST_CASE("corrupted entries are caught and reported") {
  Trajectory t = seq_22(5);
  t.r[3].add_term(parse_word("x^5"), 1);
  VerifyReport nl = verify_nonlinear(t);
  CHECK_FALSE(nl.all_passed());
  CHECK(nl.failures() > 0);
  bool counterexample = false;
  for (const auto& e : nl.entries())
    if (!e.pass) counterexample |= !e.detail.empty();
  CHECK(counterexample);
  CHECK_FALSE(verify_conserved(t).all_passed());
}

TEST_CASE("report text groups index runs") {
  Trajectory t = seq_22(6);
  VerifyReport rep = verify_nonlinear(t);
  std::string text = rep.to_text();
  CHECK(text.find("nonlinear_exchange") != std::string::npos);
  CHECK(text.find("n=1..5") != std::string::npos);
  CHECK(text.find("all 5 checks passed") != std::string::npos);
}

TEST_CASE("finite type probes close up with conjugation") {
  ProbeResult p11 = finite_type_probe(1, 1, 14);
  CHECK(p11.found);
  CHECK(p11.period == 5);
  CHECK(p11.conj_power == 1);

  ProbeResult p12 = finite_type_probe(1, 2, 14);
  CHECK(p12.found);
  CHECK(p12.period == 6);

  ProbeResult p13 = finite_type_probe(1, 3, 18);
  CHECK(p13.found);
  CHECK(p13.period == 8);
}

TEST_CASE("the (2,2) system shows no short period") {
  ProbeResult p = finite_type_probe(2, 2, 5);
  CHECK_FALSE(p.found);
  CHECK(p.checked_to == 5);
  CHECK(p.note.find("no conjugation period") != std::string::npos);

  // Pushing further makes the divisions outgrow their support cap; that is
  // reported as a failed iteration, never as a silent pass.
  ProbeResult q = finite_type_probe(2, 2, 9);
  CHECK_FALSE(q.found);
  CHECK(q.note.find("iteration failed") != std::string::npos);
}

TEST_CASE("streaming accumulator matches plain multiplication") {
  NCPoly a = parse_poly("x + y^-1 + 2*x y");
  NCPoly b = parse_poly("x^-1 y - y x");
  NCPoly ab = mul(a, b);
  IdentityCheck chk;
  chk.add_product(a, b, +1);
  chk.add_poly(ab, -1);
  auto out = chk.run(1000);
  CHECK(out.feasible);
  CHECK(out.pass);

  IdentityCheck bad;
  bad.add_product(a, b, +1);
  auto out2 = bad.run(1000);
  CHECK(out2.feasible);
  CHECK_FALSE(out2.pass);
  CHECK_FALSE(out2.counterexample.empty());

  IdentityCheck big;
  big.add_product(a, b, +1);
  auto out3 = big.run(2);  // over budget: must refuse, not run
  CHECK_FALSE(out3.feasible);
}

TEST_CASE("streaming accumulator spills on a tiny memory ceiling") {
  ProductAccum acc(256);
  NCPoly a = parse_poly("x^100 y^100 + x^2 + y^3 x^-7 + x^5 y^9");
  acc.add_product(a, a, +1);
  CHECK(acc.spilled());
  CHECK_FALSE(acc.is_zero());
}
