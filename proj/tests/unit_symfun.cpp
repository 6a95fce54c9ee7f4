#include <doctest.h>

#include <stdexcept>

#include <climits>

#include "giambelli/symfun.hpp"
#include "giambelli/verify.hpp"

using namespace giambelli;

TEST_CASE("schur polynomial by tableau enumeration") {
    SymPoly p = schur_poly(SkewShape::parse("2,1"), 3);
    CHECK(p.term_count() == 7);  // 6 monomials x_a^2 x_b plus 2*x1x2x3
    long long tableaux = 0;
    for (auto& [exps, coeff] : p.terms_sorted()) tableaux += coeff;
    CHECK(tableaux == 8);
    CHECK(p.coeff({2, 1, 0}) == 1);
    CHECK(p.coeff({1, 1, 1}) == 2);
    CHECK(p.coeff({3, 0, 0}) == 0);

    SymPoly single = schur_poly(SkewShape::parse("1"), 4);
    CHECK(single.term_count() == 4);
    CHECK(single.coeff({0, 0, 1, 0}) == 1);

    CHECK(schur_poly(SkewShape(), 3).is_one());
    CHECK(schur_poly(SkewShape::parse("2,2/2,2"), 3).is_one());
}

TEST_CASE("complete homogeneous") {
    SymPoly h2 = complete_h(2, 2);
    CHECK(h2.coeff({2, 0}) == 1);
    CHECK(h2.coeff({1, 1}) == 1);
    CHECK(h2.coeff({0, 2}) == 1);
    CHECK(h2.term_count() == 3);
    CHECK(complete_h(0, 3).is_one());
    CHECK(complete_h(-1, 3).is_zero());
}

TEST_CASE("elementary") {
    SymPoly e2 = elementary_e(2, 3);
    CHECK(e2.term_count() == 3);
    CHECK(e2.coeff({1, 1, 0}) == 1);
    CHECK(elementary_e(0, 3).is_one());
    CHECK(elementary_e(-2, 3).is_zero());
    CHECK(elementary_e(4, 3).is_zero());
}

TEST_CASE("ring operations") {
    SymPoly p = schur_poly(SkewShape::parse("2,1"), 3);
    CHECK((p - p).is_zero());
    CHECK(SymPoly::constant(3, 1) * p == p);
    CHECK(-(-p) == p);
    CHECK_THROWS_AS(p + SymPoly::constant(2, 1), std::invalid_argument);

    // Pieri: s_1 * s_1 = s_2 + s_11.
    SymPoly s1 = schur_poly(SkewShape::parse("1"), 3);
    CHECK(s1 * s1 == schur_poly(SkewShape::parse("2"), 3) +
                         schur_poly(SkewShape::parse("1,1"), 3));
}

TEST_CASE("strip schur matches h and e") {
    CHECK(schur_poly(SkewShape::parse("4"), 5) == complete_h(4, 5));
    CHECK(schur_poly(SkewShape::parse("1,1,1"), 5) == elementary_e(3, 5));
}

TEST_CASE("homogeneity and symmetry") {
    for (const SkewShape& s : enumerate_connected_shapes(4)) {
        SymPoly p = schur_poly(s, 4);
        for (auto& [exps, coeff] : p.terms_sorted()) {
            int deg = 0;
            for (int e : exps) deg += e;
            CHECK(deg == s.box_count());
            CHECK(coeff > 0);
        }
        CHECK(p.swap_variables(1, 2) == p);
        CHECK(p.swap_variables(2, 4) == p);
    }
}

TEST_CASE("translation invariance") {
    CHECK(schur_poly(SkewShape::parse("3,2/1,1"), 4) ==
          schur_poly(SkewShape::parse("2,1"), 4));
}

TEST_CASE("glue identity") {
    SkewShape box = SkewShape::parse("1");
    CHECK(check_glue_identity(box, box, 2));
    CHECK(check_glue_identity(SkewShape::parse("2"), SkewShape::parse("1,1"), 4));
    CHECK_THROWS_AS(check_glue_identity(SkewShape(), box, 2), std::invalid_argument);
    SuiteResult glue = suite_glue_identity(25, 4, 12345);
    CHECK(glue.ok());
}

TEST_CASE("coefficient overflow is detected") {
    SymPoly big = SymPoly::constant(2, LLONG_MAX);
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big * SymPoly::constant(2, 2), std::overflow_error);
}

TEST_CASE("json form is canonical") {
    SymPoly h2 = complete_h(2, 2);
    CHECK(h2.to_json() ==
          R"({"nvars":2,"terms":[{"coef":1,"exp":[0,2]},{"coef":1,"exp":[1,1]},{"coef":1,"exp":[2,0]}]})");
}

TEST_CASE("printable form") {
    CHECK(complete_h(2, 2).to_string() == "x2^2 + x1x2 + x1^2");
    CHECK(SymPoly(3).to_string() == "0");
}
