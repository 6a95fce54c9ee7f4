#include <doctest.h>

#include <stdexcept>

#include <set>

#include "giambelli/strips.hpp"
#include "giambelli/verify.hpp"
#include "support/oracles.hpp"

using namespace giambelli;

namespace {
const SkewShape kAppendixShape = SkewShape::parse("6,5,3,1/4,4,3");
}

TEST_CASE("horizontal decomposition") {
    CHECK(horizontal_decomposition(kAppendixShape).bracket_list() ==
          "{[4,5],[3,3],[1,0],[-3,-3]}");
    CHECK(horizontal_decomposition(SkewShape::parse("2,1")).bracket_list() ==
          "{[0,1],[-1,-1]}");
    CHECK(horizontal_decomposition(SkewShape()).strip_count() == 0);
    CHECK(horizontal_decomposition(kAppendixShape).cutting().directions_string() ==
          "RRRRRRRR");
}

TEST_CASE("vertical decomposition") {
    CHECK(vertical_decomposition(kAppendixShape).bracket_list() ==
          "{[5,5],[3,4],[2,1],[0,-1],[-1,-2],[-3,-3]}");
    CHECK(vertical_decomposition(SkewShape::parse("1,1")).bracket_list() == "{[-1,0]}");
    CHECK(vertical_decomposition(SkewShape()).strip_count() == 0);
    CHECK(vertical_decomposition(kAppendixShape).cutting().directions_string() ==
          "UUUUUUUU");
}

TEST_CASE("segments of the horizontal cutting strip") {
    CuttingStrip phi = CuttingStrip::all_right(-3, 5);
    Segment two = segment(phi, 4, 5);
    REQUIRE(two.kind == Segment::Kind::Strip);
    CHECK(two.strip->size() == 2);
    CHECK(strip_to_skew_shape(two) == SkewShape::parse("2"));
    CHECK(segment(phi, 1, 0).kind == Segment::Kind::Empty);
    CHECK(segment(phi, 5, 2).kind == Segment::Kind::Undefined);
    CHECK_THROWS_AS(segment(phi, 4, 6), std::out_of_range);
}

TEST_CASE("strip shapes") {
    CHECK(strip_to_skew_shape(segment(CuttingStrip::all_right(-3, 5), -3, 5)) ==
          SkewShape::parse("9"));
    CuttingStrip row2 = CuttingStrip::all_right(-3, 5).with_step(-3, Step::Up);
    CHECK(strip_to_skew_shape(segment(row2, -3, 5)) == SkewShape::parse("8,1"));
    CHECK(strip_to_skew_shape(segment(CuttingStrip::all_up(0, 1), 0, 1)) ==
          SkewShape::parse("1,1"));
}

TEST_CASE("init and term") {
    InitTerm it = horizontal_decomposition(kAppendixShape).init_term();
    CHECK(it.init == std::vector<int>{4, 3, 1, -3});
    CHECK(it.term == std::vector<int>{5, 3, 0, -3});
    InitTerm vt = vertical_decomposition(kAppendixShape).init_term();
    CHECK(vt.init == std::vector<int>{5, 3, 2, 0, -1, -3});
    CHECK(vt.term == std::vector<int>{5, 4, 1, -1, -2, -3});
    CHECK(horizontal_decomposition(SkewShape()).init_term().init.empty());
}

TEST_CASE("cutting strip derivation agrees with storage") {
    for (const SkewShape& s : enumerate_connected_shapes(5))
        for (const OutsideDecomposition& pi : enumerate_decompositions(s))
            CHECK(cutting_strip(pi) == pi.cutting());
}

TEST_CASE("bijection endpoints") {
    SkewShape s = SkewShape::parse("3,3,2/1");
    int d = s.diagonal_count();
    CHECK(decomposition_from_cutting_strip(s, std::vector<Step>(d - 1, Step::Right)) ==
          horizontal_decomposition(s));
    CHECK(decomposition_from_cutting_strip(s, std::vector<Step>(d - 1, Step::Up)) ==
          vertical_decomposition(s));
}

TEST_CASE("bijection matches the brute-force enumeration") {
    for (const SkewShape& s : enumerate_connected_shapes(6)) {
        auto oracle = testing::brute_force_outside_decompositions(s);
        std::set<testing::ChainSet> produced;
        for (const OutsideDecomposition& pi : enumerate_decompositions(s)) {
            auto chains = pi.strip_chains();
            produced.insert(testing::ChainSet(chains.begin(), chains.end()));
        }
        CHECK(produced.size() == oracle.size());
        CHECK(produced == oracle);
    }
}

TEST_CASE("spec example: (2,2) with steps up,right") {
    SkewShape s = SkewShape::parse("2,2");
    OutsideDecomposition pi =
        decomposition_from_cutting_strip(s, {Step::Up, Step::Right});
    CHECK(pi.bracket_list() == "{[0,0],[-1,1]}");
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_decompositions(SkewShape::parse("1")).size() == 1);
    CHECK(enumerate_decompositions(SkewShape::parse("2,2")).size() == 4);
    auto all = enumerate_decompositions(SkewShape::parse("3,3,2/1"));
    CHECK(all.size() == 16);
    CHECK_THROWS_AS(enumerate_decompositions(kAppendixShape), std::invalid_argument);
}

TEST_CASE("twist follows the appendix") {
    OutsideDecomposition pi = horizontal_decomposition(kAppendixShape);
    TwistResult r1 = twist(pi, -3);
    CHECK(r1.rule == TwistRule::BPrime);
    CHECK(r1.tcase == TheoremCase::C);
    CHECK(r1.decomposition.bracket_list() == "{[4,5],[3,3],[1,0],[-3,-3]}");
    CHECK(r1.decomposition.cutting().directions_string() == "URRRRRRR");

    TwistResult r2 = twist(r1.decomposition, -2);
    CHECK(r2.rule == TwistRule::CPrime);
    CHECK(r2.tcase == TheoremCase::A);
    CHECK(r2.decomposition.bracket_list() == "{[4,5],[3,3],[1,0],[-1,-2],[-3,-3]}");

    TwistResult r3 = twist(r2.decomposition, -1);
    CHECK(r3.rule == TwistRule::CPrime);
    CHECK(r3.decomposition.bracket_list() == "{[4,5],[3,3],[1,0],[0,-1],[-1,-2],[-3,-3]}");

    TwistResult r4 = twist(r3.decomposition, 0);
    CHECK(r4.rule == TwistRule::CPrime);
    CHECK(r4.tcase == TheoremCase::B);
    CHECK(r4.decomposition.bracket_list() == "{[4,5],[3,3],[0,-1],[-1,-2],[-3,-3]}");

    TwistResult r5 = twist(r4.decomposition, 1);
    CHECK(r5.rule == TwistRule::CPrime);
    CHECK(r5.decomposition.bracket_list() == "{[4,5],[3,3],[2,1],[0,-1],[-1,-2],[-3,-3]}");

    TwistResult r6 = twist(r5.decomposition, 2);
    CHECK(r6.rule == TwistRule::DPrime);
    CHECK(r6.decomposition.bracket_list() == "{[4,5],[3,3],[2,1],[0,-1],[-1,-2],[-3,-3]}");

    TwistResult r7 = twist(r6.decomposition, 3);
    CHECK(r7.rule == TwistRule::APrime);
    CHECK(r7.tcase == TheoremCase::B);
    CHECK(r7.decomposition.bracket_list() == "{[3,5],[2,1],[0,-1],[-1,-2],[-3,-3]}");

    TwistResult r8 = twist(r7.decomposition, 4);
    CHECK(r8.rule == TwistRule::APrime);
    CHECK(r8.tcase == TheoremCase::A);
    CHECK(r8.decomposition == vertical_decomposition(kAppendixShape));
}

TEST_CASE("twist is an involution on connected shapes") {
    SkewShape s = SkewShape::parse("3,3,2/1");
    for (const OutsideDecomposition& pi : enumerate_decompositions(s))
        for (int i = s.content_min(); i < s.content_max(); ++i)
            CHECK(twist(twist(pi, i).decomposition, i).decomposition == pi);
}

TEST_CASE("the horizontal-to-vertical twist chain") {
    for (const SkewShape& s : enumerate_connected_shapes(5)) {
        OutsideDecomposition pi = horizontal_decomposition(s);
        for (int i = s.content_min(); i < s.content_max(); ++i)
            pi = twist(pi, i).decomposition;
        CHECK(pi == vertical_decomposition(s));
    }
}

TEST_CASE("twist is an involution on the general rules too") {
    OutsideDecomposition pi = horizontal_decomposition(kAppendixShape);
    for (int step = 0; step < 8; ++step) {
        int i = kAppendixShape.content_min() + step;
        // Forward then backward restores the decomposition at every
        // intermediate point of the chain.
        CHECK(twist(twist(pi, i).decomposition, i).decomposition == pi);
        pi = twist(pi, i).decomposition;
    }
}

TEST_CASE("twist rejects out-of-domain contents") {
    OutsideDecomposition pi = horizontal_decomposition(SkewShape::parse("3,2/1,1"));
    CHECK_THROWS_AS(twist(pi, -1), std::domain_error);
    CHECK_THROWS_AS(twist(pi, 99), std::invalid_argument);
}

TEST_CASE("decomposition json round trip") {
    OutsideDecomposition pi = twist(horizontal_decomposition(kAppendixShape), -3).decomposition;
    OutsideDecomposition back = decomposition_from_json(kAppendixShape,
                                                        decomposition_to_json(pi));
    CHECK(back == pi);
}

TEST_CASE("perimeter validity of generated strips") {
    for (const SkewShape& s : enumerate_connected_shapes(5))
        for (const OutsideDecomposition& pi : enumerate_decompositions(s))
            CHECK_NOTHROW(validate_outside_decomposition(pi));
}
