#include <doctest.h>

#include <stdexcept>

#include <set>

#include "giambelli/shapes.hpp"
#include "giambelli/verify.hpp"

using namespace giambelli;

TEST_CASE("partition parsing and validation") {
    CHECK(Partition::parse("6,5,3,1").parts() == std::vector<int>{6, 5, 3, 1});
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse(" 2 , 1 ").parts() == std::vector<int>{2, 1});
    CHECK_THROWS_AS(Partition::parse("3,5"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,-1"), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(Partition::parse("6,5,3,1").conjugate().parts() ==
          std::vector<int>{4, 3, 3, 2, 2, 1});
    CHECK(Partition().conjugate().empty());
    CHECK(Partition::parse("1,1,1").conjugate().parts() == std::vector<int>{3});
}

TEST_CASE("conjugate is an involution") {
    for (const SkewShape& s : enumerate_connected_shapes(5)) {
        CHECK(s.outer().conjugate().conjugate() == s.outer());
        CHECK(s.inner().conjugate().conjugate() == s.inner());
    }
}

TEST_CASE("skew shape constructor and boxes") {
    SkewShape s = SkewShape::parse("6,5,3,1/4,4,3");
    CHECK(s.boxes() == std::vector<BoxCoord>{{1, 5}, {1, 6}, {2, 5}, {4, 1}});
    CHECK(s.box_count() == 4);
    CHECK(SkewShape::parse("2,1").box_count() == 3);
    CHECK_THROWS_AS(SkewShape(Partition::parse("2"), Partition::parse("3")),
                    std::invalid_argument);
}

TEST_CASE("content") {
    CHECK(content({4, 1}) == -3);
    CHECK(content({1, 6}) == 5);
    CHECK(content({7, 7}) == 0);
}

TEST_CASE("content bounds") {
    SkewShape s = SkewShape::parse("6,5,3,1/4,4,3");
    CHECK(s.content_min() == -3);
    CHECK(s.content_max() == 5);
    for (BoxCoord b : s.boxes()) {
        CHECK(content(b) >= s.content_min());
        CHECK(content(b) <= s.content_max());
    }
}

TEST_CASE("diagonals") {
    SkewShape t = SkewShape::parse("3,3,2/1");
    CHECK(t.diagonal(0) == std::vector<BoxCoord>{{2, 2}});
    SkewShape s = SkewShape::parse("6,5,3,1/4,4,3");
    CHECK(s.diagonal(4) == std::vector<BoxCoord>{{1, 5}});
    CHECK(s.diagonal(0).empty());
    CHECK(s.diagonal_count() == 4);
}

TEST_CASE("diagonals partition the box set") {
    for (const SkewShape& s : enumerate_connected_shapes(5)) {
        std::set<BoxCoord> seen;
        int total = 0;
        for (int c = s.content_min(); c <= s.content_max(); ++c)
            for (BoxCoord b : s.diagonal(c)) {
                CHECK(seen.insert(b).second);
                ++total;
            }
        CHECK(total == s.box_count());
    }
}

TEST_CASE("diagonal ordering is lower-left upward") {
    SkewShape s = SkewShape::parse("2,2");
    CHECK(s.diagonal(0) == std::vector<BoxCoord>{{2, 2}, {1, 1}});
}

TEST_CASE("edgewise connectivity") {
    CHECK_FALSE(SkewShape::parse("6,5,3,1/4,4,3").edgewise_connected());
    CHECK(SkewShape::parse("2,1").edgewise_connected());
    CHECK(SkewShape().edgewise_connected());
}

TEST_CASE("components") {
    SkewShape s = SkewShape::parse("6,5,3,1/4,4,3");
    auto comps = s.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].boxes == std::vector<BoxCoord>{{1, 5}, {1, 6}, {2, 5}});
    CHECK(comps[1].boxes == std::vector<BoxCoord>{{4, 1}});
    CHECK(comps[0].content_min == 3);
    CHECK(comps[0].content_max == 5);
    CHECK(comps[1].content_min == -3);

    SkewShape c = SkewShape::parse("2,1");
    auto one = c.components();
    REQUIRE(one.size() == 1);
    CHECK(one[0].normalized() == c);
    CHECK(SkewShape().components().empty());
}

TEST_CASE("components cover the shape disjointly") {
    for (const SkewShape& s : enumerate_connected_shapes(4)) {
        std::set<BoxCoord> all;
        for (auto& frag : s.components())
            for (BoxCoord b : frag.boxes) CHECK(all.insert(b).second);
        CHECK(static_cast<int>(all.size()) == s.box_count());
    }
}

TEST_CASE("diagonal type classification") {
    // Pinned through the twist-case correspondence; suite_twist_cases
    // checks consistency exhaustively.
    SkewShape square = SkewShape::parse("2,2");
    CHECK(square.diagonal_type(0) == DiagonalType::Type3);
    CHECK(square.diagonal_type(-1) == DiagonalType::Type4);
    CHECK(square.diagonal_type(1) == DiagonalType::Type3);
    SkewShape hook = SkewShape::parse("2,2/1");
    CHECK(hook.diagonal_type(0) == DiagonalType::Type1);
    SkewShape two = SkewShape::parse("2");
    CHECK(two.diagonal_type(0) == DiagonalType::Type2);
    CHECK_THROWS_AS(SkewShape::parse("6,5,3,1/4,4,3").diagonal_type(0), std::invalid_argument);
}

TEST_CASE("remove_first_column") {
    CHECK(SkewShape::parse("3,2/1,1").remove_first_column() == SkewShape::parse("2,1"));
    CHECK(SkewShape::parse("2,2/1,1").remove_first_column() == SkewShape::parse("1,1"));
    CHECK_THROWS_AS(SkewShape::parse("2,1").remove_first_column(), std::invalid_argument);
}

TEST_CASE("normalized translation") {
    CHECK(SkewShape::parse("3,2/1,1").normalized() == SkewShape::parse("2,1"));
    CHECK(SkewShape::parse("2,2/2").normalized() == SkewShape::parse("2"));
    CHECK(SkewShape().normalized() == SkewShape());
}

TEST_CASE("glue corner cases") {
    SkewShape box = SkewShape::parse("1");
    CHECK(glue_right(box, box) == SkewShape::parse("2"));
    CHECK(glue_up(box, box) == SkewShape::parse("1,1"));
    CHECK(glue_right(SkewShape::parse("1,1"), SkewShape::parse("3")) ==
          SkewShape::parse("4,1"));
    CHECK(glue_up(SkewShape::parse("3"), SkewShape::parse("2")) == SkewShape::parse("4,3/2"));
    CHECK_THROWS_AS(glue_right(SkewShape(), box), std::invalid_argument);
}

TEST_CASE("ascii rendering") {
    CHECK(SkewShape::parse("6,5,3,1/4,4,3").ascii() ==
          "····##\n····#\n···\n#\n");
}

TEST_CASE("shape text round trip") {
    for (const char* text : {"6,5,3,1/4,4,3", "2,1", "3,3,2/1"})
        CHECK(SkewShape::parse(text).to_string() == text);
}
