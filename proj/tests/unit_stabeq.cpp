#include <doctest.h>

#include <stdexcept>

#include "giambelli/stabeq.hpp"
#include "giambelli/verify.hpp"

using namespace giambelli;

namespace {

const SkewShape kAppendixShape = SkewShape::parse("6,5,3,1/4,4,3");

PolyMatrix canonical_eval(const OutsideDecomposition& pi, int nvars) {
    return evaluate(canonical_form(pi).matrix, nvars);
}

}  // namespace

TEST_CASE("apply_op basics") {
    PolyMatrix m(1, 1, 2);
    m.at(0, 0) = complete_h(2, 2);

    PolyMatrix st = apply_op(m, AtomicOp::stabilize());
    CHECK(st.rows == 2);
    CHECK(st.at(0, 0).is_one());
    CHECK(st.at(0, 1).is_zero());
    CHECK(st.at(1, 0).is_zero());
    CHECK(st.at(1, 1) == complete_h(2, 2));
    CHECK(apply_op(st, AtomicOp::destabilize()) == m);

    PolyMatrix flipped = apply_op(st, AtomicOp::scale_row(2, -1));
    CHECK(apply_op(flipped, AtomicOp::scale_row(2, -1)) == st);
    CHECK_THROWS_AS(apply_op(apply_op(st, AtomicOp::scale_row(1, -1)), AtomicOp::destabilize()),
                    std::domain_error);
    CHECK_THROWS_AS(apply_op(apply_op(st, AtomicOp::swap_cols(1, 2)), AtomicOp::destabilize()),
                    std::domain_error);

    MatrixEntry coeff = MatrixEntry::from_segment(
        segment(CuttingStrip::all_right(0, 2), 0, 1));
    PolyMatrix added = apply_op(st, AtomicOp::add_row(2, 1, coeff, 1));
    CHECK(added.at(1, 0) == complete_h(2, 2));
    PolyMatrix back = apply_op(added, AtomicOp::add_row(2, 1, coeff, -1));
    CHECK(back == st);

    CHECK_THROWS_AS(apply_op(m, AtomicOp::swap_rows(1, 2)), std::out_of_range);
    CHECK_THROWS_AS(apply_op(st, AtomicOp::add_row(1, 1, coeff, 1)), std::invalid_argument);
}

TEST_CASE("permute_to_canonical") {
    OutsideDecomposition pih = horizontal_decomposition(kAppendixShape);
    CHECK(permute_to_canonical(pih).ops.empty());

    OutsideDecomposition pie = vertical_decomposition(kAppendixShape);
    OpLog perm = permute_to_canonical(pie);
    CHECK(!perm.ops.empty());
    PolyMatrix sorted = replay(evaluate(giambelli_matrix(pie), 4), perm);
    CHECK(sorted == canonical_eval(pie, 4));
}

TEST_CASE("twist ops reproduce the first appendix steps") {
    OutsideDecomposition pi1 = horizontal_decomposition(kAppendixShape);
    TwistOps step1 = twist_transform_ops(pi1, -3);
    OpLog log1;
    log1.ops = step1.ops;
    PolyMatrix c2 = replay(canonical_eval(pi1, 4), log1);
    CHECK(c2 == canonical_eval(step1.twist.decomposition, 4));

    TwistOps step2 = twist_transform_ops(step1.twist.decomposition, -2);
    int stabilizes = 0;
    for (const AtomicOp& op : step2.ops)
        if (op.kind == AtomicOp::Kind::Stabilize) ++stabilizes;
    CHECK(stabilizes == 1);
    OpLog log2;
    log2.ops = step2.ops;
    PolyMatrix c3 = replay(c2, log2);
    CHECK(c3.rows == 5);
    CHECK(c3 == canonical_eval(step2.twist.decomposition, 4));
}

TEST_CASE("chain on a single box is trivial") {
    OpLog log = chain(SkewShape::parse("1"));
    CHECK(log.ops.empty());
    CHECK(verify_chain(SkewShape::parse("1"), 1).ok());
}

TEST_CASE("chain visits nine appendix stages") {
    OpLog log = chain(kAppendixShape);
    CHECK(log.cases.size() == 8);
    // start stage + 8 twist stages + closing orientation stage
    CHECK(log.stages.size() == 10);
    CHECK(verify_chain(kAppendixShape, 4).ok());
    CHECK(verify_chain(kAppendixShape, 9).ok());
}

TEST_CASE("chain handles reductions and degenerate shapes") {
    for (const char* text :
         {"3,2,1/1", "2,2/1", "2,2/2", "3,3/3", "3,2/1,1", "2,1/1,1", "2,2,1/2,2",
          "1,1,1/1,1", "2,2/2,2", "3,1,1/2", "4,2,1/3,1"}) {
        SkewShape s = SkewShape::parse(text);
        CAPTURE(text);
        ChainReport report = verify_chain(s, std::max(1, s.box_count()));
        CHECK(report.ok());
    }
    CHECK(verify_chain(SkewShape(), 1).ok());
}

TEST_CASE("twist ops conform for every decomposition and both directions") {
    // Exercises all four operation templates with the cutting-strip
    // direction at i both Up and Right.
    for (const SkewShape& s : enumerate_connected_shapes(4)) {
        int n = s.box_count();
        for (const OutsideDecomposition& pi : enumerate_decompositions(s))
            for (int i = s.content_min(); i < s.content_max(); ++i) {
                TwistOps t = twist_transform_ops(pi, i);
                OpLog slice;
                slice.ops = t.ops;
                PolyMatrix got = replay(canonical_eval(pi, n), slice);
                CHECK(got == canonical_eval(t.twist.decomposition, n));
            }
    }
}

TEST_CASE("transposed chain log runs in the Jacobi-Trudi orientation") {
    for (const char* text : {"2,1", "3,2,1/1", "2,2/2"}) {
        SkewShape s = SkewShape::parse(text);
        int n = std::max(1, s.box_count());
        OpLog log = chain(s);
        PolyMatrix end = replay(evaluate(jacobi_trudi(s), n), log.transposed());
        PolyMatrix want(0, 0, n);
        {
            PolyMatrix dual = evaluate(dual_jacobi_trudi(s), n);
            want = PolyMatrix(dual.cols, dual.rows, n);
            for (int r = 0; r < dual.rows; ++r)
                for (int c = 0; c < dual.cols; ++c) want.at(c, r) = dual.at(r, c);
        }
        CHECK(end == want);
    }
}

TEST_CASE("chain succeeds for every shape in a 3x3 grid") {
    // All (outer, inner) pairs, including disconnected shapes, shapes
    // with empty leading rows or columns, and the empty shape.
    std::vector<Partition> partitions;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) {
                std::vector<int> parts;
                for (int v : {a, b, c})
                    if (v > 0) parts.push_back(v);
                partitions.push_back(Partition(parts));
            }
    int count = 0;
    for (const Partition& outer : partitions)
        for (const Partition& inner : partitions) {
            if (!outer.contains(inner)) continue;
            SkewShape s(outer, inner);
            ChainReport report = verify_chain(s, std::max(1, s.box_count()));
            CAPTURE(s.to_string());
            CHECK(report.ok());
            ++count;
        }
    CHECK(count > 100);
}

TEST_CASE("log inverse undoes the chain") {
    for (const char* text : {"2,2/1", "3,2/1,1", "2,1"}) {
        SkewShape s = SkewShape::parse(text);
        OpLog log = chain(s);
        int n = std::max(1, s.box_count());
        PolyMatrix start = evaluate(giambelli_matrix(log.start), n);
        PolyMatrix end = replay(start, log);
        CHECK(end == evaluate(giambelli_matrix(log.end), n));
        CHECK(replay(end, log.inverse()) == start);
    }
}

TEST_CASE("determinant changes only by sign, and only at scalings and swaps") {
    for (const char* text : {"2,2/1", "3,2/1,1", "2,1"}) {
        SkewShape s = SkewShape::parse(text);
        OpLog log = chain(s);
        int n = std::max(1, s.box_count());
        SymPoly expected = schur_poly(s, n);
        PolyMatrix cur = evaluate(giambelli_matrix(log.start), n);
        SymPoly det = determinant(cur);
        for (const AtomicOp& op : log.ops) {
            cur = apply_op(cur, op);
            SymPoly next = determinant(cur);
            bool sign_only = (next == det) || (next == -det);
            CHECK(sign_only);
            bool may_flip = op.kind == AtomicOp::Kind::ScaleRow ||
                            op.kind == AtomicOp::Kind::ScaleCol ||
                            op.kind == AtomicOp::Kind::SwapRows ||
                            op.kind == AtomicOp::Kind::SwapCols;
            if (!may_flip) CHECK(next == det);
            det = next;
        }
        bool final_matches = (det == expected) || (det == -expected);
        CHECK(final_matches);
    }
}

TEST_CASE("op log json and trace") {
    OpLog log = chain(SkewShape::parse("2,2/1"));
    std::string json = log.to_json();
    CHECK(json.find("\"ops\"") != std::string::npos);
    CHECK(json.find("\"cases\"") != std::string::npos);
    CHECK(!log.trace().empty());
}

TEST_CASE("verify_chain reports op counts") {
    ChainReport report = verify_chain(SkewShape::parse("3,2,1/1"), 5);
    CHECK(report.ok());
    CHECK(report.total_ops > 0);
    CHECK(!report.summary().empty());
}
