#include "giambelli/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "giambelli/gmatrix.hpp"
#include "giambelli/stabeq.hpp"
#include "giambelli/strips.hpp"
#include "giambelli/symfun.hpp"

namespace giambelli {

void SuiteResult::fail(std::string message) {
    ++failures;
    if (messages.size() < 10) messages.push_back(std::move(message));
}

namespace {

void partitions_in_box(int max_part, int max_len, std::vector<int>& acc,
                       std::vector<std::vector<int>>& out) {
    out.push_back(acc);
    if (static_cast<int>(acc.size()) == max_len) return;
    int hi = acc.empty() ? max_part : std::min(max_part, acc.back());
    for (int next = hi; next >= 1; --next) {
        acc.push_back(next);
        partitions_in_box(max_part, max_len, acc, out);
        acc.pop_back();
    }
}

void inner_partitions(const Partition& outer, int min_sum, int i, std::vector<int>& acc,
                      int sum, std::vector<std::vector<int>>& out) {
    if (i > outer.length()) {
        if (sum >= min_sum) out.push_back(acc);
        return;
    }
    // Remaining rows can contribute at most sum of remaining outer parts.
    int remaining = 0;
    for (int r = i; r <= outer.length(); ++r) remaining += outer.part(r);
    if (sum + remaining < min_sum) return;
    int hi = std::min(outer.part(i), i == 1 ? outer.part(1) : acc[i - 2]);
    for (int v = hi; v >= 0; --v) {
        acc.push_back(v);
        inner_partitions(outer, min_sum, i + 1, acc, sum + v, out);
        acc.pop_back();
        if (v == 0) break;
    }
}

}  // namespace

std::vector<SkewShape> enumerate_connected_shapes(int max_boxes) {
    std::vector<std::vector<int>> outers;
    std::vector<int> acc;
    partitions_in_box(max_boxes, max_boxes, acc, outers);
    std::vector<SkewShape> shapes;
    for (auto& parts : outers) {
        if (parts.empty()) continue;
        Partition outer{std::vector<int>(parts)};
        std::vector<std::vector<int>> inners;
        std::vector<int> acc2;
        inner_partitions(outer, outer.sum() - max_boxes, 1, acc2, 0, inners);
        for (auto& iparts : inners) {
            std::vector<int> trimmed = iparts;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            Partition inner(std::move(trimmed));
            // One representative per shape: a box in row 1 and in column 1.
            if (inner.part(1) == outer.part(1)) continue;
            if (inner.length() == outer.length()) continue;
            SkewShape shape(outer, inner);
            int boxes = shape.box_count();
            if (boxes < 1 || boxes > max_boxes) continue;
            if (!shape.edgewise_connected()) continue;
            shapes.push_back(std::move(shape));
        }
    }
    std::sort(shapes.begin(), shapes.end());
    return shapes;
}

SuiteResult suite_giambelli_determinants(int max_boxes) {
    SuiteResult result;
    result.name = "giambelli-determinants";
    for (const SkewShape& shape : enumerate_connected_shapes(max_boxes)) {
        int n = shape.box_count();
        SymPoly expected = schur_poly(shape, n);
        for (const OutsideDecomposition& pi : enumerate_decompositions(shape)) {
            ++result.checked;
            SymPoly det = determinant(evaluate(giambelli_matrix(pi), n));
            if (!(det == expected))
                result.fail("det mismatch for " + shape.to_string() + " " + pi.bracket_list());
        }
    }
    return result;
}

SuiteResult suite_bijection_roundtrip(int max_boxes) {
    SuiteResult result;
    result.name = "bijection-roundtrip";
    for (const SkewShape& shape : enumerate_connected_shapes(max_boxes)) {
        for (const OutsideDecomposition& pi : enumerate_decompositions(shape)) {
            ++result.checked;
            CuttingStrip phi = cutting_strip(pi);
            // Realized steps (the bijection's d-1 step directions).
            std::vector<Step> steps(phi.steps());
            OutsideDecomposition back = decomposition_from_cutting_strip(shape, steps);
            if (!(back == pi))
                result.fail("round trip failed for " + shape.to_string() + " " +
                            pi.bracket_list());
        }
    }
    return result;
}

namespace {

std::set<int> as_set(const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); }

TheoremCase expected_case_for_type(DiagonalType type, Step direction) {
    switch (type) {
        case DiagonalType::Type1:
            return direction == Step::Up ? TheoremCase::A : TheoremCase::B;
        case DiagonalType::Type2:
            return direction == Step::Up ? TheoremCase::B : TheoremCase::A;
        case DiagonalType::Type3: return TheoremCase::C;
        case DiagonalType::Type4: return TheoremCase::D;
    }
    return TheoremCase::C;
}

}  // namespace

SuiteResult suite_twist_cases(int max_boxes) {
    SuiteResult result;
    result.name = "twist-cases";
    for (const SkewShape& shape : enumerate_connected_shapes(max_boxes)) {
        for (const OutsideDecomposition& pi : enumerate_decompositions(shape)) {
            InitTerm before = pi.init_term();
            std::set<int> init0 = as_set(before.init), term0 = as_set(before.term);
            for (int i = shape.content_min(); i < shape.content_max(); ++i) {
                ++result.checked;
                TwistResult tw = twist(pi, i);
                InitTerm after = tw.decomposition.init_term();
                std::set<int> init1 = as_set(after.init), term1 = as_set(after.term);

                bool has_i = term0.count(i) > 0;
                bool has_i1 = init0.count(i + 1) > 0;
                TheoremCase expect = has_i ? (has_i1 ? TheoremCase::B : TheoremCase::C)
                                           : (has_i1 ? TheoremCase::D : TheoremCase::A);
                if (tw.tcase != expect) {
                    result.fail("case label mismatch at " + shape.to_string());
                    continue;
                }

                std::set<int> init_want = init0, term_want = term0;
                switch (expect) {
                    case TheoremCase::A:
                        init_want.insert(i + 1);
                        term_want.insert(i);
                        break;
                    case TheoremCase::B:
                        init_want.erase(i + 1);
                        term_want.erase(i);
                        break;
                    case TheoremCase::C:
                    case TheoremCase::D: break;
                }
                if (init1 != init_want || term1 != term_want)
                    result.fail("Init/Term delta mismatch for " + shape.to_string() + " " +
                                pi.bracket_list() + " at i=" + std::to_string(i));

                // The case must agree with the diagonal type and direction.
                TheoremCase by_type =
                    expected_case_for_type(shape.diagonal_type(i), pi.cutting().step_at(i));
                if (by_type != expect)
                    result.fail("diagonal type disagrees with twist case for " +
                                shape.to_string() + " at i=" + std::to_string(i));

                // Twisting twice is the identity.
                if (!(twist(tw.decomposition, i).decomposition == pi))
                    result.fail("twist involution failed for " + shape.to_string());
            }
        }
    }
    return result;
}

SuiteResult suite_glue_identity(int trials, int max_boxes_each, uint64_t seed) {
    SuiteResult result;
    result.name = "glue-identity";
    std::mt19937_64 rng(seed);
    auto random_strip_shape = [&]() {
        std::uniform_int_distribution<int> size_dist(1, max_boxes_each);
        int boxes = size_dist(rng);
        BorderStrip strip;
        strip.start_content = 0;
        for (int k = 0; k + 1 < boxes; ++k)
            strip.steps.push_back(rng() % 2 == 0 ? Step::Right : Step::Up);
        return strip.to_skew_shape();
    };
    for (int t = 0; t < trials; ++t) {
        ++result.checked;
        SkewShape I = random_strip_shape();
        SkewShape J = random_strip_shape();
        int nvars = I.box_count() + J.box_count();
        if (!check_glue_identity(I, J, nvars))
            result.fail("glue identity failed for " + I.to_string() + " and " + J.to_string());
    }
    return result;
}

SuiteResult suite_chain_soundness(int max_boxes) {
    SuiteResult result;
    result.name = "chain-soundness";
    std::vector<SkewShape> corpus = enumerate_connected_shapes(max_boxes);
    corpus.push_back(SkewShape::parse("6,5,3,1/4,4,3"));
    corpus.push_back(SkewShape::parse("3,2,1/1"));
    corpus.push_back(SkewShape::parse("4,4,2/2,1"));
    corpus.push_back(SkewShape::parse("2,2/1"));
    // Shapes exercising first-column reduction, empty first rows,
    // disconnected pieces and the fully empty shape.
    for (const char* text : {"2,2/2", "3,3/3", "3,2/1,1", "2,2,1/2,2", "2,1/1,1", "1,1,1/1,1",
                             "3,1,1/2", "2,2/2,2", "4,2,1/3,1", "3,3,1/3,3"})
        corpus.push_back(SkewShape::parse(text));
    for (const SkewShape& shape : corpus) {
        ++result.checked;
        int nvars = std::max(1, shape.box_count());
        ChainReport report = verify_chain(shape, nvars);
        if (!report.ok())
            result.fail("chain verification failed:\n" + report.summary());
    }
    return result;
}

SuiteResult suite_canonical_sign(int max_boxes) {
    SuiteResult result;
    result.name = "canonical-sign";
    for (const SkewShape& shape : enumerate_connected_shapes(max_boxes)) {
        int n = shape.box_count();
        SymPoly expected = schur_poly(shape, n);
        for (const OutsideDecomposition& pi : enumerate_decompositions(shape)) {
            ++result.checked;
            CanonicalForm canon = canonical_form(pi);
            SymPoly det = determinant(evaluate(canon.matrix, n));
            SymPoly want = canon.row_sign * canon.col_sign < 0 ? -expected : expected;
            if (!(det == want))
                result.fail("canonical sign mismatch for " + shape.to_string() + " " +
                            pi.bracket_list());
        }
    }
    return result;
}

}  // namespace giambelli
