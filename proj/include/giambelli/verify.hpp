#pragma once

/* Exhaustive and randomized verification suites over small-shape corpora,
   shared by the command-line `verify` subcommand and the acceptance
   tests. */

#include <cstdint>
#include <string>
#include <vector>

#include "giambelli/shapes.hpp"

namespace giambelli {

/* All edgewise connected skew shapes with 1..max_boxes boxes, each
   represented once: a box in row 1 and a box in column 1. */
std::vector<SkewShape> enumerate_connected_shapes(int max_boxes);

struct SuiteResult {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::vector<std::string> messages;  // first few failure descriptions
    bool ok() const { return failures == 0; }
    void fail(std::string message);
};

/* det(M(Pi)) equals the tableau expansion of the skew Schur function for
   every decomposition of every connected shape with <= max_boxes boxes. */
SuiteResult suite_giambelli_determinants(int max_boxes);

/* Decomposition <-> cutting strip round trip is the identity. */
SuiteResult suite_bijection_roundtrip(int max_boxes);

/* Init/Term deltas of every twist match exactly one case, the case
   matches the diagonal type, and twisting twice is the identity. */
SuiteResult suite_twist_cases(int max_boxes);

/* s_I s_J = s_{I right-glue J} + s_{I up-glue J} for random strip pairs. */
SuiteResult suite_glue_identity(int trials, int max_boxes_each, uint64_t seed);

/* Emitted chain logs replay to the dual Jacobi-Trudi matrix with exact
   per-stage conformance, over all connected shapes with <= max_boxes
   boxes plus the named corpus (including disconnected shapes and shapes
   needing first-column reduction). */
SuiteResult suite_chain_soundness(int max_boxes);

/* det C(Pi) = sign(row perm) * sign(col perm) * s_shape. */
SuiteResult suite_canonical_sign(int max_boxes);

}  // namespace giambelli
