#pragma once

/* Stable-equivalence engine: elementary operation logs over the ring of
   symmetric functions. Logs are emitted symbolically (coefficients are
   cutting-strip segments) and checked by an independent replayer. */

#include <string>
#include <vector>

#include "giambelli/gmatrix.hpp"
#include "giambelli/shapes.hpp"
#include "giambelli/strips.hpp"
#include "giambelli/symfun.hpp"

namespace giambelli {

/* Invertible elementary operation. Indices are 1-based. Add*Multiple adds
   sign * coeff * source to target; Scale* multiplies by unit (+1 or -1);
   Stabilize prepends a unit row and column; Destabilize removes them and
   requires the first row and column to be exactly (1,0,...,0). */
struct AtomicOp {
    enum class Kind {
        AddRowMultiple,
        AddColMultiple,
        ScaleRow,
        ScaleCol,
        SwapRows,
        SwapCols,
        Stabilize,
        Destabilize
    };
    Kind kind = Kind::Stabilize;
    int target = 0;
    int source = 0;
    int unit = 1;  // scale unit, or the coefficient sign for Add*
    MatrixEntry coeff;

    static AtomicOp add_row(int target, int source, MatrixEntry coeff, int sign);
    static AtomicOp add_col(int target, int source, MatrixEntry coeff, int sign);
    static AtomicOp scale_row(int row, int unit);
    static AtomicOp scale_col(int col, int unit);
    static AtomicOp swap_rows(int a, int b);
    static AtomicOp swap_cols(int a, int b);
    static AtomicOp stabilize();
    static AtomicOp destabilize();

    AtomicOp inverse() const;
    std::string describe() const;
};

struct ChainStage {
    std::string note;
    OutsideDecomposition decomposition;
    size_t op_end = 0;       // ops [0, op_end) have been applied at this stage
    bool canonical = true;   // matrix equals the canonical form of `decomposition`
};

struct OpLog {
    SkewShape shape;
    OutsideDecomposition start;  // horizontal decomposition of `shape`
    OutsideDecomposition end;    // vertical decomposition of `shape`
    std::vector<AtomicOp> ops;
    std::vector<std::string> annotations;  // one per op
    std::vector<ChainStage> stages;
    std::vector<std::string> cases;  // per twist step, e.g. "a'(b)"

    OpLog inverse() const;  // stages are not carried over
    /* Conjugation by transposition: row ops become column ops and vice
       versa, so a log taking M to N becomes one taking M^T to N^T. The
       transposed chain log runs from the Jacobi-Trudi matrix itself to
       the transpose of the dual Jacobi-Trudi matrix. */
    OpLog transposed() const;
    std::string to_json() const;
    std::string trace() const;
};

PolyMatrix apply_op(const PolyMatrix& m, const AtomicOp& op);

/* Folds apply_op over the log; deliberately nothing but a fold, so it is
   independent of the emitters above it. Throws with the failing op index. */
PolyMatrix replay(const PolyMatrix& start, const OpLog& log);

/* Row/column swaps taking giambelli_matrix(pi) to canonical_form(pi). */
OpLog permute_to_canonical(const OutsideDecomposition& pi);

struct TwistOps {
    TwistResult twist;
    std::vector<AtomicOp> ops;
    std::vector<std::string> notes;
};

/* Twist at content i together with an operation log from the canonical
   form of pi to the canonical form of the result. */
TwistOps twist_transform_ops(const OutsideDecomposition& pi, int i);

/* Full log from the Jacobi-Trudi orientation of `s` (the transpose of the
   Jacobi-Trudi matrix, i.e. giambelli_matrix of the horizontal
   decomposition) to the dual Jacobi-Trudi matrix (giambelli_matrix of the
   vertical decomposition). Empty leading columns are cleared first. */
OpLog chain(const SkewShape& s);

struct StageReport {
    std::string note;
    size_t op_count = 0;
    bool canonical_match = true;
    bool det_match = true;
};

struct ChainReport {
    SkewShape shape;
    int nvars = 1;
    bool endpoint_match = false;
    size_t total_ops = 0;
    std::vector<StageReport> stages;
    bool ok() const;
    std::string summary() const;
};

/* Builds chain(s), replays it and checks every stage against the
   canonical form of its decomposition, every stage determinant against
   +-schur_poly, and the final matrix against the dual Jacobi-Trudi
   matrix. Failures are report entries, not exceptions. */
ChainReport verify_chain(const SkewShape& s, int nvars);

}  // namespace giambelli
