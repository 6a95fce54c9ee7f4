#pragma once

/* Giambelli-type matrices of cutting-strip segments, their canonical
   forms, Jacobi-Trudi and dual Jacobi-Trudi matrices, and exact
   determinant evaluation over the polynomial ring. */

#include <string>
#include <vector>

#include "giambelli/shapes.hpp"
#include "giambelli/strips.hpp"
#include "giambelli/symfun.hpp"

namespace giambelli {

/* Matrix entry: a skew Schur function of a strip, the constant 1 (empty
   segment) or 0 (undefined segment). Schur entries keep the segment they
   came from so labels and logs can be printed. */
struct MatrixEntry {
    enum class Kind { Zero, One, Schur };
    Kind kind = Kind::Zero;
    BorderStrip strip;  // Kind::Schur only
    int p = 0, q = 0;   // segment bounds (provenance)

    static MatrixEntry zero(int p, int q);
    static MatrixEntry one(int p, int q);
    static MatrixEntry from_segment(const Segment& seg);

    SkewShape shape() const;  // normalized; Kind::Schur only
    std::string label() const;
    /* Structural value equality: Schur entries compare by normalized shape. */
    bool same_value(const MatrixEntry& o) const;
    SymPoly evaluate(int nvars) const;
};

class SymMatrix {
  public:
    SymMatrix() = default;
    SymMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    MatrixEntry& at(int r, int c);
    const MatrixEntry& at(int r, int c) const;

    std::vector<int> row_labels;  // contents labelling rows
    std::vector<int> col_labels;

    SymMatrix transpose() const;
    bool same_values(const SymMatrix& o) const;

    std::string ascii() const;
    std::string latex() const;
    std::string to_json() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<MatrixEntry> entries_;
};

/* Giambelli-type matrix of a decomposition with strips in stored order:
   entry (i,j) is the segment from the initial content of strip i to the
   terminal content of strip j. Rows carry initial contents, columns carry
   terminal contents; its determinant is the skew Schur function. */
SymMatrix giambelli_matrix(const OutsideDecomposition& pi);

struct CanonicalForm {
    SymMatrix matrix;             // rows: initial contents decreasing; cols: terminal decreasing
    std::vector<int> row_perm;    // canonical row i came from stored strip row_perm[i]
    std::vector<int> col_perm;
    int row_sign = 1;
    int col_sign = 1;
};

CanonicalForm canonical_form(const OutsideDecomposition& pi);

/* (h_{outer_i - inner_j - i + j}) of size len(outer); rows carry terminal
   contents and columns initial contents of the horizontal strips, so this
   equals the transpose of giambelli_matrix(horizontal_decomposition(s)). */
SymMatrix jacobi_trudi(const SkewShape& s);

/* (e_{outer'_i - inner'_j - i + j}) of size outer_1; coincides with
   giambelli_matrix(vertical_decomposition(s)). */
SymMatrix dual_jacobi_trudi(const SkewShape& s);

struct PolyMatrix {
    int rows = 0, cols = 0;
    int nvars = 1;
    std::vector<SymPoly> entries;

    PolyMatrix() = default;
    PolyMatrix(int r, int c, int nv);
    SymPoly& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const SymPoly& at(int r, int c) const {
        return entries[static_cast<size_t>(r) * cols + c];
    }
    bool operator==(const PolyMatrix& o) const;
};

PolyMatrix evaluate(const SymMatrix& m, int nvars);

/* Exact determinant by Laplace expansion memoized over column subsets;
   division-free. */
SymPoly determinant(const PolyMatrix& m);

int permutation_sign(const std::vector<int>& perm);

}  // namespace giambelli
