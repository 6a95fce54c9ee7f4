#include "giambelli/gmatrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace giambelli {

MatrixEntry MatrixEntry::zero(int p, int q) {
    MatrixEntry out;
    out.kind = Kind::Zero;
    out.p = p;
    out.q = q;
    return out;
}

MatrixEntry MatrixEntry::one(int p, int q) {
    MatrixEntry out;
    out.kind = Kind::One;
    out.p = p;
    out.q = q;
    return out;
}

MatrixEntry MatrixEntry::from_segment(const Segment& seg) {
    switch (seg.kind) {
        case Segment::Kind::Empty: return one(seg.p, seg.q);
        case Segment::Kind::Undefined: return zero(seg.p, seg.q);
        case Segment::Kind::Strip: break;
    }
    MatrixEntry out;
    out.kind = Kind::Schur;
    out.strip = *seg.strip;
    out.p = seg.p;
    out.q = seg.q;
    return out;
}

SkewShape MatrixEntry::shape() const {
    if (kind != Kind::Schur) throw std::logic_error("entry has no shape");
    return strip.to_skew_shape();
}

std::string MatrixEntry::label() const {
    switch (kind) {
        case Kind::Zero: return "\u00b7";
        case Kind::One: return "1";
        case Kind::Schur: break;
    }
    return "s[" + shape().to_string() + "]";
}

bool MatrixEntry::same_value(const MatrixEntry& o) const {
    if (kind != o.kind) return false;
    if (kind != Kind::Schur) return true;
    return shape() == o.shape();
}

SymPoly MatrixEntry::evaluate(int nvars) const {
    switch (kind) {
        case Kind::Zero: return SymPoly(nvars);
        case Kind::One: return SymPoly::constant(nvars, 1);
        case Kind::Schur: break;
    }
    return schur_poly(strip.to_skew_shape(), nvars);
}

SymMatrix::SymMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    row_labels.resize(rows, 0);
    col_labels.resize(cols, 0);
}

MatrixEntry& SymMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return entries_[static_cast<size_t>(r) * cols_ + c];
}

const MatrixEntry& SymMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return entries_[static_cast<size_t>(r) * cols_ + c];
}

SymMatrix SymMatrix::transpose() const {
    SymMatrix out(cols_, rows_);
    out.row_labels = col_labels;
    out.col_labels = row_labels;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

bool SymMatrix::same_values(const SymMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).same_value(o.at(r, c))) return false;
    return true;
}

std::string SymMatrix::ascii() const {
    std::vector<size_t> width(cols_, 0);
    std::vector<std::vector<std::string>> cells(rows_, std::vector<std::string>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            cells[r][c] = at(r, c).label();
            size_t printed = cells[r][c].size() - (at(r, c).kind == MatrixEntry::Kind::Zero ? 1 : 0);
            width[c] = std::max(width[c], printed);
        }
    std::ostringstream out;
    for (int r = 0; r < rows_; ++r) {
        out << "[ ";
        for (int c = 0; c < cols_; ++c) {
            size_t printed =
                cells[r][c].size() - (at(r, c).kind == MatrixEntry::Kind::Zero ? 1 : 0);
            out << cells[r][c] << std::string(width[c] - printed, ' ');
            out << (c + 1 < cols_ ? "  " : " ");
        }
        out << "]\n";
    }
    return out.str();
}

std::string SymMatrix::latex() const {
    std::ostringstream out;
    out << "\\begin{pmatrix}\n";
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            const MatrixEntry& e = at(r, c);
            if (e.kind == MatrixEntry::Kind::Zero)
                out << "\\cdot";
            else if (e.kind == MatrixEntry::Kind::One)
                out << "1";
            else {
                SkewShape sh = e.shape();
                out << "s_{" << sh.outer().to_string();
                if (!sh.inner().empty()) out << "/" << sh.inner().to_string();
                out << "}";
            }
            out << (c + 1 < cols_ ? " & " : " \\\\\n");
        }
    }
    out << "\\end{pmatrix}\n";
    return out.str();
}

std::string SymMatrix::to_json() const {
    nlohmann::json j;
    j["rows"] = rows_;
    j["cols"] = cols_;
    j["row_labels"] = row_labels;
    j["col_labels"] = col_labels;
    j["entries"] = nlohmann::json::array();
    for (int r = 0; r < rows_; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < cols_; ++c) {
            const MatrixEntry& e = at(r, c);
            nlohmann::json cell;
            if (e.kind == MatrixEntry::Kind::Zero)
                cell["kind"] = "zero";
            else if (e.kind == MatrixEntry::Kind::One)
                cell["kind"] = "one";
            else {
                cell["kind"] = "schur";
                cell["shape"] = e.shape().to_string();
            }
            row.push_back(cell);
        }
        j["entries"].push_back(row);
    }
    return j.dump();
}

SymMatrix giambelli_matrix(const OutsideDecomposition& pi) {
    int m = pi.strip_count();
    SymMatrix out(m, m);
    const auto& strips = pi.strips();
    for (int i = 0; i < m; ++i) {
        out.row_labels[i] = strips[i].p;
        out.col_labels[i] = strips[i].q;
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.at(i, j) =
                MatrixEntry::from_segment(segment(pi.cutting(), strips[i].p, strips[j].q));
    return out;
}

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

CanonicalForm canonical_form(const OutsideDecomposition& pi) {
    int m = pi.strip_count();
    const auto& strips = pi.strips();
    CanonicalForm out;
    out.row_perm.resize(m);
    out.col_perm.resize(m);
    std::iota(out.row_perm.begin(), out.row_perm.end(), 0);
    std::iota(out.col_perm.begin(), out.col_perm.end(), 0);
    std::sort(out.row_perm.begin(), out.row_perm.end(),
              [&](int a, int b) { return strips[a].p > strips[b].p; });
    std::sort(out.col_perm.begin(), out.col_perm.end(),
              [&](int a, int b) { return strips[a].q > strips[b].q; });
    out.row_sign = permutation_sign(out.row_perm);
    out.col_sign = permutation_sign(out.col_perm);

    out.matrix = SymMatrix(m, m);
    for (int i = 0; i < m; ++i) {
        out.matrix.row_labels[i] = strips[out.row_perm[i]].p;
        out.matrix.col_labels[i] = strips[out.col_perm[i]].q;
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out.matrix.at(i, j) = MatrixEntry::from_segment(
                segment(pi.cutting(), strips[out.row_perm[i]].p, strips[out.col_perm[j]].q));
    return out;
}

SymMatrix jacobi_trudi(const SkewShape& s) {
    return giambelli_matrix(horizontal_decomposition(s)).transpose();
}

SymMatrix dual_jacobi_trudi(const SkewShape& s) {
    return giambelli_matrix(vertical_decomposition(s));
}

PolyMatrix::PolyMatrix(int r, int c, int nv)
    : rows(r), cols(c), nvars(nv), entries(static_cast<size_t>(r) * c, SymPoly(nv)) {}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows == o.rows && cols == o.cols && nvars == o.nvars && entries == o.entries;
}

PolyMatrix evaluate(const SymMatrix& m, int nvars) {
    PolyMatrix out(m.rows(), m.cols(), nvars);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).evaluate(nvars);
    return out;
}

SymPoly determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    int n = m.rows;
    if (n == 0) return SymPoly::constant(m.nvars, 1);
    if (n > 20) throw std::invalid_argument("matrix too large for subset expansion");
    // Expanding sparse rows first keeps the subset table and the degrees
    // of intermediate minors small; the row permutation only flips the
    // sign.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> nonzeros(n, 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!m.at(r, c).is_zero()) ++nonzeros[r];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return nonzeros[a] < nonzeros[b]; });
    std::unordered_map<uint32_t, SymPoly> level;
    level.emplace(0u, SymPoly::constant(m.nvars, 1));
    for (int rr = 0; rr < n; ++rr) {
        int r = order[rr];
        std::unordered_map<uint32_t, SymPoly> next;
        for (auto& [mask, minor] : level) {
            if (minor.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                const SymPoly& entry = m.at(r, c);
                if (entry.is_zero()) continue;
                SymPoly term = entry.is_one() ? minor : entry * minor;
                if (std::popcount(mask >> (c + 1)) & 1) term = -term;
                uint32_t key = mask | (1u << c);
                auto it = next.find(key);
                if (it == next.end())
                    next.emplace(key, std::move(term));
                else
                    it->second += term;
            }
        }
        level = std::move(next);
    }
    auto it = level.find((1u << n) - 1);
    if (it == level.end()) return SymPoly(m.nvars);
    return permutation_sign(order) < 0 ? -it->second : it->second;
}

}  // namespace giambelli
