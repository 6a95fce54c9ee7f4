#include "giambelli/stabeq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace giambelli {

AtomicOp AtomicOp::add_row(int target, int source, MatrixEntry coeff, int sign) {
    AtomicOp op;
    op.kind = Kind::AddRowMultiple;
    op.target = target;
    op.source = source;
    op.coeff = std::move(coeff);
    op.unit = sign;
    return op;
}

AtomicOp AtomicOp::add_col(int target, int source, MatrixEntry coeff, int sign) {
    AtomicOp op = add_row(target, source, std::move(coeff), sign);
    op.kind = Kind::AddColMultiple;
    return op;
}

AtomicOp AtomicOp::scale_row(int row, int unit) {
    AtomicOp op;
    op.kind = Kind::ScaleRow;
    op.target = row;
    op.unit = unit;
    return op;
}

AtomicOp AtomicOp::scale_col(int col, int unit) {
    AtomicOp op = scale_row(col, unit);
    op.kind = Kind::ScaleCol;
    return op;
}

AtomicOp AtomicOp::swap_rows(int a, int b) {
    AtomicOp op;
    op.kind = Kind::SwapRows;
    op.target = a;
    op.source = b;
    return op;
}

AtomicOp AtomicOp::swap_cols(int a, int b) {
    AtomicOp op = swap_rows(a, b);
    op.kind = Kind::SwapCols;
    return op;
}

AtomicOp AtomicOp::stabilize() {
    AtomicOp op;
    op.kind = Kind::Stabilize;
    return op;
}

AtomicOp AtomicOp::destabilize() {
    AtomicOp op;
    op.kind = Kind::Destabilize;
    return op;
}

AtomicOp AtomicOp::inverse() const {
    AtomicOp op = *this;
    switch (kind) {
        case Kind::AddRowMultiple:
        case Kind::AddColMultiple: op.unit = -unit; break;
        case Kind::ScaleRow:
        case Kind::ScaleCol:
        case Kind::SwapRows:
        case Kind::SwapCols: break;
        case Kind::Stabilize: op.kind = Kind::Destabilize; break;
        case Kind::Destabilize: op.kind = Kind::Stabilize; break;
    }
    return op;
}

std::string AtomicOp::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::AddRowMultiple:
            out << "row " << target << (unit < 0 ? " -= " : " += ") << coeff.label()
                << " * row " << source;
            break;
        case Kind::AddColMultiple:
            out << "col " << target << (unit < 0 ? " -= " : " += ") << coeff.label()
                << " * col " << source;
            break;
        case Kind::ScaleRow: out << "scale row " << target << " by " << unit; break;
        case Kind::ScaleCol: out << "scale col " << target << " by " << unit; break;
        case Kind::SwapRows: out << "swap rows " << target << "," << source; break;
        case Kind::SwapCols: out << "swap cols " << target << "," << source; break;
        case Kind::Stabilize: out << "stabilize"; break;
        case Kind::Destabilize: out << "destabilize"; break;
    }
    return out.str();
}

PolyMatrix apply_op(const PolyMatrix& m, const AtomicOp& op) {
    auto check_row = [&](int r) {
        if (r < 1 || r > m.rows) throw std::out_of_range("row index out of range");
    };
    auto check_col = [&](int c) {
        if (c < 1 || c > m.cols) throw std::out_of_range("column index out of range");
    };
    switch (op.kind) {
        case AtomicOp::Kind::AddRowMultiple: {
            check_row(op.target);
            check_row(op.source);
            if (op.target == op.source)
                throw std::invalid_argument("row op with target == source");
            PolyMatrix out = m;
            SymPoly c = op.coeff.evaluate(m.nvars);
            if (op.unit == -1) c = -c;
            else if (op.unit != 1) throw std::invalid_argument("coefficient sign must be +-1");
            for (int j = 0; j < m.cols; ++j)
                out.at(op.target - 1, j) += c * m.at(op.source - 1, j);
            return out;
        }
        case AtomicOp::Kind::AddColMultiple: {
            check_col(op.target);
            check_col(op.source);
            if (op.target == op.source)
                throw std::invalid_argument("column op with target == source");
            PolyMatrix out = m;
            SymPoly c = op.coeff.evaluate(m.nvars);
            if (op.unit == -1) c = -c;
            else if (op.unit != 1) throw std::invalid_argument("coefficient sign must be +-1");
            for (int r = 0; r < m.rows; ++r)
                out.at(r, op.target - 1) += c * m.at(r, op.source - 1);
            return out;
        }
        case AtomicOp::Kind::ScaleRow: {
            check_row(op.target);
            if (op.unit != 1 && op.unit != -1)
                throw std::invalid_argument("scale unit must be +-1");
            PolyMatrix out = m;
            if (op.unit == -1)
                for (int j = 0; j < m.cols; ++j)
                    out.at(op.target - 1, j) = -out.at(op.target - 1, j);
            return out;
        }
        case AtomicOp::Kind::ScaleCol: {
            check_col(op.target);
            if (op.unit != 1 && op.unit != -1)
                throw std::invalid_argument("scale unit must be +-1");
            PolyMatrix out = m;
            if (op.unit == -1)
                for (int r = 0; r < m.rows; ++r)
                    out.at(r, op.target - 1) = -out.at(r, op.target - 1);
            return out;
        }
        case AtomicOp::Kind::SwapRows: {
            check_row(op.target);
            check_row(op.source);
            PolyMatrix out = m;
            for (int j = 0; j < m.cols; ++j)
                std::swap(out.at(op.target - 1, j), out.at(op.source - 1, j));
            return out;
        }
        case AtomicOp::Kind::SwapCols: {
            check_col(op.target);
            check_col(op.source);
            PolyMatrix out = m;
            for (int r = 0; r < m.rows; ++r)
                std::swap(out.at(r, op.target - 1), out.at(r, op.source - 1));
            return out;
        }
        case AtomicOp::Kind::Stabilize: {
            PolyMatrix out(m.rows + 1, m.cols + 1, m.nvars);
            out.at(0, 0) = SymPoly::constant(m.nvars, 1);
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) out.at(r + 1, c + 1) = m.at(r, c);
            return out;
        }
        case AtomicOp::Kind::Destabilize: {
            if (m.rows < 1 || m.cols < 1)
                throw std::invalid_argument("destabilize on an empty matrix");
            if (!m.at(0, 0).is_one())
                throw std::domain_error("destabilize: corner entry is not 1");
            for (int j = 1; j < m.cols; ++j)
                if (!m.at(0, j).is_zero())
                    throw std::domain_error("destabilize: first row is not a unit vector");
            for (int r = 1; r < m.rows; ++r)
                if (!m.at(r, 0).is_zero())
                    throw std::domain_error("destabilize: first column is not a unit vector");
            PolyMatrix out(m.rows - 1, m.cols - 1, m.nvars);
            for (int r = 1; r < m.rows; ++r)
                for (int c = 1; c < m.cols; ++c) out.at(r - 1, c - 1) = m.at(r, c);
            return out;
        }
    }
    throw std::logic_error("unhandled op kind");
}

PolyMatrix replay(const PolyMatrix& start, const OpLog& log) {
    PolyMatrix current = start;
    for (size_t idx = 0; idx < log.ops.size(); ++idx) {
        try {
            current = apply_op(current, log.ops[idx]);
        } catch (const std::exception& e) {
            throw std::runtime_error("replay failed at op " + std::to_string(idx) + " (" +
                                     log.ops[idx].describe() + "): " + e.what());
        }
    }
    return current;
}

OpLog OpLog::inverse() const {
    OpLog out;
    out.shape = shape;
    out.start = end;
    out.end = start;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) out.ops.push_back(it->inverse());
    for (auto it = annotations.rbegin(); it != annotations.rend(); ++it)
        out.annotations.push_back("inverse of: " + *it);
    return out;
}

OpLog OpLog::transposed() const {
    OpLog out = *this;
    for (AtomicOp& op : out.ops) {
        switch (op.kind) {
            case AtomicOp::Kind::AddRowMultiple: op.kind = AtomicOp::Kind::AddColMultiple; break;
            case AtomicOp::Kind::AddColMultiple: op.kind = AtomicOp::Kind::AddRowMultiple; break;
            case AtomicOp::Kind::ScaleRow: op.kind = AtomicOp::Kind::ScaleCol; break;
            case AtomicOp::Kind::ScaleCol: op.kind = AtomicOp::Kind::ScaleRow; break;
            case AtomicOp::Kind::SwapRows: op.kind = AtomicOp::Kind::SwapCols; break;
            case AtomicOp::Kind::SwapCols: op.kind = AtomicOp::Kind::SwapRows; break;
            case AtomicOp::Kind::Stabilize:
            case AtomicOp::Kind::Destabilize: break;
        }
    }
    return out;
}

namespace {

nlohmann::json entry_json(const MatrixEntry& e) {
    nlohmann::json j;
    if (e.kind == MatrixEntry::Kind::Zero)
        j["kind"] = "zero";
    else if (e.kind == MatrixEntry::Kind::One)
        j["kind"] = "one";
    else {
        j["kind"] = "schur";
        j["shape"] = e.shape().to_string();
    }
    return j;
}

nlohmann::json descriptor_json(const SkewShape& shape, const OutsideDecomposition& pi) {
    nlohmann::json j;
    j["shape"] = shape.to_string();
    j["decomposition"] = nlohmann::json::parse(decomposition_to_json(pi));
    return j;
}

}  // namespace

std::string OpLog::to_json() const {
    nlohmann::json j;
    j["start"] = descriptor_json(shape, start);
    j["end"] = descriptor_json(shape, end);
    j["cases"] = cases;
    j["ops"] = nlohmann::json::array();
    for (size_t idx = 0; idx < ops.size(); ++idx) {
        const AtomicOp& op = ops[idx];
        nlohmann::json o;
        switch (op.kind) {
            case AtomicOp::Kind::AddRowMultiple:
                o["op"] = "addRow";
                o["target"] = op.target;
                o["source"] = op.source;
                o["coef"] = entry_json(op.coeff);
                o["sign"] = op.unit;
                break;
            case AtomicOp::Kind::AddColMultiple:
                o["op"] = "addCol";
                o["target"] = op.target;
                o["source"] = op.source;
                o["coef"] = entry_json(op.coeff);
                o["sign"] = op.unit;
                break;
            case AtomicOp::Kind::ScaleRow:
                o["op"] = "scaleRow";
                o["target"] = op.target;
                o["unit"] = op.unit;
                break;
            case AtomicOp::Kind::ScaleCol:
                o["op"] = "scaleCol";
                o["target"] = op.target;
                o["unit"] = op.unit;
                break;
            case AtomicOp::Kind::SwapRows:
                o["op"] = "swapRows";
                o["target"] = op.target;
                o["source"] = op.source;
                break;
            case AtomicOp::Kind::SwapCols:
                o["op"] = "swapCols";
                o["target"] = op.target;
                o["source"] = op.source;
                break;
            case AtomicOp::Kind::Stabilize: o["op"] = "stabilize"; break;
            case AtomicOp::Kind::Destabilize: o["op"] = "destabilize"; break;
        }
        if (idx < annotations.size() && !annotations[idx].empty())
            o["note"] = annotations[idx];
        j["ops"].push_back(o);
    }
    j["stages"] = nlohmann::json::array();
    for (const ChainStage& st : stages) {
        nlohmann::json sj;
        sj["note"] = st.note;
        sj["op_end"] = st.op_end;
        sj["canonical"] = st.canonical;
        sj["shape"] = st.decomposition.shape().to_string();
        sj["decomposition"] = nlohmann::json::parse(decomposition_to_json(st.decomposition));
        j["stages"].push_back(sj);
    }
    return j.dump();
}

std::string OpLog::trace() const {
    std::ostringstream out;
    size_t idx = 0;
    for (const ChainStage& st : stages) {
        for (; idx < st.op_end; ++idx) {
            out << "  " << ops[idx].describe();
            if (idx < annotations.size() && !annotations[idx].empty())
                out << "    [" << annotations[idx] << "]";
            out << "\n";
        }
        out << "stage: " << st.note << "  " << st.decomposition.bracket_list() << "\n";
    }
    for (; idx < ops.size(); ++idx) out << "  " << ops[idx].describe() << "\n";
    return out.str();
}

OpLog permute_to_canonical(const OutsideDecomposition& pi) {
    OpLog log;
    log.shape = pi.shape();
    log.start = pi;
    log.end = pi;
    std::vector<int> pvals, qvals;
    for (StripLabel lab : pi.strips()) {
        pvals.push_back(lab.p);
        qvals.push_back(lab.q);
    }
    int m = static_cast<int>(pvals.size());
    for (int a = 0; a < m; ++a) {
        int best = a;
        for (int b = a + 1; b < m; ++b)
            if (pvals[b] > pvals[best]) best = b;
        if (best != a) {
            log.ops.push_back(AtomicOp::swap_rows(a + 1, best + 1));
            log.annotations.push_back("sort rows by initial content");
            std::swap(pvals[a], pvals[best]);
        }
    }
    for (int a = 0; a < m; ++a) {
        int best = a;
        for (int b = a + 1; b < m; ++b)
            if (qvals[b] > qvals[best]) best = b;
        if (best != a) {
            log.ops.push_back(AtomicOp::swap_cols(a + 1, best + 1));
            log.annotations.push_back("sort columns by terminal content");
            std::swap(qvals[a], qvals[best]);
        }
    }
    return log;
}

namespace {

int count_greater(const std::vector<int>& sorted_desc, int value) {
    int count = 0;
    for (int v : sorted_desc)
        if (v > value) ++count;
    return count;
}

struct Emitter {
    std::vector<AtomicOp> ops;
    std::vector<std::string> notes;
    void add(AtomicOp op, std::string note) {
        ops.push_back(std::move(op));
        notes.push_back(std::move(note));
    }
};

/* The four operation templates realizing one twist step on canonical
   forms. ps/qs are the current sorted Init/Term; `forward` means the
   cutting-strip direction at i is Up (the proof's orientation), otherwise
   the inverse sequences run. Cases A and B are orientation-free. */
void emit_twist_case(Emitter& em, const CuttingStrip& phi, const std::vector<int>& ps,
                     const std::vector<int>& qs, int i, TheoremCase tcase, bool forward) {
    int m = static_cast<int>(ps.size());
    int k = count_greater(ps, i + 1);
    int kp = count_greater(qs, i);
    auto seg = [&](int a, int b) { return MatrixEntry::from_segment(segment(phi, a, b)); };
    std::string tag = "case " + to_string(tcase);

    switch (tcase) {
        case TheoremCase::B: {  // strip count shrinks by one
            if (ps[k] != i + 1 || qs[kp] != i)
                throw std::logic_error("case B indices out of place");
            for (int j = 1; j <= kp; ++j)
                em.add(AtomicOp::add_col(j, kp + 1, seg(i + 1, qs[j - 1]), -1), tag);
            for (int t = k + 2; t <= m; ++t)
                em.add(AtomicOp::add_row(t, k + 1, seg(ps[t - 1], i), -1), tag);
            for (int t = k + 2; t <= m; ++t) em.add(AtomicOp::scale_row(t, -1), tag);
            for (int j = kp + 2; j <= m; ++j) em.add(AtomicOp::scale_col(j, -1), tag);
            for (int r = k + 1; r >= 2; --r)
                em.add(AtomicOp::swap_rows(r, r - 1), tag + ": move unit row to front");
            for (int c = kp + 1; c >= 2; --c)
                em.add(AtomicOp::swap_cols(c, c - 1), tag + ": move unit column to front");
            em.add(AtomicOp::destabilize(), tag);
            break;
        }
        case TheoremCase::A: {  // strip count grows by one
            em.add(AtomicOp::stabilize(), tag);
            for (int r = 1; r <= k; ++r)
                em.add(AtomicOp::swap_rows(r, r + 1), tag + ": place unit row");
            for (int c = 1; c <= kp; ++c)
                em.add(AtomicOp::swap_cols(c, c + 1), tag + ": place unit column");
            for (int t = k + 2; t <= m + 1; ++t) em.add(AtomicOp::scale_row(t, -1), tag);
            for (int j = kp + 2; j <= m + 1; ++j) em.add(AtomicOp::scale_col(j, -1), tag);
            for (int t = k + 2; t <= m + 1; ++t)
                em.add(AtomicOp::add_row(t, k + 1, seg(ps[t - 2], i), 1), tag);
            for (int j = 1; j <= kp; ++j)
                em.add(AtomicOp::add_col(j, kp + 1, seg(i + 1, qs[j - 1]), 1), tag);
            break;
        }
        case TheoremCase::C: {  // same dimension, column subtractions
            int kpos = kp + 1;  // 1-based position of i in qs
            if (qs[kpos - 1] != i) throw std::logic_error("case C index out of place");
            if (forward) {
                for (int j = 1; j <= kpos - 1; ++j)
                    em.add(AtomicOp::add_col(j, kpos, seg(i + 1, qs[j - 1]), -1), tag);
                for (int t = k + 1; t <= m; ++t) em.add(AtomicOp::scale_row(t, -1), tag);
                for (int j = kpos; j <= m; ++j) em.add(AtomicOp::scale_col(j, -1), tag);
            } else {
                for (int j = kpos; j <= m; ++j) em.add(AtomicOp::scale_col(j, -1), tag);
                for (int t = k + 1; t <= m; ++t) em.add(AtomicOp::scale_row(t, -1), tag);
                for (int j = 1; j <= kpos - 1; ++j)
                    em.add(AtomicOp::add_col(j, kpos, seg(i + 1, qs[j - 1]), 1), tag);
            }
            break;
        }
        case TheoremCase::D: {  // same dimension, row subtractions
            if (ps[k] != i + 1) throw std::logic_error("case D index out of place");
            if (forward) {
                for (int t = k + 2; t <= m; ++t)
                    em.add(AtomicOp::add_row(t, k + 1, seg(ps[t - 1], i), -1), tag);
                for (int t = k + 2; t <= m; ++t) em.add(AtomicOp::scale_row(t, -1), tag);
                for (int j = kp + 1; j <= m; ++j) em.add(AtomicOp::scale_col(j, -1), tag);
            } else {
                for (int j = kp + 1; j <= m; ++j) em.add(AtomicOp::scale_col(j, -1), tag);
                for (int t = k + 2; t <= m; ++t) em.add(AtomicOp::scale_row(t, -1), tag);
                for (int t = k + 2; t <= m; ++t)
                    em.add(AtomicOp::add_row(t, k + 1, seg(ps[t - 1], i), 1), tag);
            }
            break;
        }
    }
}

/* Removes an empty strip whose label is extremal: either the strictly
   largest (p,q), whose canonical row is already the unit vector, or the
   strictly smallest, whose canonical column is. */
void emit_remove_empty_strip(Emitter& em, const OutsideDecomposition& pi, StripLabel lab,
                             const std::string& tag) {
    if (!lab.is_empty()) throw std::logic_error("remove_empty_strip needs an empty label");
    InitTerm it = pi.init_term();
    const auto& ps = it.init;
    const auto& qs = it.term;
    int m = static_cast<int>(ps.size());
    auto seg = [&](int a, int b) { return MatrixEntry::from_segment(segment(pi.cutting(), a, b)); };
    if (m >= 1 && ps.front() == lab.p && qs.front() == lab.q) {
        // Unit row at the top; clear the first column below it.
        for (int t = 2; t <= m; ++t)
            em.add(AtomicOp::add_row(t, 1, seg(ps[t - 1], lab.q), -1), tag);
        em.add(AtomicOp::destabilize(), tag);
    } else if (m >= 1 && ps.back() == lab.p && qs.back() == lab.q) {
        // Unit column at the right edge; clear the last row.
        for (int j = 1; j <= m - 1; ++j)
            em.add(AtomicOp::add_col(j, m, seg(lab.p, qs[j - 1]), -1), tag);
        for (int r = m; r >= 2; --r)
            em.add(AtomicOp::swap_rows(r, r - 1), tag + ": move unit row to front");
        for (int c = m; c >= 2; --c)
            em.add(AtomicOp::swap_cols(c, c - 1), tag + ": move unit column to front");
        em.add(AtomicOp::destabilize(), tag);
    } else {
        throw std::logic_error("empty strip is not extremal; cannot clear it");
    }
}

/* Inserts an empty strip with the strictly smallest label of `target`;
   `target` is the decomposition after insertion. */
void emit_insert_empty_strip(Emitter& em, const OutsideDecomposition& target, StripLabel lab,
                             const std::string& tag) {
    InitTerm it = target.init_term();
    const auto& ps = it.init;
    const auto& qs = it.term;
    int m = static_cast<int>(ps.size());
    if (ps.back() != lab.p || qs.back() != lab.q)
        throw std::logic_error("inserted empty strip must be minimal");
    auto seg = [&](int a, int b) {
        return MatrixEntry::from_segment(segment(target.cutting(), a, b));
    };
    em.add(AtomicOp::stabilize(), tag);
    for (int r = 1; r <= m - 1; ++r)
        em.add(AtomicOp::swap_rows(r, r + 1), tag + ": move unit row to back");
    for (int c = 1; c <= m - 1; ++c)
        em.add(AtomicOp::swap_cols(c, c + 1), tag + ": move unit column to back");
    for (int j = 1; j <= m - 1; ++j) {
        MatrixEntry coeff = seg(lab.p, qs[j - 1]);
        if (coeff.kind == MatrixEntry::Kind::Zero) continue;
        em.add(AtomicOp::add_col(j, m, coeff, 1), tag);
    }
}

OutsideDecomposition without_strip(const OutsideDecomposition& pi, StripLabel lab) {
    std::vector<StripLabel> strips;
    bool found = false;
    for (StripLabel s : pi.strips()) {
        if (!found && s == lab) {
            found = true;
            continue;
        }
        strips.push_back(s);
    }
    if (!found) throw std::logic_error("strip to remove is not present");
    return OutsideDecomposition(pi.shape(), std::move(strips), pi.cutting());
}

}  // namespace

TwistOps twist_transform_ops(const OutsideDecomposition& pi, int i) {
    TwistOps out;
    out.twist = twist(pi, i);
    InitTerm it = pi.init_term();
    bool forward = pi.cutting().step_at(i) == Step::Up;
    Emitter em;
    emit_twist_case(em, pi.cutting(), it.init, it.term, i, out.twist.tcase, forward);
    out.ops = std::move(em.ops);
    out.notes = std::move(em.notes);
    return out;
}

OpLog chain(const SkewShape& s) {
    OpLog log;
    log.shape = s;
    log.start = horizontal_decomposition(s);
    log.end = vertical_decomposition(s);

    OutsideDecomposition cur = log.start;
    auto add_stage = [&](std::string note, bool canonical) {
        log.stages.push_back({std::move(note), cur, log.ops.size(), canonical});
    };
    auto emit = [&](Emitter em) {
        for (size_t k = 0; k < em.ops.size(); ++k) {
            log.ops.push_back(std::move(em.ops[k]));
            log.annotations.push_back(std::move(em.notes[k]));
        }
    };

    add_stage("horizontal decomposition (transpose of the Jacobi-Trudi matrix)", true);

    if (s.outer().empty()) return log;

    // Clear empty leading columns; the affected strips are empty rows whose
    // labels fall outside the twistable range.
    SkewShape s0 = s;
    std::vector<SkewShape> column_stages;
    while (!s0.outer().empty() &&
           s0.outer().conjugate().part(1) == s0.inner().conjugate().part(1)) {
        column_stages.push_back(s0);
        SkewShape reduced = s0.remove_first_column();
        for (int t = s0.outer().length(); t >= 1 && s0.outer().part(t) == 1; --t) {
            StripLabel lab{2 - t, 1 - t};
            Emitter em;
            emit_remove_empty_strip(em, cur, lab, "first-column reduction");
            emit(std::move(em));
            cur = without_strip(cur, lab);
            add_stage("drop empty strip [" + std::to_string(lab.p) + "," +
                          std::to_string(lab.q) + "]",
                      true);
        }
        cur = horizontal_decomposition(reduced);
        s0 = reduced;
        add_stage("first column removed; shape is now " +
                      (s0.outer().empty() ? std::string("empty") : s0.to_string()),
                  true);
    }

    if (!s0.outer().empty()) {
        for (int i = s0.content_min(); i < s0.content_max(); ++i) {
            TwistOps tw = twist_transform_ops(cur, i);
            Emitter em;
            em.ops = std::move(tw.ops);
            em.notes = std::move(tw.notes);
            emit(std::move(em));
            cur = tw.twist.decomposition;
            std::string label =
                to_string(tw.twist.rule) + "(" + to_string(tw.twist.tcase) + ")";
            log.cases.push_back(label);
            add_stage("omega_" + std::to_string(i) + ": rule " + label, true);
        }
        if (s0.outer().part(1) == s0.inner().part(1)) {
            // The horizontal decomposition of a shape with an empty first
            // row carries the empty strip [c_max+1, c_max], which no twist
            // can toggle; clear it directly.
            StripLabel lab{s0.content_max() + 1, s0.content_max()};
            Emitter em;
            emit_remove_empty_strip(em, cur, lab, "empty first row");
            emit(std::move(em));
            cur = without_strip(cur, lab);
            add_stage("drop empty strip [" + std::to_string(lab.p) + "," +
                          std::to_string(lab.q) + "]",
                      true);
        }
        if (!(cur == vertical_decomposition(s0)))
            throw std::logic_error("twist chain did not reach the vertical decomposition");
    }

    // Reinstate the cleared columns on the dual side.
    for (auto it = column_stages.rbegin(); it != column_stages.rend(); ++it) {
        const SkewShape& s1 = *it;
        OutsideDecomposition target = vertical_decomposition(s1);
        int ell = s1.outer().conjugate().part(1);
        StripLabel lab{1 - ell, -ell};
        Emitter em;
        emit_insert_empty_strip(em, target, lab, "restore first column");
        emit(std::move(em));
        cur = target;
        add_stage("first column restored; shape is now " + s1.to_string(), true);
    }

    // Close with the permutation from the canonical form to the stored
    // (column) order of the vertical decomposition, i.e. the dual
    // Jacobi-Trudi matrix itself.
    OpLog closing = permute_to_canonical(log.end);
    for (auto it = closing.ops.rbegin(); it != closing.ops.rend(); ++it) {
        log.ops.push_back(it->inverse());
        log.annotations.push_back("reorder to the dual Jacobi-Trudi orientation");
    }
    cur = log.end;
    add_stage("dual Jacobi-Trudi orientation", false);
    return log;
}

bool ChainReport::ok() const {
    if (!endpoint_match) return false;
    for (const StageReport& st : stages)
        if (!st.canonical_match || !st.det_match) return false;
    return true;
}

std::string ChainReport::summary() const {
    std::ostringstream out;
    out << "chain " << (shape.outer().empty() ? std::string("(empty)") : shape.to_string())
        << ": " << total_ops << " ops, " << stages.size() << " stages, N=" << nvars << "\n";
    for (const StageReport& st : stages)
        out << "  [" << (st.canonical_match && st.det_match ? "ok" : "FAIL") << "] " << st.note
            << " (" << st.op_count << " ops)\n";
    out << "  endpoint " << (endpoint_match ? "matches" : "MISMATCH") << "\n";
    return out.str();
}

ChainReport verify_chain(const SkewShape& s, int nvars) {
    ChainReport report;
    report.shape = s;
    report.nvars = nvars;
    OpLog log = chain(s);
    report.total_ops = log.ops.size();
    SymPoly target = schur_poly(s, nvars);

    PolyMatrix current = evaluate(giambelli_matrix(log.start), nvars);
    size_t idx = 0;
    for (const ChainStage& stage : log.stages) {
        StageReport sr;
        sr.note = stage.note;
        sr.op_count = stage.op_end - idx;
        OpLog slice;
        slice.ops.assign(log.ops.begin() + idx, log.ops.begin() + stage.op_end);
        current = replay(current, slice);
        idx = stage.op_end;
        PolyMatrix expected =
            stage.canonical
                ? evaluate(canonical_form(stage.decomposition).matrix, nvars)
                : evaluate(giambelli_matrix(stage.decomposition), nvars);
        sr.canonical_match = (current == expected);
        SymPoly det = determinant(current);
        sr.det_match = (det == target) || (det == -target);
        report.stages.push_back(std::move(sr));
    }
    OpLog tail;
    tail.ops.assign(log.ops.begin() + idx, log.ops.end());
    current = replay(current, tail);
    report.endpoint_match = (current == evaluate(dual_jacobi_trudi(s), nvars));
    return report;
}

}  // namespace giambelli
