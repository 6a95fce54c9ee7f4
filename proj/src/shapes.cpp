#include "giambelli/shapes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace giambelli {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t a = token.find_first_not_of(" \t");
        if (a == std::string::npos) {
            if (parts.empty() && in.eof()) break;
            throw std::invalid_argument("empty token in partition '" + text + "'");
        }
        size_t b = token.find_last_not_of(" \t");
        token = token.substr(a, b - a + 1);
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("non-numeric part '" + token + "'");
        }
        if (pos != token.size())
            throw std::invalid_argument("non-numeric part '" + token + "'");
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

int Partition::sum() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(parts_[0]);
        for (int j = 1; j <= parts_[0]; ++j)
            conj[j - 1] = static_cast<int>(std::count_if(
                parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
    }
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("inner partition " + inner_.to_string() +
                                    " not contained in outer " + outer_.to_string());
}

SkewShape SkewShape::parse(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(Partition::parse(text), Partition());
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
}

bool SkewShape::contains_box(int row, int col) const {
    return row >= 1 && row <= row_count() && col >= row_begin(row) && col <= row_end(row);
}

std::vector<BoxCoord> SkewShape::boxes() const {
    std::vector<BoxCoord> out;
    for (int r = 1; r <= row_count(); ++r)
        for (int c = row_begin(r); c <= row_end(r); ++c) out.push_back({r, c});
    return out;
}

int SkewShape::box_count() const { return outer_.sum() - inner_.sum(); }

int SkewShape::content_min() const {
    if (outer_.empty()) return 0;
    return -outer_.conjugate().part(1) + 1;
}

int SkewShape::content_max() const {
    if (outer_.empty()) return 0;
    return outer_.part(1) - 1;
}

int SkewShape::diagonal_count() const {
    int count = 0;
    for (int c = content_min(); c <= content_max() && !outer_.empty(); ++c)
        if (!diagonal(c).empty()) ++count;
    return count;
}

std::vector<BoxCoord> SkewShape::diagonal(int c) const {
    std::vector<BoxCoord> out;
    for (int r = row_count(); r >= 1; --r) {
        int col = r + c;
        if (contains_box(r, col)) out.push_back({r, col});
    }
    return out;
}

DiagonalType SkewShape::diagonal_type(int c) const {
    std::vector<BoxCoord> diag = diagonal(c);
    if (diag.empty()) throw std::invalid_argument("empty diagonal");
    BoxCoord lowest = diag.front();
    BoxCoord highest = diag.back();
    bool up_open = contains_box(highest.row - 1, highest.col);
    bool right_open = contains_box(lowest.row, lowest.col + 1);
    if (up_open && !right_open) return DiagonalType::Type1;
    if (!up_open && right_open) return DiagonalType::Type2;
    if (!up_open && !right_open) return DiagonalType::Type3;
    return DiagonalType::Type4;
}

namespace {

std::vector<std::vector<BoxCoord>> connected_regions(const SkewShape& s) {
    std::vector<BoxCoord> all = s.boxes();
    std::set<BoxCoord> todo(all.begin(), all.end());
    std::vector<std::vector<BoxCoord>> regions;
    while (!todo.empty()) {
        std::vector<BoxCoord> stack = {*todo.begin()};
        todo.erase(todo.begin());
        std::vector<BoxCoord> region;
        while (!stack.empty()) {
            BoxCoord b = stack.back();
            stack.pop_back();
            region.push_back(b);
            const BoxCoord nbrs[4] = {{b.row - 1, b.col}, {b.row + 1, b.col},
                                      {b.row, b.col - 1}, {b.row, b.col + 1}};
            for (BoxCoord n : nbrs) {
                auto it = todo.find(n);
                if (it != todo.end()) {
                    todo.erase(it);
                    stack.push_back(n);
                }
            }
        }
        std::sort(region.begin(), region.end());
        regions.push_back(std::move(region));
    }
    return regions;
}

SkewShape shape_from_boxes(const std::vector<BoxCoord>& boxes) {
    if (boxes.empty()) return SkewShape();
    int row_lo = boxes[0].row, row_hi = boxes[0].row, col_lo = boxes[0].col;
    for (BoxCoord b : boxes) {
        row_lo = std::min(row_lo, b.row);
        row_hi = std::max(row_hi, b.row);
        col_lo = std::min(col_lo, b.col);
    }
    std::map<int, std::pair<int, int>> span;  // row -> [first,last] column
    for (BoxCoord b : boxes) {
        auto it = span.find(b.row);
        if (it == span.end())
            span[b.row] = {b.col, b.col};
        else {
            it->second.first = std::min(it->second.first, b.col);
            it->second.second = std::max(it->second.second, b.col);
        }
    }
    // Empty interior rows (possible for disconnected shapes) are encoded
    // bottom-up as outer = inner = the outer part of the row below.
    std::vector<int> outer(row_hi - row_lo + 1), inner(row_hi - row_lo + 1);
    for (int r = row_hi; r >= row_lo; --r) {
        size_t idx = r - row_lo;
        auto it = span.find(r);
        if (it != span.end()) {
            outer[idx] = it->second.second - col_lo + 1;
            inner[idx] = it->second.first - col_lo;
        } else {
            if (r == row_hi) throw std::logic_error("bottom row cannot be empty");
            outer[idx] = inner[idx] = outer[idx + 1];
        }
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

}  // namespace

SkewShape ShapeFragment::normalized() const { return shape_from_boxes(boxes); }

bool SkewShape::edgewise_connected() const {
    return connected_regions(*this).size() <= 1;
}

std::vector<ShapeFragment> SkewShape::components() const {
    std::vector<ShapeFragment> out;
    for (auto& region : connected_regions(*this)) {
        ShapeFragment frag;
        frag.boxes = region;
        frag.content_min = content(region.front());
        frag.content_max = frag.content_min;
        for (BoxCoord b : region) {
            frag.content_min = std::min(frag.content_min, content(b));
            frag.content_max = std::max(frag.content_max, content(b));
        }
        out.push_back(std::move(frag));
    }
    std::sort(out.begin(), out.end(), [](const ShapeFragment& a, const ShapeFragment& b) {
        return a.content_min > b.content_min;
    });
    return out;
}

SkewShape SkewShape::conjugate() const {
    return SkewShape(outer_.conjugate(), inner_.conjugate());
}

SkewShape SkewShape::remove_first_column() const {
    if (outer_.conjugate().part(1) != inner_.conjugate().part(1))
        throw std::invalid_argument("first column of " + to_string() + " is occupied");
    std::vector<int> outer, inner;
    for (int i = 1; i <= outer_.length(); ++i)
        if (outer_.part(i) > 1) outer.push_back(outer_.part(i) - 1);
    for (int i = 1; i <= inner_.length(); ++i)
        if (inner_.part(i) > 1) inner.push_back(inner_.part(i) - 1);
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

SkewShape SkewShape::normalized() const {
    return shape_from_boxes(boxes());
}

std::string SkewShape::to_string() const {
    if (inner_.empty()) return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
}

std::string SkewShape::ascii() const {
    std::string out;
    for (int r = 1; r <= row_count(); ++r) {
        for (int c = 1; c <= row_end(r); ++c)
            out += (c < row_begin(r)) ? "·" : "#";
        out += '\n';
    }
    return out;
}

bool SkewShape::operator<(const SkewShape& o) const {
    if (!(outer_ == o.outer_)) return outer_ < o.outer_;
    return inner_ < o.inner_;
}

namespace {

/* Row spans of a shape listed top to bottom as [first,last] columns. */
std::vector<std::pair<int, int>> row_spans(const SkewShape& s) {
    std::vector<std::pair<int, int>> spans;
    for (int r = 1; r <= s.row_count(); ++r) {
        if (s.row_begin(r) > s.row_end(r))
            throw std::invalid_argument("glue operand has an empty row: " + s.to_string());
        spans.push_back({s.row_begin(r), s.row_end(r)});
    }
    if (spans.empty()) throw std::invalid_argument("glue operand is empty");
    return spans;
}

SkewShape shape_from_spans(const std::vector<std::pair<int, int>>& spans) {
    std::vector<BoxCoord> boxes;
    for (size_t r = 0; r < spans.size(); ++r)
        for (int c = spans[r].first; c <= spans[r].second; ++c)
            boxes.push_back({static_cast<int>(r + 1), c});
    return shape_from_boxes(boxes);
}

}  // namespace

SkewShape glue_right(const SkewShape& I, const SkewShape& J) {
    auto si = row_spans(I);
    auto sj = row_spans(J);
    // J's lower-left box lands one column right of I's upper-right box,
    // in the same row.
    int shift = si[0].second + 1 - sj.back().first;
    std::vector<std::pair<int, int>> spans;
    for (size_t r = 0; r + 1 < sj.size(); ++r)
        spans.push_back({sj[r].first + shift, sj[r].second + shift});
    spans.push_back({si[0].first, sj.back().second + shift});
    for (size_t r = 1; r < si.size(); ++r) spans.push_back(si[r]);
    return shape_from_spans(spans);
}

SkewShape glue_up(const SkewShape& I, const SkewShape& J) {
    auto si = row_spans(I);
    auto sj = row_spans(J);
    // J's lower-left box lands directly above I's upper-right box.
    int shift = si[0].second - sj.back().first;
    std::vector<std::pair<int, int>> spans;
    for (auto& span : sj) spans.push_back({span.first + shift, span.second + shift});
    for (auto& span : si) spans.push_back(span);
    return shape_from_spans(spans);
}

}  // namespace giambelli
