#include "giambelli/strips.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace giambelli {

SkewShape BorderStrip::to_skew_shape() const {
    int ups = static_cast<int>(std::count(steps.begin(), steps.end(), Step::Up));
    int row = ups + 1, col = 1;
    std::vector<BoxCoord> boxes = {{row, col}};
    for (Step s : steps) {
        if (s == Step::Right)
            ++col;
        else
            --row;
        boxes.push_back({row, col});
    }
    std::sort(boxes.begin(), boxes.end());
    std::map<int, std::pair<int, int>> span;
    for (BoxCoord b : boxes) {
        auto it = span.find(b.row);
        if (it == span.end())
            span[b.row] = {b.col, b.col};
        else {
            it->second.first = std::min(it->second.first, b.col);
            it->second.second = std::max(it->second.second, b.col);
        }
    }
    std::vector<int> outer, inner;
    for (auto& [r, cols] : span) {
        outer.push_back(cols.second);
        inner.push_back(cols.first - 1);
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

CuttingStrip::CuttingStrip(int content_min, std::vector<Step> steps)
    : content_min_(content_min), steps_(std::move(steps)) {}

CuttingStrip CuttingStrip::all_right(int content_min, int content_max) {
    if (content_max < content_min)
        throw std::invalid_argument("cutting strip needs content_max >= content_min");
    return CuttingStrip(content_min,
                        std::vector<Step>(content_max - content_min, Step::Right));
}

CuttingStrip CuttingStrip::all_up(int content_min, int content_max) {
    if (content_max < content_min)
        throw std::invalid_argument("cutting strip needs content_max >= content_min");
    return CuttingStrip(content_min, std::vector<Step>(content_max - content_min, Step::Up));
}

Step CuttingStrip::step_at(int c) const {
    if (c < content_min_ || c >= content_max())
        throw std::out_of_range("cutting strip step index out of range");
    return steps_[c - content_min_];
}

CuttingStrip CuttingStrip::with_step(int c, Step s) const {
    CuttingStrip out = *this;
    out.steps_.at(c - content_min_) = s;
    return out;
}

std::string CuttingStrip::directions_string() const {
    std::string out;
    for (Step s : steps_) out += step_char(s);
    return out;
}

Segment segment(const CuttingStrip& phi, int p, int q) {
    Segment out;
    out.p = p;
    out.q = q;
    if (p == q + 1) {
        out.kind = Segment::Kind::Empty;
        return out;
    }
    if (p > q + 1) {
        out.kind = Segment::Kind::Undefined;
        return out;
    }
    if (p < phi.content_min() || q > phi.content_max())
        throw std::out_of_range("segment [" + std::to_string(p) + "," + std::to_string(q) +
                                "] outside cutting strip range");
    out.kind = Segment::Kind::Strip;
    BorderStrip strip;
    strip.start_content = p;
    for (int c = p; c < q; ++c) strip.steps.push_back(phi.step_at(c));
    out.strip = std::move(strip);
    return out;
}

SkewShape strip_to_skew_shape(const Segment& seg) {
    if (seg.kind != Segment::Kind::Strip)
        throw std::invalid_argument("strip_to_skew_shape needs a Strip segment");
    return seg.strip->to_skew_shape();
}

namespace {

Step flip(Step s) { return s == Step::Right ? Step::Up : Step::Right; }

/* Chains of the successor rule: the box of content c continues to its
   right or upper neighbour according to the direction at c. Every box
   lies in exactly one chain. Chains are returned by decreasing initial
   content. */
std::vector<std::vector<BoxCoord>> chains_from_directions(const SkewShape& s,
                                                          const CuttingStrip& phi) {
    std::vector<std::vector<BoxCoord>> chains;
    for (BoxCoord b : s.boxes()) {
        int c = content(b);
        if (c > phi.content_min()) {
            BoxCoord pred = phi.step_at(c - 1) == Step::Right ? BoxCoord{b.row, b.col - 1}
                                                              : BoxCoord{b.row + 1, b.col};
            if (s.contains_box(pred.row, pred.col)) continue;
        }
        std::vector<BoxCoord> chain = {b};
        while (c < phi.content_max()) {
            BoxCoord cur = chain.back();
            BoxCoord next = phi.step_at(c) == Step::Right ? BoxCoord{cur.row, cur.col + 1}
                                                          : BoxCoord{cur.row - 1, cur.col};
            if (!s.contains_box(next.row, next.col)) break;
            chain.push_back(next);
            ++c;
        }
        chains.push_back(std::move(chain));
    }
    std::sort(chains.begin(), chains.end(),
              [](const std::vector<BoxCoord>& a, const std::vector<BoxCoord>& b) {
                  return content(a.front()) > content(b.front());
              });
    return chains;
}

std::vector<StripLabel> labels_of_chains(const std::vector<std::vector<BoxCoord>>& chains) {
    std::vector<StripLabel> labels;
    for (auto& chain : chains)
        labels.push_back({content(chain.front()), content(chain.back())});
    return labels;
}

void sort_labels(std::vector<StripLabel>& labels) {
    std::sort(labels.begin(), labels.end(),
              [](StripLabel a, StripLabel b) { return a.p > b.p; });
}

int realized_content_min(const SkewShape& s) {
    int out = content(s.boxes().front());
    for (BoxCoord b : s.boxes()) out = std::min(out, content(b));
    return out;
}

int realized_content_max(const SkewShape& s) {
    int out = content(s.boxes().front());
    for (BoxCoord b : s.boxes()) out = std::max(out, content(b));
    return out;
}

}  // namespace

OutsideDecomposition::OutsideDecomposition(SkewShape shape, std::vector<StripLabel> strips,
                                           CuttingStrip cutting)
    : shape_(std::move(shape)), strips_(std::move(strips)), cutting_(std::move(cutting)) {
    validate_outside_decomposition(*this);
}

bool OutsideDecomposition::operator==(const OutsideDecomposition& o) const {
    if (!(shape_ == o.shape_) || !(cutting_ == o.cutting_)) return false;
    std::vector<StripLabel> a = strips_, b = o.strips_;
    sort_labels(a);
    sort_labels(b);
    return a == b;
}

InitTerm OutsideDecomposition::init_term() const {
    InitTerm out;
    for (StripLabel lab : strips_) {
        out.init.push_back(lab.p);
        out.term.push_back(lab.q);
    }
    std::sort(out.init.rbegin(), out.init.rend());
    std::sort(out.term.rbegin(), out.term.rend());
    return out;
}

std::vector<std::vector<BoxCoord>> OutsideDecomposition::strip_chains() const {
    return chains_from_directions(shape_, cutting_);
}

std::string OutsideDecomposition::bracket_list() const {
    std::vector<StripLabel> labels = strips_;
    sort_labels(labels);
    std::string out = "{";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += "[" + std::to_string(labels[i].p) + "," + std::to_string(labels[i].q) + "]";
    }
    return out + "}";
}

OutsideDecomposition horizontal_decomposition(const SkewShape& s) {
    if (s.outer().empty())
        return OutsideDecomposition(s, {}, CuttingStrip(0, {}));
    std::vector<StripLabel> labels;
    for (int i = 1; i <= s.outer().length(); ++i)
        labels.push_back({s.inner().part(i) - i + 1, s.outer().part(i) - i});
    return OutsideDecomposition(s, std::move(labels),
                                CuttingStrip::all_right(s.content_min(), s.content_max()));
}

OutsideDecomposition vertical_decomposition(const SkewShape& s) {
    if (s.outer().empty())
        return OutsideDecomposition(s, {}, CuttingStrip(0, {}));
    Partition oc = s.outer().conjugate();
    Partition ic = s.inner().conjugate();
    std::vector<StripLabel> labels;
    for (int i = 1; i <= s.outer().part(1); ++i)
        labels.push_back({-oc.part(i) + i, -ic.part(i) + i - 1});
    return OutsideDecomposition(s, std::move(labels),
                                CuttingStrip::all_up(s.content_min(), s.content_max()));
}

OutsideDecomposition decomposition_from_cutting_strip(const SkewShape& s,
                                                      const std::vector<Step>& steps) {
    if (s.empty() || !s.edgewise_connected())
        throw std::invalid_argument("cutting-strip bijection needs a nonempty connected shape");
    int lo = realized_content_min(s), hi = realized_content_max(s);
    if (static_cast<int>(steps.size()) != hi - lo)
        throw std::invalid_argument("cutting strip has wrong box count: expected " +
                                    std::to_string(hi - lo + 1) + " boxes");
    // Embed into the full defined range; unrealized boundary contents keep
    // the horizontal convention.
    std::vector<Step> full(s.content_max() - s.content_min(), Step::Right);
    for (int c = lo; c < hi; ++c) full[c - s.content_min()] = steps[c - lo];
    CuttingStrip phi(s.content_min(), std::move(full));
    std::vector<StripLabel> labels = labels_of_chains(chains_from_directions(s, phi));
    return OutsideDecomposition(s, std::move(labels), phi);
}

CuttingStrip cutting_strip(const OutsideDecomposition& pi) {
    const CuttingStrip& stored = pi.cutting();
    for (auto& chain : pi.strip_chains()) {
        for (size_t k = 0; k + 1 < chain.size(); ++k) {
            Step step = chain[k + 1].row == chain[k].row ? Step::Right : Step::Up;
            if (stored.step_at(content(chain[k])) != step)
                throw std::logic_error("stored cutting strip disagrees with strip geometry");
        }
    }
    return stored;
}

std::vector<OutsideDecomposition> enumerate_decompositions(const SkewShape& s) {
    if (s.empty() || !s.edgewise_connected())
        throw std::invalid_argument("enumeration needs a nonempty connected shape");
    int d = realized_content_max(s) - realized_content_min(s) + 1;
    std::vector<OutsideDecomposition> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << (d - 1)); ++mask) {
        std::vector<Step> steps(d - 1, Step::Right);
        for (int k = 0; k < d - 1; ++k)
            if (mask & (uint64_t{1} << k)) steps[k] = Step::Up;
        out.push_back(decomposition_from_cutting_strip(s, steps));
    }
    return out;
}

std::string to_string(TwistRule rule) {
    switch (rule) {
        case TwistRule::APrime: return "a'";
        case TwistRule::BPrime: return "b'";
        case TwistRule::CPrime: return "c'";
        case TwistRule::DPrime: return "d'";
    }
    return "?";
}

std::string to_string(TheoremCase c) {
    switch (c) {
        case TheoremCase::A: return "a";
        case TheoremCase::B: return "b";
        case TheoremCase::C: return "c";
        case TheoremCase::D: return "d";
    }
    return "?";
}

TwistResult twist(const OutsideDecomposition& pi, int i) {
    const SkewShape& s = pi.shape();
    const CuttingStrip& phi = pi.cutting();
    if (i < phi.content_min() || i >= phi.content_max())
        throw std::invalid_argument("twist content " + std::to_string(i) + " out of range");

    bool box_i = !s.diagonal(i).empty();
    bool box_i1 = !s.diagonal(i + 1).empty();
    bool box_below = false;
    for (int c = phi.content_min(); c < i && !box_below; ++c)
        box_below = !s.diagonal(c).empty();

    TwistRule rule;
    if (box_i && box_i1)
        rule = TwistRule::APrime;
    else if (box_i)
        rule = TwistRule::BPrime;
    else if (!box_i1 && box_below)
        rule = TwistRule::CPrime;
    else if (box_i1 && box_below)
        rule = TwistRule::DPrime;
    else
        throw std::domain_error("twist at content " + std::to_string(i) +
                                " is undefined; remove empty leading columns first");

    InitTerm it = pi.init_term();
    bool has_term_i = std::find(it.term.begin(), it.term.end(), i) != it.term.end();
    bool has_init_i1 = std::find(it.init.begin(), it.init.end(), i + 1) != it.init.end();
    TheoremCase tcase = has_term_i ? (has_init_i1 ? TheoremCase::B : TheoremCase::C)
                                   : (has_init_i1 ? TheoremCase::D : TheoremCase::A);

    CuttingStrip phi2 = phi.with_step(i, flip(phi.step_at(i)));
    std::vector<StripLabel> labels = labels_of_chains(chains_from_directions(s, phi2));
    for (StripLabel lab : pi.strips())
        if (lab.is_empty()) labels.push_back(lab);
    if (rule == TwistRule::CPrime) {
        StripLabel toggle{i + 1, i};
        auto at = std::find(labels.begin(), labels.end(), toggle);
        if (at != labels.end())
            labels.erase(at);
        else
            labels.push_back(toggle);
    }
    sort_labels(labels);
    return {OutsideDecomposition(s, std::move(labels), phi2), rule, tcase};
}

void validate_outside_decomposition(const OutsideDecomposition& pi) {
    const SkewShape& s = pi.shape();
    const CuttingStrip& phi = pi.cutting();
    if (!s.outer().empty()) {
        if (phi.content_min() != s.content_min() || phi.content_max() != s.content_max())
            throw std::invalid_argument("cutting strip range does not match the shape");
    }

    std::vector<StripLabel> nonempty;
    for (StripLabel lab : pi.strips()) {
        if (lab.p > lab.q + 1)
            throw std::invalid_argument("undefined strip label in decomposition");
        if (!lab.is_empty()) nonempty.push_back(lab);
    }
    std::vector<std::vector<BoxCoord>> chains = chains_from_directions(s, phi);
    std::vector<StripLabel> derived = labels_of_chains(chains);
    sort_labels(derived);
    sort_labels(nonempty);
    if (derived != nonempty)
        throw std::invalid_argument("strip labels do not match the cutting-strip geometry");

    // Perimeter conditions and disjoint cover.
    size_t covered = 0;
    for (auto& chain : chains) {
        covered += chain.size();
        BoxCoord a = chain.front(), z = chain.back();
        bool starts_ok = !s.contains_box(a.row, a.col - 1) || !s.contains_box(a.row + 1, a.col);
        bool ends_ok = !s.contains_box(z.row, z.col + 1) || !s.contains_box(z.row - 1, z.col);
        if (!starts_ok || !ends_ok)
            throw std::invalid_argument("strip violates the perimeter conditions");
    }
    if (static_cast<int>(covered) != s.box_count())
        throw std::logic_error("strips do not cover the shape");

    InitTerm it = pi.init_term();
    for (size_t k = 0; k + 1 < it.init.size(); ++k)
        if (it.init[k] == it.init[k + 1])
            throw std::invalid_argument("duplicate initial content in decomposition");
    for (size_t k = 0; k + 1 < it.term.size(); ++k)
        if (it.term[k] == it.term[k + 1])
            throw std::invalid_argument("duplicate terminal content in decomposition");
}

std::string decomposition_to_json(const OutsideDecomposition& pi) {
    nlohmann::json j;
    j["strips"] = nlohmann::json::array();
    for (StripLabel lab : pi.strips()) j["strips"].push_back({lab.p, lab.q});
    j["directions"] = pi.cutting().directions_string();
    return j.dump();
}

OutsideDecomposition decomposition_from_json(const SkewShape& s, const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::vector<StripLabel> labels;
    for (auto& pair : j.at("strips"))
        labels.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    std::string dirs = j.at("directions").get<std::string>();
    std::vector<Step> steps;
    for (char ch : dirs) {
        if (ch == 'R')
            steps.push_back(Step::Right);
        else if (ch == 'U')
            steps.push_back(Step::Up);
        else
            throw std::invalid_argument("directions string must use R and U");
    }
    return OutsideDecomposition(s, std::move(labels), CuttingStrip(s.content_min(), steps));
}

}  // namespace giambelli
