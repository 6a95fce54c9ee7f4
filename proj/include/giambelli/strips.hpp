#pragma once

/* Border strips, outside decompositions, the cutting-strip bijection and
   twist transformations. Strips are manipulated as content intervals of a
   cutting strip; geometry is recomputed on demand. */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "giambelli/shapes.hpp"

namespace giambelli {

enum class Step : uint8_t { Right, Up };

inline char step_char(Step s) { return s == Step::Right ? 'R' : 'U'; }

/* Border strip as a start content plus up/right steps; the box of index k
   (0-based) has content start_content + k. */
struct BorderStrip {
    int start_content = 0;
    std::vector<Step> steps;

    int end_content() const { return start_content + static_cast<int>(steps.size()); }
    int size() const { return static_cast<int>(steps.size()) + 1; }
    SkewShape to_skew_shape() const;  // anchored at row/column 1
    bool operator==(const BorderStrip&) const = default;
};

/* Direction assignment over the full defined content range of a reference
   shape: step_at(c) is the direction between contents c and c+1, for
   content_min <= c < content_max. A shape with a single defined content
   has no steps. */
class CuttingStrip {
  public:
    CuttingStrip() = default;
    CuttingStrip(int content_min, std::vector<Step> steps);
    static CuttingStrip all_right(int content_min, int content_max);
    static CuttingStrip all_up(int content_min, int content_max);

    int content_min() const { return content_min_; }
    int content_max() const { return content_min_ + static_cast<int>(steps_.size()); }
    Step step_at(int c) const;
    CuttingStrip with_step(int c, Step s) const;
    const std::vector<Step>& steps() const { return steps_; }
    std::string directions_string() const;  // "RRUR..."

    bool operator==(const CuttingStrip&) const = default;

  private:
    int content_min_ = 0;
    std::vector<Step> steps_;
};

/* Segment phi[p,q] of a cutting strip: a strip for p <= q, the empty strip
   for p == q+1, undefined for p > q+1. */
struct Segment {
    enum class Kind { Strip, Empty, Undefined };
    Kind kind = Kind::Undefined;
    int p = 0;
    int q = 0;
    std::optional<BorderStrip> strip;  // Kind::Strip only
};

Segment segment(const CuttingStrip& phi, int p, int q);
SkewShape strip_to_skew_shape(const Segment& seg);

/* Content interval [p,q] of one strip of a decomposition; empty strips
   have p == q+1. */
struct StripLabel {
    int p = 0;
    int q = 0;
    bool is_empty() const { return p == q + 1; }
    bool operator==(const StripLabel&) const = default;
};

struct InitTerm {
    std::vector<int> init;  // initial contents, one per strip
    std::vector<int> term;  // terminal contents
};

/* Outside decomposition: strip labels (including empty strips) plus the
   direction assignment that realizes them. */
class OutsideDecomposition {
  public:
    OutsideDecomposition() = default;
    OutsideDecomposition(SkewShape shape, std::vector<StripLabel> strips, CuttingStrip cutting);

    const SkewShape& shape() const { return shape_; }
    const std::vector<StripLabel>& strips() const { return strips_; }
    const CuttingStrip& cutting() const { return cutting_; }
    int strip_count() const { return static_cast<int>(strips_.size()); }

    InitTerm init_term() const;
    /* Geometric realization of the nonempty strips, each a chain of boxes
       from initial to terminal content. */
    std::vector<std::vector<BoxCoord>> strip_chains() const;
    /* Bracket list in decreasing order of initial content: "{[4,5],[3,3],...}". */
    std::string bracket_list() const;

    /* Equality is insensitive to the stored strip order. */
    bool operator==(const OutsideDecomposition& o) const;

  private:
    SkewShape shape_;
    std::vector<StripLabel> strips_;
    CuttingStrip cutting_;
};

OutsideDecomposition horizontal_decomposition(const SkewShape& s);
OutsideDecomposition vertical_decomposition(const SkewShape& s);

/* The Theorem 2.1 bijection for edgewise connected shapes: `steps` covers
   the realized contents of s (d-1 steps for d diagonals). */
OutsideDecomposition decomposition_from_cutting_strip(const SkewShape& s,
                                                      const std::vector<Step>& steps);

/* Recomputes the cutting strip from the strip geometry; contents spanned
   by no strip keep the stored direction. Also validates consistency. */
CuttingStrip cutting_strip(const OutsideDecomposition& pi);

/* All 2^(d-1) outside decompositions of a connected nonempty shape. */
std::vector<OutsideDecomposition> enumerate_decompositions(const SkewShape& s);

/* Which rule of the general twist definition fired. */
enum class TwistRule { APrime, BPrime, CPrime, DPrime };
/* Which case of the Init/Term theorem the twist realizes, decided by
   membership of i in Term and i+1 in Init:
     A: both absent  -> both gained (strip count +1)
     B: both present -> both removed (strip count -1)
     C: i in Term only  -> unchanged
     D: i+1 in Init only -> unchanged */
enum class TheoremCase { A, B, C, D };

std::string to_string(TwistRule rule);
std::string to_string(TheoremCase c);

struct TwistResult {
    OutsideDecomposition decomposition;
    TwistRule rule;
    TheoremCase tcase;
};

/* Twist at content i (content_min <= i <= content_max-1): flips the
   cutting-strip direction at i and re-segments. On shapes whose first
   column is empty the low boundary contents are outside the rule domain
   and the call throws; remove_first_column first. */
TwistResult twist(const OutsideDecomposition& pi, int i);

/* Validation used by constructors and tests: strips are disjoint border
   strips covering the shape, starting on the left/bottom perimeter and
   ending on the right/top perimeter, and each equals the cutting-strip
   segment of its label. */
void validate_outside_decomposition(const OutsideDecomposition& pi);

std::string decomposition_to_json(const OutsideDecomposition& pi);
OutsideDecomposition decomposition_from_json(const SkewShape& s, const std::string& json_text);

}  // namespace giambelli
