#pragma once

/* Partitions, skew diagrams, contents, diagonals and connectivity. */

#include <string>
#include <vector>

namespace giambelli {

/* Integer partition with weakly decreasing positive parts; the empty
   partition is allowed. part(i) is 1-based and returns 0 past the tail,
   so skew formulas need no explicit padding. */
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;
    int sum() const;
    bool empty() const { return parts_.empty(); }
    Partition conjugate() const;
    bool contains(const Partition& inner) const;
    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    std::vector<int> parts_;
};

/* Box in matrix convention: row 1 at top, column 1 at left. */
struct BoxCoord {
    int row = 0;
    int col = 0;
    bool operator==(const BoxCoord&) const = default;
    bool operator<(const BoxCoord& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

inline int content(BoxCoord b) { return b.col - b.row; }

/* Classification of a diagonal by whether the strip through its highest
   box can continue upward and the strip through its lowest box can
   continue rightward. The numbering follows the twist-case
   correspondence: Type1 <-> case (a), Type2 <-> (b), Type3 <-> (c),
   Type4 <-> (d). */
enum class DiagonalType { Type1 = 1, Type2 = 2, Type3 = 3, Type4 = 4 };

class SkewShape;

/* Maximal edgewise-connected region of a skew shape, kept in the
   coordinates of the parent shape. */
struct ShapeFragment {
    std::vector<BoxCoord> boxes;  // row-major
    int content_min = 0;          // realized bounds
    int content_max = 0;
    SkewShape normalized() const;
};

/* Skew diagram outer/inner with inner contained in outer. */
class SkewShape {
  public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);
    static SkewShape parse(const std::string& text);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int row_count() const { return outer_.length(); }
    int row_begin(int r) const { return inner_.part(r) + 1; }  // first column
    int row_end(int r) const { return outer_.part(r); }        // last column
    bool contains_box(int row, int col) const;
    std::vector<BoxCoord> boxes() const;
    int box_count() const;
    bool empty() const { return box_count() == 0; }

    /* Defined content bounds -outer'_1+1 .. outer_1-1; every box lies in
       this range but the extremes need not be realized. */
    int content_min() const;
    int content_max() const;
    /* Number of nonempty diagonals. */
    int diagonal_count() const;
    /* Boxes of content c ordered from the lower-left box upward. */
    std::vector<BoxCoord> diagonal(int c) const;
    DiagonalType diagonal_type(int c) const;

    bool edgewise_connected() const;
    std::vector<ShapeFragment> components() const;  // decreasing min content

    SkewShape conjugate() const;
    SkewShape remove_first_column() const;
    /* Translate so that row 1 and column 1 are occupied; empty rows and
       columns on the border are dropped. */
    SkewShape normalized() const;

    std::string to_string() const;  // "6,5,3,1/4,4,3"
    std::string ascii() const;

    bool operator==(const SkewShape&) const = default;
    bool operator<(const SkewShape& o) const;

  private:
    Partition outer_;
    Partition inner_;
};

/* Lower-left corner box of J glued to the right of (resp. above) the
   upper-right corner box of I; the result is an anchored skew shape. */
SkewShape glue_right(const SkewShape& I, const SkewShape& J);
SkewShape glue_up(const SkewShape& I, const SkewShape& J);

}  // namespace giambelli
