#pragma once

#include <string>
#include <vector>

namespace qrc {

/// Integer partition: weakly decreasing positive parts; empty = ∅.
/// Drawn with row 1 on top, row i covering columns 1..parts[i-1].
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Staircase (j, j-1, ..., 1); delta(0) = ∅.
    static Partition staircase(int j);
    /// Rectangle with `rows` rows of `width`; empty if either is 0.
    static Partition rectangle(int width, int rows);

    /// Parses "6,3,3,1"; "" and "0" give ∅.
    static Partition parse(const std::string& s);
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    /// Part at 1-based row i, 0 beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    int first_part() const { return part(1); }

    /// Height of column j (1-based), i.e. conjugate part.
    int conjugate_part(int j) const;
    Partition conjugate() const;

    bool contains_cell(int row, int col) const {
        return row >= 1 && col >= 1 && col <= part(row);
    }

    /// Row indices i with (i, parts[i]) an outer corner (parts[i] > parts[i+1]).
    std::vector<int> corner_rows() const;

    /// λ \ e for the corner in row i: that row loses one cell.
    Partition delete_corner(int corner_row) const;
    /// λ / e for the corner in row i: strike row i and column parts[i].
    Partition contract_corner(int corner_row) const;

    Partition remove_column(int j) const;
    Partition remove_row(int i) const;
    /// λ/(i,j): strike row i and column j (of the original diagram).
    Partition remove_row_and_column(int i, int j) const;

    /// Complement inside the m×m square, read bottom-up.
    Partition complement(int m) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

/// All partitions fitting in `rows` × `cols` (at most `rows` parts, each
/// <= cols), in a fixed deterministic order starting from ∅.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// All partitions of n (for symmetric-function indexing), deterministic order.
std::vector<Partition> partitions_of(int n);

}  // namespace qrc
