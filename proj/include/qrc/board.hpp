#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qrc/partition.hpp"

namespace qrc {

/// Ferrers board: partition `shape` sitting top-left inside an n×m rectangle
/// (rows 1..n top-down, columns 1..m left-right), with n <= m.
class Board {
public:
    Board(int m, int n, Partition shape);

    int m() const { return m_; }
    int n() const { return n_; }
    const Partition& shape() const { return shape_; }

    bool cell_in_shape(int row, int col) const { return shape_.contains_cell(row, col); }

private:
    int m_;
    int n_;
    Partition shape_;
};

/// Cell (row, col), 1-based.
using Cell = std::pair<int, int>;

/// Non-attacking rooks: no two share a row or a column. Stored sorted by row.
class RookPlacement {
public:
    RookPlacement() = default;
    explicit RookPlacement(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }

    /// Column of the rook in `row`, or 0 if that row is empty.
    int column_in_row(int row) const;
    /// Row of the rook in `col`, or 0 if that column is empty.
    int row_in_column(int col) const;

    int count_inside(const Partition& shape) const;

    bool operator==(const RookPlacement& o) const { return cells_ == o.cells_; }

private:
    std::vector<Cell> cells_;
};

/// Every placement of exactly k rooks inside the cells of b.shape(), emitted
/// row-by-row in lexicographic column order. Throws if k < 0 or
/// k > length(shape).
void for_each_placement_on_shape(const Board& b, int k,
                                 const std::function<void(const RookPlacement&)>& fn);
std::vector<RookPlacement> enumerate_placements_on_shape(const Board& b, int k);

/// Every placement of n rooks on the full n×m board having exactly j rooks
/// inside the shape, same deterministic order. Throws if j < 0 or j > n.
void for_each_full_placement(const Board& b, int j,
                             const std::function<void(const RookPlacement&)>& fn);
std::vector<RookPlacement> enumerate_full_placements(const Board& b, int j);

/// Every placement of n rooks on the full board, all hit counts.
void for_each_full_placement(const Board& b,
                             const std::function<void(const RookPlacement&)>& fn);

/// Cells of λ neither occupied nor directly west/north of a rook.
/// Requires every rook inside λ.
int inv(const RookPlacement& p, const Partition& shape);

/// Statistic for the rectangular q-hit numbers: unoccupied cells with no rook
/// above in their column whose row rook is (inside λ and to the right) when
/// the cell is in λ, or (inside λ or to the right) when it is not.
/// Requires a full placement (n rooks).
int stat(const RookPlacement& p, const Board& b);

/// Dworkin's statistic for the Garsia-Remmel q-hit numbers: unoccupied cells
/// with no rook below in their column whose row rook is (outside λ or to the
/// left) when the cell is in λ, or (outside λ and to the left) when it is not.
int dstat(const RookPlacement& p, const Board& b);

/// Cells crossed both vertically and horizontally by the cancellation rays of
/// stat. Square boards only.
int cross(const RookPlacement& p, const Board& b);

}  // namespace qrc
