#include "qrc/board.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qrc {

Board::Board(int m, int n, Partition shape) : m_(m), n_(n), shape_(std::move(shape)) {
    if (n_ < 0 || m_ < n_) throw std::domain_error("Board: need 0 <= n <= m");
    if (shape_.length() > n_) throw std::domain_error("Board: shape has too many rows");
    if (shape_.first_part() > m_) throw std::domain_error("Board: shape is too wide");
}

RookPlacement::RookPlacement(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    for (size_t a = 0; a < cells_.size(); ++a) {
        if (cells_[a].first < 1 || cells_[a].second < 1)
            throw std::domain_error("RookPlacement: cells are 1-based");
        for (size_t b = a + 1; b < cells_.size(); ++b)
            if (cells_[a].first == cells_[b].first || cells_[a].second == cells_[b].second)
                throw std::domain_error("RookPlacement: rooks attack each other");
    }
}

int RookPlacement::column_in_row(int row) const {
    for (const auto& [r, c] : cells_)
        if (r == row) return c;
    return 0;
}

int RookPlacement::row_in_column(int col) const {
    for (const auto& [r, c] : cells_)
        if (c == col) return r;
    return 0;
}

int RookPlacement::count_inside(const Partition& shape) const {
    int k = 0;
    for (const auto& [r, c] : cells_)
        if (shape.contains_cell(r, c)) ++k;
    return k;
}

namespace {

struct ShapeEnum {
    const Partition* shape;
    int k;
    std::vector<bool> col_used;
    std::vector<Cell> acc;
    const std::function<void(const RookPlacement&)>* fn;

    // Rows top to bottom; within a row, columns left to right before skipping
    // the row, which makes the emitted cell lists lexicographic.
    void rec(int row) {
        const int remaining = k - static_cast<int>(acc.size());
        if (remaining == 0) {
            (*fn)(RookPlacement(acc));
            return;
        }
        if (shape->length() - row + 1 < remaining) return;
        for (int col = 1; col <= shape->part(row); ++col) {
            if (col_used[col]) continue;
            col_used[col] = true;
            acc.emplace_back(row, col);
            rec(row + 1);
            acc.pop_back();
            col_used[col] = false;
        }
        rec(row + 1);
    }
};

}  // namespace

void for_each_placement_on_shape(const Board& b, int k,
                                 const std::function<void(const RookPlacement&)>& fn) {
    if (k < 0 || k > b.shape().length())
        throw std::domain_error("for_each_placement_on_shape: k out of range");
    ShapeEnum e{&b.shape(), k, std::vector<bool>(b.m() + 1, false), {}, &fn};
    e.rec(1);
}

std::vector<RookPlacement> enumerate_placements_on_shape(const Board& b, int k) {
    std::vector<RookPlacement> out;
    for_each_placement_on_shape(b, k, [&out](const RookPlacement& p) { out.push_back(p); });
    return out;
}

namespace {

struct FullEnum {
    const Board* b;
    int j;  // required hit count, or -1 for all
    std::vector<bool> col_used;
    std::vector<Cell> acc;
    int hits = 0;
    const std::function<void(const RookPlacement&)>* fn;

    void rec(int row) {
        if (row > b->n()) {
            if (j < 0 || hits == j) (*fn)(RookPlacement(acc));
            return;
        }
        for (int col = 1; col <= b->m(); ++col) {
            if (col_used[col]) continue;
            const bool in_shape = b->shape().contains_cell(row, col);
            col_used[col] = true;
            acc.emplace_back(row, col);
            hits += in_shape ? 1 : 0;
            if (j < 0 || hits <= j) rec(row + 1);
            hits -= in_shape ? 1 : 0;
            acc.pop_back();
            col_used[col] = false;
        }
    }
};

}  // namespace

void for_each_full_placement(const Board& b, int j,
                             const std::function<void(const RookPlacement&)>& fn) {
    if (j < 0 || j > b.n()) throw std::domain_error("for_each_full_placement: j out of range");
    FullEnum e{&b, j, std::vector<bool>(b.m() + 1, false), {}, 0, &fn};
    e.rec(1);
}

void for_each_full_placement(const Board& b,
                             const std::function<void(const RookPlacement&)>& fn) {
    FullEnum e{&b, -1, std::vector<bool>(b.m() + 1, false), {}, 0, &fn};
    e.rec(1);
}

std::vector<RookPlacement> enumerate_full_placements(const Board& b, int j) {
    std::vector<RookPlacement> out;
    for_each_full_placement(b, j, [&out](const RookPlacement& p) { out.push_back(p); });
    return out;
}

int inv(const RookPlacement& p, const Partition& shape) {
    for (const auto& [r, c] : p.cells())
        if (!shape.contains_cell(r, c)) throw std::domain_error("inv: rook outside the shape");
    int count = 0;
    for (int i = 1; i <= shape.length(); ++i) {
        const int row_rook = p.column_in_row(i);
        for (int j = 1; j <= shape.part(i); ++j) {
            if (row_rook == j) continue;   // occupied
            if (row_rook > j) continue;    // directly west of its row rook
            const int col_rook = p.row_in_column(j);
            if (col_rook > i) continue;    // directly north of a rook
            ++count;
        }
    }
    return count;
}

namespace {

void require_full(const RookPlacement& p, const Board& b, const char* who) {
    if (p.size() != b.n()) throw std::domain_error(std::string(who) + ": placement is not full");
    for (const auto& [r, c] : p.cells())
        if (r < 1 || r > b.n() || c < 1 || c > b.m())
            throw std::domain_error(std::string(who) + ": rook outside the board");
    for (int row = 1; row <= b.n(); ++row)
        if (p.column_in_row(row) == 0)
            throw std::domain_error(std::string(who) + ": a row has no rook");
}

}  // namespace

int stat(const RookPlacement& p, const Board& b) {
    require_full(p, b, "stat");
    const Partition& shape = b.shape();
    int count = 0;
    for (int i = 1; i <= b.n(); ++i) {
        const int jr = p.column_in_row(i);
        const bool rook_in_shape = shape.contains_cell(i, jr);
        for (int j = 1; j <= b.m(); ++j) {
            if (jr == j) continue;  // (i) occupied
            const int rr = p.row_in_column(j);
            if (rr != 0 && rr < i) continue;  // (ii) rook above
            if (shape.contains_cell(i, j)) {
                if (rook_in_shape && jr > j) ++count;  // (iii)
            } else {
                if (rook_in_shape || jr > j) ++count;  // (iv)
            }
        }
    }
    return count;
}

int dstat(const RookPlacement& p, const Board& b) {
    require_full(p, b, "dstat");
    const Partition& shape = b.shape();
    int count = 0;
    for (int i = 1; i <= b.n(); ++i) {
        const int jr = p.column_in_row(i);
        const bool rook_in_shape = shape.contains_cell(i, jr);
        for (int j = 1; j <= b.m(); ++j) {
            if (jr == j) continue;  // (i) occupied
            const int rr = p.row_in_column(j);
            if (rr != 0 && rr > i) continue;  // (ii) rook below
            if (shape.contains_cell(i, j)) {
                if (!rook_in_shape || jr < j) ++count;  // (iii)
            } else {
                if (!rook_in_shape && jr < j) ++count;  // (iv)
            }
        }
    }
    return count;
}

int cross(const RookPlacement& p, const Board& b) {
    if (b.m() != b.n()) throw std::domain_error("cross: square board required");
    require_full(p, b, "cross");
    const Partition& shape = b.shape();
    // Double crossings of the stat cancellation: vertical rays run south from
    // each rook; horizontal rays run east on the cylinder, stopping at the
    // border of the shape in their row.
    int count = 0;
    for (int i = 1; i <= b.n(); ++i) {
        const int jr = p.column_in_row(i);
        const bool rook_in_shape = shape.contains_cell(i, jr);
        for (int j = 1; j <= b.m(); ++j) {
            if (jr == j) continue;
            const int rr = p.row_in_column(j);
            const bool vertical = (rr != 0 && rr < i);
            if (!vertical) continue;
            bool horizontal;
            if (shape.contains_cell(i, j)) {
                horizontal = !rook_in_shape || jr < j;
            } else {
                horizontal = !rook_in_shape && jr < j;
            }
            if (horizontal) ++count;
        }
    }
    return count;
}

}  // namespace qrc
