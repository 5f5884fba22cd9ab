#include "qrc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qrc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::domain_error("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::domain_error("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::staircase(int j) {
    std::vector<int> p;
    for (int v = j; v >= 1; --v) p.push_back(v);
    return Partition(std::move(p));
}

Partition Partition::rectangle(int width, int rows) {
    if (width == 0 || rows == 0) return Partition();
    return Partition(std::vector<int>(rows, width));
}

Partition Partition::parse(const std::string& s) {
    if (s.empty() || s == "0") return Partition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::domain_error("Partition::parse: bad token '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::conjugate_part(int j) const {
    int h = 0;
    for (int p : parts_)
        if (p >= j) ++h;
    return j >= 1 ? h : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= first_part(); ++j) c.push_back(conjugate_part(j));
    return Partition(std::move(c));
}

std::vector<int> Partition::corner_rows() const {
    std::vector<int> rows;
    for (int i = 1; i <= length(); ++i)
        if (part(i) > part(i + 1)) rows.push_back(i);
    return rows;
}

Partition Partition::delete_corner(int corner_row) const {
    if (corner_row < 1 || corner_row > length() || part(corner_row) <= part(corner_row + 1))
        throw std::domain_error("delete_corner: not an outer corner row");
    std::vector<int> p = parts_;
    if (--p[corner_row - 1] == 0) p.erase(p.begin() + (corner_row - 1));
    return Partition(std::move(p));
}

Partition Partition::contract_corner(int corner_row) const {
    if (corner_row < 1 || corner_row > length() || part(corner_row) <= part(corner_row + 1))
        throw std::domain_error("contract_corner: not an outer corner row");
    return remove_row_and_column(corner_row, part(corner_row));
}

Partition Partition::remove_column(int j) const {
    if (j < 1) throw std::domain_error("remove_column: index must be >= 1");
    std::vector<int> p;
    for (int v : parts_) {
        const int w = (v >= j) ? v - 1 : v;
        if (w > 0) p.push_back(w);
    }
    return Partition(std::move(p));
}

Partition Partition::remove_row(int i) const {
    if (i < 1) throw std::domain_error("remove_row: index must be >= 1");
    std::vector<int> p = parts_;
    if (i <= length()) p.erase(p.begin() + (i - 1));
    return Partition(std::move(p));
}

Partition Partition::remove_row_and_column(int i, int j) const {
    return remove_row(i).remove_column(j);
}

Partition Partition::complement(int m) const {
    if (length() > m || first_part() > m)
        throw std::domain_error("complement: partition does not fit in the square");
    std::vector<int> p;
    for (int i = m; i >= 1; --i) {
        const int w = m - part(i);
        if (w > 0) p.push_back(w);
    }
    return Partition(std::move(p));
}

namespace {

void box_partitions_rec(int rows, int cols, int max_part, std::vector<int>& cur,
                        std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = std::min(cols, max_part); v >= 1; --v) {
        cur.push_back(v);
        box_partitions_rec(rows, cols, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (rows < 0 || cols < 0) throw std::domain_error("partitions_in_box: negative box");
    box_partitions_rec(rows, cols, cols, cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void partitions_of_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int v = std::min(n, max_part); v >= 1; --v) {
        cur.push_back(v);
        partitions_of_rec(n - v, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n < 0) throw std::domain_error("partitions_of: negative n");
    partitions_of_rec(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qrc
