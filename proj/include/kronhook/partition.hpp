#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kronhook {

/// An integer partition: weakly decreasing positive parts. Trailing zeros in
/// the input are dropped; the empty partition is allowed and has sum 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int sum() const { return sum_; }

    /// 1-based row length; zero past the last row.
    int part(int row) const {
        return (row >= 1 && row <= rows()) ? parts_[static_cast<std::size_t>(row - 1)] : 0;
    }

    /// Pointwise containment of Young diagrams.
    bool contains(const Partition& inner) const {
        for (int i = 1; i <= inner.rows(); ++i)
            if (inner.part(i) > part(i)) return false;
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

/// Transpose of the Young diagram: part i of the result counts the parts of
/// p that are >= i. Involutive.
inline Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(p.part(1)));
    for (int col = 1; col <= p.part(1); ++col) {
        int height = 0;
        while (height < p.rows() && p.part(height + 1) >= col) ++height;
        cols.push_back(height);
    }
    return Partition(std::move(cols));
}

/// The hook (n-d, 1^d). Defined only for 0 <= d <= n-1.
inline Partition hook_mu(int n, int d) {
    if (n < 1) throw std::invalid_argument("hook_mu: n must be positive");
    if (d < 0 || d > n - 1) throw std::invalid_argument("hook_mu: d must lie in [0, n-1]");
    std::vector<int> parts(static_cast<std::size_t>(d) + 1, 1);
    parts[0] = n - d;
    return Partition(std::move(parts));
}

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(stack));
            return;
        }
        for (int next = std::min(remaining, max_part); next >= 1; --next) {
            stack.push_back(next);
            self(self, remaining - next, next);
            stack.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

/// A box of a Young diagram, matrix convention: row grows southward and
/// column grows eastward, both 1-based.
struct Cell {
    int row = 1;
    int col = 1;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Diagonal index; constant along northwest-southeast diagonals.
inline int content(const Cell& c) { return c.col - c.row; }

using CellSet = std::vector<Cell>;

/// Boxes of outer with the boxes of inner removed. Requires inner <= outer.
inline CellSet skew_cells(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew_cells: inner partition does not fit in outer");
    CellSet cells;
    for (int r = 1; r <= outer.rows(); ++r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c)
            cells.push_back({r, c});
    return cells;
}

namespace detail {

// Sorted, deduplicated copy with per-row column intervals attached.
struct RowSpan {
    int row;
    int first_col;
    int last_col;
    int count;
};

inline std::vector<RowSpan> row_spans(CellSet cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    std::vector<RowSpan> spans;
    for (const Cell& c : cells) {
        if (c.row < 1 || c.col < 1) throw std::invalid_argument("cells must have positive coordinates");
        if (!spans.empty() && spans.back().row == c.row) {
            spans.back().last_col = c.col;
            spans.back().count += 1;
        } else {
            spans.push_back({c.row, c.col, c.col, 1});
        }
    }
    return spans;
}

// True iff the cells form the diagram of some skew shape outer/inner.
inline bool is_skew_shape(const CellSet& cells) {
    const auto spans = row_spans(cells);
    for (const RowSpan& s : spans)
        if (s.count != s.last_col - s.first_col + 1) return false;  // row has a hole
    for (std::size_t i = 0; i + 1 < spans.size(); ++i) {
        const RowSpan& above = spans[i];
        const RowSpan& below = spans[i + 1];
        if (below.row == above.row + 1) {
            if (above.first_col < below.first_col) return false;
            if (above.last_col < below.last_col) return false;
        } else {
            // Empty rows in between force the lower span strictly west.
            if (above.first_col <= below.last_col) return false;
        }
    }
    return true;
}

}  // namespace detail

/// True iff the cells form a skew Young diagram with no 2x2 square.
inline bool is_ribbon(const CellSet& cells) {
    if (!detail::is_skew_shape(cells)) return false;
    const auto spans = detail::row_spans(cells);
    for (std::size_t i = 0; i + 1 < spans.size(); ++i) {
        if (spans[i + 1].row != spans[i].row + 1) continue;
        // Adjacent rows of a skew shape overlap in columns [above.first, below.last];
        // an overlap of two or more columns contains a 2x2 square.
        if (spans[i + 1].last_col - spans[i].first_col >= 1) return false;
    }
    return true;
}

/// Edge-connected components of a ribbon, ordered southwest to northeast.
/// Within a ribbon every diagonal holds at most one box, so sorting by
/// content lists each component as a run of consecutive diagonals.
inline std::vector<CellSet> ribbon_components(const CellSet& cells) {
    if (!is_ribbon(cells)) throw std::invalid_argument("ribbon_components: cells do not form a ribbon");
    CellSet sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const Cell& a, const Cell& b) { return content(a) < content(b); });
    std::vector<CellSet> components;
    for (const Cell& c : sorted) {
        bool adjacent = false;
        if (!components.empty()) {
            const Cell& prev = components.back().back();
            adjacent = (c.row == prev.row && c.col == prev.col + 1) ||
                       (c.col == prev.col && c.row == prev.row - 1);
        }
        if (adjacent)
            components.back().push_back(c);
        else
            components.push_back({c});
    }
    return components;
}

}  // namespace kronhook
