#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kronhook/order.hpp"
#include "kronhook/partition.hpp"

namespace kronhook {

enum class TableauViolation {
    shape_mismatch,
    letter_range,
    row_order,
    column_order,
    unbarred_column_repeat,
    barred_row_repeat,
};

inline const char* to_string(TableauViolation v) {
    switch (v) {
        case TableauViolation::shape_mismatch: return "rows do not match the shape";
        case TableauViolation::letter_range: return "letter value outside the alphabet";
        case TableauViolation::row_order: return "row is not weakly increasing";
        case TableauViolation::column_order: return "column is not weakly increasing";
        case TableauViolation::unbarred_column_repeat: return "identical unbarred letters in a column";
        case TableauViolation::barred_row_repeat: return "identical barred letters in a row";
    }
    return "unknown violation";
}

class tableau_error : public std::runtime_error {
public:
    explicit tableau_error(TableauViolation kind)
        : std::runtime_error(std::string("invalid tableau: ") + to_string(kind)), kind_(kind) {}
    TableauViolation kind() const { return kind_; }

private:
    TableauViolation kind_;
};

/// A filling of a straight shape by letters of the doubled alphabet, valid
/// with respect to one specific total order.
struct ColoredTableau {
    Partition shape;
    std::vector<std::vector<Letter>> rows;
    TotalOrder order;

    /// 1-based cell access.
    const Letter& at(int row, int col) const {
        return rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
    }
    int cell_count() const { return shape.sum(); }

    friend bool operator==(const ColoredTableau& a, const ColoredTableau& b) {
        return a.shape == b.shape && a.rows == b.rows && a.order == b.order;
    }
};

/// Checks the shape and the three filling rules; nullopt means valid.
/// Weak increase makes equal letters contiguous, so repeats only need to be
/// checked between neighbors.
inline std::optional<TableauViolation> find_violation(const Partition& shape,
                                                      const std::vector<std::vector<Letter>>& rows,
                                                      const TotalOrder& order) {
    if (static_cast<int>(rows.size()) != shape.rows()) return TableauViolation::shape_mismatch;
    for (int r = 1; r <= shape.rows(); ++r)
        if (static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) != shape.part(r))
            return TableauViolation::shape_mismatch;
    for (const auto& row : rows)
        for (const Letter& l : row)
            if (l.value < 1 || l.value > order.n()) return TableauViolation::letter_range;
    for (const auto& row : rows) {
        for (std::size_t c = 1; c < row.size(); ++c) {
            const Letter &prev = row[c - 1], &cur = row[c];
            if (order.rank(prev) > order.rank(cur)) return TableauViolation::row_order;
            if (prev == cur && prev.barred) return TableauViolation::barred_row_repeat;
        }
    }
    for (std::size_t r = 1; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const Letter &above = rows[r - 1][c], &below = rows[r][c];
            if (order.rank(above) > order.rank(below)) return TableauViolation::column_order;
            if (above == below && !above.barred) return TableauViolation::unbarred_column_repeat;
        }
    }
    return std::nullopt;
}

/// Builds a tableau after checking every invariant; throws tableau_error
/// with the violated category otherwise.
inline ColoredTableau validate(const Partition& shape, std::vector<std::vector<Letter>> rows,
                               TotalOrder order) {
    if (auto bad = find_violation(shape, rows, order)) throw tableau_error(*bad);
    return ColoredTableau{shape, std::move(rows), std::move(order)};
}

/// Per-value counts: total c_i (i and i' together), unbarred alpha_i, and the
/// total color d = sum of (c_i - alpha_i). Sequences are sized to the largest
/// value present.
struct ContentProfile {
    std::vector<int> total;
    std::vector<int> unbarred;
    int color = 0;
};

inline ContentProfile content_profile(const ColoredTableau& t) {
    int max_value = 0;
    for (const auto& row : t.rows)
        for (const Letter& l : row) max_value = std::max(max_value, l.value);
    ContentProfile p;
    p.total.assign(static_cast<std::size_t>(max_value), 0);
    p.unbarred.assign(static_cast<std::size_t>(max_value), 0);
    for (const auto& row : t.rows) {
        for (const Letter& l : row) {
            ++p.total[static_cast<std::size_t>(l.value - 1)];
            if (l.barred)
                ++p.color;
            else
                ++p.unbarred[static_cast<std::size_t>(l.value - 1)];
        }
    }
    return p;
}

/// Flips the bar of the entry in the last row, column 1. Only meaningful for
/// the natural order, where i immediately follows i' and the flip always
/// yields a valid tableau again.
inline ColoredTableau toggle_southwest(const ColoredTableau& t) {
    if (t.shape.empty()) throw std::invalid_argument("toggle_southwest: empty shape has no corner");
    if (!(t.order == natural_order(t.order.n())))
        throw std::invalid_argument("toggle_southwest: defined only under the natural order");
    ColoredTableau out = t;
    Letter& corner = out.rows.back().front();
    corner.barred = !corner.barred;
    if (auto bad = find_violation(out.shape, out.rows, out.order))
        throw std::logic_error(std::string("toggle_southwest broke the tableau: ") + to_string(*bad));
    return out;
}

struct EnumerateOptions {
    /// Restrict to tableaux whose total reading word is a ballot sequence.
    /// This prunes the search on the unbarred word prefix row by row and
    /// checks the barred word's margin condition at the leaves.
    bool ballot_word = false;
    /// Output-only filter applied after all structural conditions.
    std::function<bool(const ColoredTableau&)> accept;
};

namespace detail {

class TableauEnumerator {
public:
    TableauEnumerator(const Partition& shape, const Partition& content, int color,
                      const TotalOrder& order, const std::function<bool(const ColoredTableau&)>& visit,
                      const EnumerateOptions& opts)
        : shape_(shape), order_(order), visit_(visit), opts_(opts), color_(color) {
        if (shape.sum() != content.sum())
            throw std::invalid_argument("enumerate_tableaux: |shape| != |content|");
        values_ = content.rows();
        if (values_ > order.n())
            throw std::invalid_argument("enumerate_tableaux: content has more values than the alphabet");
        cells_ = shape.sum();
        rem_.assign(static_cast<std::size_t>(values_) + 1, 0);
        for (int v = 1; v <= values_; ++v) rem_[static_cast<std::size_t>(v)] = content.part(v);
        rem_barred_ = color;
        rem_unbarred_ = cells_ - color;
        grid_.resize(static_cast<std::size_t>(shape.rows()));
        for (int r = 1; r <= shape.rows(); ++r)
            grid_[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.part(r)), Letter{});
        ucnt_.assign(static_cast<std::size_t>(values_) + 2, 0);
        ubcnt_.assign(static_cast<std::size_t>(values_) + 2, 0);
    }

    void run() {
        if (color_ < 0 || color_ > cells_) return;  // no such tableau, not an error
        fill(0, 0);
    }

private:
    bool leaf() {
        if (opts_.ballot_word && !barred_word_fits()) return true;
        ColoredTableau t{shape_, grid_, order_};
        if (opts_.accept && !opts_.accept(t)) return true;
        return visit_(t);
    }

    // Margin condition on the barred column word, read bottom to top within
    // each column, left to right, against the unbarred content.
    bool barred_word_fits() const {
        std::vector<int> vcnt(static_cast<std::size_t>(values_) + 2, 0);
        const int width = shape_.part(1);
        for (int c = 0; c < width; ++c) {
            for (int r = static_cast<int>(grid_.size()) - 1; r >= 0; --r) {
                const auto& row = grid_[static_cast<std::size_t>(r)];
                if (static_cast<int>(row.size()) <= c) continue;
                const Letter& l = row[static_cast<std::size_t>(c)];
                if (!l.barred) continue;
                const std::size_t v = static_cast<std::size_t>(l.value);
                ++vcnt[v];
                if (l.value >= 2 && vcnt[v] - vcnt[v - 1] > ubcnt_[v - 1] - ubcnt_[v]) return false;
            }
        }
        return true;
    }

    // Returns false when the visitor asked to stop.
    bool fill(int r, int c) {
        if (r == static_cast<int>(grid_.size())) return leaf();
        auto& row = grid_[static_cast<std::size_t>(r)];
        const int row_len = static_cast<int>(row.size());
        int min_pos = 0;
        if (c > 0) {
            const Letter& left = row[static_cast<std::size_t>(c - 1)];
            min_pos = order_.rank(left) + (left.barred ? 1 : 0);
        }
        if (r > 0) {
            const Letter& above = grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
            min_pos = std::max(min_pos, order_.rank(above) + (above.barred ? 0 : 1));
        }
        const int next_r = (c + 1 == row_len) ? r + 1 : r;
        const int next_c = (c + 1 == row_len) ? 0 : c + 1;
        for (int pos = min_pos; pos < 2 * order_.n(); ++pos) {
            const Letter l = order_.at(pos);
            if (l.value > values_) continue;
            int& avail = rem_[static_cast<std::size_t>(l.value)];
            if (avail == 0) continue;
            int& budget = l.barred ? rem_barred_ : rem_unbarred_;
            if (budget == 0) continue;
            --avail;
            --budget;
            if (!l.barred) ++ubcnt_[static_cast<std::size_t>(l.value)];
            row[static_cast<std::size_t>(c)] = l;
            bool keep_going = true;
            if (opts_.ballot_word && c + 1 == row_len) {
                if (row_prefix_ok(r))
                    keep_going = fill(next_r, next_c);
                undo_row_prefix(r);
            } else {
                keep_going = fill(next_r, next_c);
            }
            ++avail;
            ++budget;
            if (!l.barred) --ubcnt_[static_cast<std::size_t>(l.value)];
            if (!keep_going) return false;
        }
        return true;
    }

    // Extends the unbarred reading word by row r (right to left) and checks
    // the ballot inequality at every new position. Increments are always
    // applied in full so undo_row_prefix can reverse them.
    bool row_prefix_ok(int r) {
        const auto& row = grid_[static_cast<std::size_t>(r)];
        bool ok = true;
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            if (it->barred) continue;
            const std::size_t v = static_cast<std::size_t>(it->value);
            ++ucnt_[v];
            if (it->value >= 2 && ucnt_[v] > ucnt_[v - 1]) ok = false;
        }
        return ok;
    }

    void undo_row_prefix(int r) {
        for (const Letter& l : grid_[static_cast<std::size_t>(r)])
            if (!l.barred) --ucnt_[static_cast<std::size_t>(l.value)];
    }

    const Partition& shape_;
    const TotalOrder& order_;
    const std::function<bool(const ColoredTableau&)>& visit_;
    const EnumerateOptions& opts_;
    std::vector<std::vector<Letter>> grid_;
    std::vector<int> rem_;
    std::vector<int> ucnt_;
    std::vector<int> ubcnt_;
    int color_ = 0;
    int cells_ = 0;
    int values_ = 0;
    int rem_barred_ = 0;
    int rem_unbarred_ = 0;
};

}  // namespace detail

/// Emits every tableau of the given shape with the given total content and
/// total color, valid under `order`, in row-major lexicographic order of the
/// entries' ranks. Letters are confined to values 1..len(content). The visit
/// callback may return false to stop early.
inline void enumerate_tableaux(const Partition& shape, const Partition& total_content, int color,
                               const TotalOrder& order,
                               const std::function<bool(const ColoredTableau&)>& visit,
                               const EnumerateOptions& opts = {}) {
    detail::TableauEnumerator(shape, total_content, color, order, visit, opts).run();
}

inline std::vector<ColoredTableau> collect_tableaux(const Partition& shape,
                                                    const Partition& total_content, int color,
                                                    const TotalOrder& order,
                                                    const EnumerateOptions& opts = {}) {
    std::vector<ColoredTableau> out;
    enumerate_tableaux(
        shape, total_content, color, order,
        [&](const ColoredTableau& t) {
            out.push_back(t);
            return true;
        },
        opts);
    return out;
}

}  // namespace kronhook
