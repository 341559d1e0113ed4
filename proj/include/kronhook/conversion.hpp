#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kronhook/order.hpp"
#include "kronhook/partition.hpp"
#include "kronhook/tableau.hpp"

namespace kronhook {

namespace detail {

/// Refills one connected ribbon component with `first_count` copies of the
/// letter the target order puts first and the rest of the pair's other
/// letter. `path` lists the component's cells southwest to northeast, one
/// per diagonal. All cells but one free corner are forced by the row and
/// column rules, and the free corner is the northeast end when the unbarred
/// letter comes first, the southwest end otherwise.
inline std::vector<Letter> refill_component(const std::vector<Cell>& path, const Letter& first,
                                            const Letter& second, int first_count) {
    const std::size_t m = path.size();
    std::vector<Letter> fill(m, Letter{});
    const bool unbarred_first = !first.barred;
    std::size_t free_index = unbarred_first ? m - 1 : 0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const bool east = path[i + 1].row == path[i].row;
        if (unbarred_first)
            fill[i] = east ? first : second;
        else
            fill[i + 1] = east ? second : first;
    }
    int forced_first = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (i != free_index && fill[i] == first) ++forced_first;
    if (first_count == forced_first)
        fill[free_index] = second;
    else if (first_count == forced_first + 1)
        fill[free_index] = first;
    else
        throw std::logic_error("refill_component: letter counts admit no valid filling");
    return fill;
}

}  // namespace detail

/// One conversion switch: transposes the step's adjacent pair in the order
/// and refills each connected component of the pair's ribbon with the same
/// letter counts, the unique way that is valid afterwards. Cells holding
/// other letters never move.
inline ColoredTableau apply_switch(const ColoredTableau& t, const SwitchStep& step) {
    const TotalOrder target = apply_step(t.order, step);  // checks adjacency and orientation

    CellSet pair_cells;
    for (int r = 1; r <= t.shape.rows(); ++r)
        for (int c = 1; c <= t.shape.part(r); ++c) {
            const Letter& l = t.at(r, c);
            if (l == step.unbarred || l == step.barred) pair_cells.push_back({r, c});
        }

    ColoredTableau out{t.shape, t.rows, target};
    if (!pair_cells.empty()) {
        if (!is_ribbon(pair_cells))
            throw std::logic_error("apply_switch: adjacent pair does not occupy a ribbon");
        const Letter first = target.less(step.unbarred, step.barred) ? step.unbarred : step.barred;
        const Letter second = first == step.unbarred ? step.barred : step.unbarred;
        for (const CellSet& component : ribbon_components(pair_cells)) {
            int first_count = 0;
            for (const Cell& cell : component)
                if (t.at(cell.row, cell.col) == first) ++first_count;
            const auto fill = detail::refill_component(component, first, second, first_count);
            for (std::size_t i = 0; i < component.size(); ++i)
                out.rows[static_cast<std::size_t>(component[i].row - 1)]
                        [static_cast<std::size_t>(component[i].col - 1)] = fill[i];
        }
    }
    if (auto bad = find_violation(out.shape, out.rows, out.order))
        throw std::logic_error(std::string("apply_switch produced an invalid tableau: ") +
                               to_string(*bad));
    return out;
}

/// Applies an explicit sequence of switches.
inline ColoredTableau convert_along(ColoredTableau t, const std::vector<SwitchStep>& path) {
    for (const SwitchStep& step : path) t = apply_switch(t, step);
    return t;
}

/// Iterated conversion to `target` along the deterministic switch path.
inline ColoredTableau convert(const ColoredTableau& t, const TotalOrder& target) {
    return convert_along(t, adjacent_switch_path(t.order, target));
}

/// Like convert, but returns the starting tableau and every intermediate.
inline std::vector<ColoredTableau> convert_trace(const ColoredTableau& t, const TotalOrder& target) {
    std::vector<ColoredTableau> stages{t};
    for (const SwitchStep& step : adjacent_switch_path(t.order, target))
        stages.push_back(apply_switch(stages.back(), step));
    return stages;
}

}  // namespace kronhook
