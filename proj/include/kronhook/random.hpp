#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "kronhook/order.hpp"
#include "kronhook/partition.hpp"
#include "kronhook/tableau.hpp"

namespace kronhook {

/// A seeded random valid tableau of the given shape (any content, any
/// color): a backtracking fill trying the locally admissible letters in
/// random order and keeping the first completion.
inline ColoredTableau random_tableau(const Partition& shape, const TotalOrder& order,
                                     std::mt19937_64& rng) {
    std::vector<std::vector<Letter>> grid(static_cast<std::size_t>(shape.rows()));
    for (int r = 1; r <= shape.rows(); ++r)
        grid[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.part(r)),
                                                     Letter{});
    auto fill = [&](auto&& self, int r, int c) -> bool {
        if (r == shape.rows()) return true;
        const int row_len = shape.part(r + 1);
        int min_pos = 0;
        if (c > 0) {
            const Letter& left = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)];
            min_pos = order.rank(left) + (left.barred ? 1 : 0);
        }
        if (r > 0) {
            const Letter& above = grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
            min_pos = std::max(min_pos, order.rank(above) + (above.barred ? 0 : 1));
        }
        std::vector<int> positions;
        for (int pos = min_pos; pos < 2 * order.n(); ++pos) positions.push_back(pos);
        std::shuffle(positions.begin(), positions.end(), rng);
        const int next_r = (c + 1 == row_len) ? r + 1 : r;
        const int next_c = (c + 1 == row_len) ? 0 : c + 1;
        for (int pos : positions) {
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = order.at(pos);
            if (self(self, next_r, next_c)) return true;
        }
        return false;
    };
    if (!fill(fill, 0, 0)) throw std::logic_error("random_tableau: no valid filling exists");
    return ColoredTableau{shape, std::move(grid), order};
}

/// A seeded random switch path from `from` to `to`: repeatedly transposes a
/// uniformly chosen adjacent pair that is inverted relative to `to`. Every
/// such pair is one barred and one unbarred letter.
inline std::vector<SwitchStep> random_switch_path(const TotalOrder& from, const TotalOrder& to,
                                                  std::mt19937_64& rng) {
    if (from.n() != to.n())
        throw std::invalid_argument("random_switch_path: orders have different n");
    std::vector<Letter> seq = from.letters();
    std::vector<SwitchStep> steps;
    for (;;) {
        std::vector<std::size_t> inversions;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (to.rank(seq[i]) > to.rank(seq[i + 1])) inversions.push_back(i);
        if (inversions.empty()) break;
        const std::size_t i =
            inversions[std::uniform_int_distribution<std::size_t>(0, inversions.size() - 1)(rng)];
        const Letter first = seq[i], second = seq[i + 1];
        if (first.barred == second.barred)
            throw std::logic_error("random_switch_path: chains out of agreement");
        steps.push_back({first.barred ? second : first, first.barred ? first : second,
                         !first.barred});
        std::swap(seq[i], seq[i + 1]);
    }
    return steps;
}

}  // namespace kronhook
