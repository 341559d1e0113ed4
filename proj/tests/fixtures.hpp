#pragma once

// Shared hand-checked tableaux used across the test suites: a 14-cell
// example that converts from the natural order to the small bar order in
// three switches, a 2x2 pair showing that ballotness is not preserved by
// arbitrary conversion, and a 5-cell pair whose conversion changes the Knuth
// class of the reversed word.

#include <vector>

#include "kronhook/order.hpp"
#include "kronhook/partition.hpp"
#include "kronhook/tableau.hpp"

namespace fixtures {

using kronhook::ColoredTableau;
using kronhook::Letter;
using kronhook::Partition;
using kronhook::TotalOrder;
using kronhook::bar;
using kronhook::unb;

inline ColoredTableau tab(std::vector<std::vector<Letter>> rows, const TotalOrder& order) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return kronhook::validate(Partition(std::move(parts)), std::move(rows), order);
}

// Shape (4,3,3,3,1), content (5,5,4), color 6, natural order.
inline ColoredTableau big_stage0() {
    return tab({{bar(1), unb(1), unb(1), bar(2)},
                {bar(1), bar(2), unb(2)},
                {unb(1), unb(2), bar(3)},
                {unb(2), bar(3), unb(3)},
                {unb(3)}},
               kronhook::natural_order(3));
}

// After switching (1, 2'): order 1' 2' 1 2 3' 3.
inline ColoredTableau big_stage1() {
    return tab({{bar(1), bar(2), unb(1), unb(1)},
                {bar(1), bar(2), unb(2)},
                {unb(1), unb(2), bar(3)},
                {unb(2), bar(3), unb(3)},
                {unb(3)}},
               TotalOrder({bar(1), bar(2), unb(1), unb(2), bar(3), unb(3)}));
}

// After switching (2, 3'): order 1' 2' 1 3' 2 3.
inline ColoredTableau big_stage2() {
    return tab({{bar(1), bar(2), unb(1), unb(1)},
                {bar(1), bar(2), bar(3)},
                {unb(1), bar(3), unb(2)},
                {unb(2), unb(2), unb(3)},
                {unb(3)}},
               TotalOrder({bar(1), bar(2), unb(1), bar(3), unb(2), unb(3)}));
}

// After switching (1, 3'): the small bar order.
inline ColoredTableau big_stage3() {
    return tab({{bar(1), bar(2), bar(3), unb(1)},
                {bar(1), bar(2), unb(1)},
                {bar(3), unb(1), unb(2)},
                {unb(2), unb(2), unb(3)},
                {unb(3)}},
               kronhook::small_bar_order(3));
}

// 2x2 pair: the filling valid under 1 < 1' < 2 < 2' has total word 2112,
// its conversion partner under 1 < 1' < 2' < 2 has total word 1212.
inline TotalOrder square_order_less() {
    return TotalOrder({unb(1), bar(1), unb(2), bar(2)});
}
inline TotalOrder square_order_prec() {
    return TotalOrder({unb(1), bar(1), bar(2), unb(2)});
}
inline ColoredTableau square_less() {
    return tab({{unb(1), unb(2)}, {bar(1), bar(2)}}, square_order_less());
}
inline ColoredTableau square_prec() {
    return tab({{unb(1), bar(2)}, {bar(1), unb(2)}}, square_order_prec());
}

// 5-cell pair related by natural -> small bar conversion.
inline ColoredTableau knuth_natural() {
    return tab({{bar(1), unb(1)}, {unb(2), bar(3)}, {unb(3)}}, kronhook::natural_order(3));
}
inline ColoredTableau knuth_smallbar() {
    return tab({{bar(1), unb(1)}, {bar(3), unb(2)}, {unb(3)}}, kronhook::small_bar_order(3));
}

}  // namespace fixtures
