#pragma once

#include <cstddef>
#include <vector>

#include "kronhook/conversion.hpp"
#include "kronhook/order.hpp"
#include "kronhook/tableau.hpp"

namespace kronhook {

/// A word over {1..n}. Barred reading words are exposed with bars stripped.
using Word = std::vector<int>;

/// Unbarred entries read along rows right to left, top to bottom.
inline Word unbarred_word(const ColoredTableau& t) {
    Word u;
    for (const auto& row : t.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it)
            if (!it->barred) u.push_back(it->value);
    return u;
}

/// Barred entries read along columns bottom to top, left to right, bars
/// removed.
inline Word barred_word(const ColoredTableau& t) {
    Word v;
    const int width = t.shape.part(1);
    for (int c = 1; c <= width; ++c) {
        for (int r = t.shape.rows(); r >= 1; --r) {
            if (t.shape.part(r) < c) continue;
            const Letter& l = t.at(r, c);
            if (l.barred) v.push_back(l.value);
        }
    }
    return v;
}

/// The concatenation of the unbarred and barred reading words.
inline Word total_word(const ColoredTableau& t) {
    Word w = unbarred_word(t);
    const Word v = barred_word(t);
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

/// Every prefix contains at least as many i as i+1.
inline bool is_ballot(const Word& w) {
    int max_value = 0;
    for (int x : w) max_value = std::max(max_value, x);
    std::vector<int> cnt(static_cast<std::size_t>(max_value) + 1, 0);
    for (int x : w) {
        ++cnt[static_cast<std::size_t>(x)];
        if (x >= 2 && cnt[static_cast<std::size_t>(x)] > cnt[static_cast<std::size_t>(x - 1)])
            return false;
    }
    return true;
}

/// In every initial segment of w, the empty one included, the count of i+1
/// may exceed the count of i by at most alpha_i - alpha_{i+1}. The sequence
/// alpha is padded with zeros to cover all letters of w. The empty segment
/// makes a weakly decreasing alpha a prerequisite; conversion between
/// barred-tight orders does not respect the margin condition without it.
inline bool is_alpha_ballot(const Word& w, const std::vector<int>& alpha) {
    int max_value = 0;
    for (int x : w) max_value = std::max(max_value, x);
    const std::size_t span = std::max(alpha.size(), static_cast<std::size_t>(max_value));
    std::vector<int> a(span + 2, 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) a[i + 1] = alpha[i];
    for (std::size_t i = 1; i + 1 <= span; ++i)
        if (a[i] < a[i + 1]) return false;
    // With nonnegative margins, appending x can only break the inequality
    // between x-1 and x.
    std::vector<int> cnt(span + 2, 0);
    for (int x : w) {
        const std::size_t v = static_cast<std::size_t>(x);
        ++cnt[v];
        if (x >= 2 && cnt[v] - cnt[v - 1] > a[v - 1] - a[v]) return false;
    }
    return true;
}

/// Ballot statistics of one tableau converted to each given order; the raw
/// material for the conversion-invariance sweeps.
struct BallotRow {
    TotalOrder order;
    bool unbarred_tight = false;
    bool barred_tight = false;
    Word u, v, w;
    bool u_ballot = false;
    bool v_alpha_ballot = false;
    bool w_ballot = false;
};

struct BallotInvarianceReport {
    std::vector<int> alpha;  // unbarred content, identical across all rows
    std::vector<BallotRow> rows;
};

inline BallotInvarianceReport ballot_invariance_report(const ColoredTableau& t,
                                                       const std::vector<TotalOrder>& orders) {
    BallotInvarianceReport report;
    report.alpha = content_profile(t).unbarred;
    for (const TotalOrder& o : orders) {
        const ColoredTableau converted = convert(t, o);
        BallotRow row{o, is_unbarred_tight(o), is_barred_tight(o),
                      unbarred_word(converted), barred_word(converted), total_word(converted),
                      false, false, false};
        row.u_ballot = is_ballot(row.u);
        row.v_alpha_ballot = is_alpha_ballot(row.v, report.alpha);
        row.w_ballot = is_ballot(row.w);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace kronhook
