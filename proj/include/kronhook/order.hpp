#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kronhook {

/// One symbol of the doubled alphabet {1..n, 1'..n'}: a value plus a bar flag.
struct Letter {
    int value = 1;
    bool barred = false;
    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter bar(int value) { return {value, true}; }
inline Letter unb(int value) { return {value, false}; }

/// Dense index for letter-keyed arrays: 1' -> 0, 1 -> 1, 2' -> 2, ...
inline int letter_index(const Letter& l) { return (l.value - 1) * 2 + (l.barred ? 0 : 1); }

/// A linear extension of the doubled alphabet in which the unbarred letters
/// appear as the increasing chain 1 < 2 < ... < n and the barred letters as
/// the increasing chain 1' < 2' < ... < n'.
class TotalOrder {
public:
    explicit TotalOrder(std::vector<Letter> sequence) : seq_(std::move(sequence)) {
        if (seq_.empty() || seq_.size() % 2 != 0)
            throw std::invalid_argument("total order must list 2n letters");
        n_ = static_cast<int>(seq_.size()) / 2;
        rank_.assign(seq_.size(), -1);
        int next_unbarred = 1, next_barred = 1;
        for (std::size_t pos = 0; pos < seq_.size(); ++pos) {
            const Letter& l = seq_[pos];
            if (l.value < 1 || l.value > n_)
                throw std::invalid_argument("total order letter out of range");
            int& expected = l.barred ? next_barred : next_unbarred;
            if (l.value != expected)
                throw std::invalid_argument("total order must keep each chain increasing");
            ++expected;
            rank_[static_cast<std::size_t>(letter_index(l))] = static_cast<int>(pos);
        }
    }

    int n() const { return n_; }
    const std::vector<Letter>& letters() const { return seq_; }
    const Letter& at(int pos) const { return seq_[static_cast<std::size_t>(pos)]; }
    int rank(const Letter& l) const { return rank_[static_cast<std::size_t>(letter_index(l))]; }
    bool less(const Letter& a, const Letter& b) const { return rank(a) < rank(b); }

    friend bool operator==(const TotalOrder& a, const TotalOrder& b) { return a.seq_ == b.seq_; }

private:
    std::vector<Letter> seq_;
    std::vector<int> rank_;
    int n_ = 0;
};

/// 1' < 1 < 2' < 2 < ... < n' < n.
inline TotalOrder natural_order(int n) {
    if (n < 1) throw std::invalid_argument("natural_order: n must be positive");
    std::vector<Letter> seq;
    seq.reserve(static_cast<std::size_t>(2 * n));
    for (int v = 1; v <= n; ++v) {
        seq.push_back(bar(v));
        seq.push_back(unb(v));
    }
    return TotalOrder(std::move(seq));
}

/// 1' < 2' < ... < n' < 1 < 2 < ... < n.
inline TotalOrder small_bar_order(int n) {
    if (n < 1) throw std::invalid_argument("small_bar_order: n must be positive");
    std::vector<Letter> seq;
    seq.reserve(static_cast<std::size_t>(2 * n));
    for (int v = 1; v <= n; ++v) seq.push_back(bar(v));
    for (int v = 1; v <= n; ++v) seq.push_back(unb(v));
    return TotalOrder(std::move(seq));
}

/// Every compatible total order, exactly once. Orders that place barred
/// letters earlier are listed first. Guarded to n <= 8 (C(16,8) = 12870).
inline std::vector<TotalOrder> all_orders(int n) {
    if (n < 1) throw std::invalid_argument("all_orders: n must be positive");
    if (n > 8) throw std::invalid_argument("all_orders: n > 8 would enumerate too many orders");
    std::vector<TotalOrder> out;
    std::vector<Letter> seq;
    auto rec = [&](auto&& self, int barred_used, int unbarred_used) -> void {
        if (barred_used == n && unbarred_used == n) {
            out.push_back(TotalOrder(seq));
            return;
        }
        if (barred_used < n) {
            seq.push_back(bar(barred_used + 1));
            self(self, barred_used + 1, unbarred_used);
            seq.pop_back();
        }
        if (unbarred_used < n) {
            seq.push_back(unb(unbarred_used + 1));
            self(self, barred_used, unbarred_used + 1);
            seq.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// At most one barred letter strictly between consecutive unbarred letters.
/// Prefixes and suffixes of the sequence are unconstrained.
inline bool is_unbarred_tight(const TotalOrder& o) {
    for (int v = 1; v < o.n(); ++v)
        if (o.rank(unb(v + 1)) - o.rank(unb(v)) > 2) return false;
    return true;
}

/// At most one unbarred letter strictly between consecutive barred letters.
inline bool is_barred_tight(const TotalOrder& o) {
    for (int v = 1; v < o.n(); ++v)
        if (o.rank(bar(v + 1)) - o.rank(bar(v)) > 2) return false;
    return true;
}

/// A transposition of one adjacent (unbarred, barred) pair of a total order.
/// `unbarred_first_in_source` records which side the source order puts first.
struct SwitchStep {
    Letter unbarred;
    Letter barred;
    bool unbarred_first_in_source = true;
    friend bool operator==(const SwitchStep&, const SwitchStep&) = default;
};

/// The order obtained by transposing the step's pair, which must be adjacent
/// in `o` with the orientation the step claims.
inline TotalOrder apply_step(const TotalOrder& o, const SwitchStep& step) {
    const int pu = o.rank(step.unbarred);
    const int pb = o.rank(step.barred);
    if (pu - pb != 1 && pb - pu != 1)
        throw std::invalid_argument("apply_step: pair is not adjacent in the order");
    if ((pu < pb) != step.unbarred_first_in_source)
        throw std::invalid_argument("apply_step: order does not match the step's source side");
    std::vector<Letter> seq = o.letters();
    std::swap(seq[static_cast<std::size_t>(pu)], seq[static_cast<std::size_t>(pb)]);
    return TotalOrder(std::move(seq));
}

/// Deterministic sequence of adjacent mixed-pair transpositions carrying
/// `from` to `to`: an insertion sort of `from` by rank in `to`. Whenever two
/// letters trade places they are one barred and one unbarred, because both
/// chains already agree between the two orders.
inline std::vector<SwitchStep> adjacent_switch_path(const TotalOrder& from, const TotalOrder& to) {
    if (from.n() != to.n())
        throw std::invalid_argument("adjacent_switch_path: orders have different n");
    std::vector<Letter> seq = from.letters();
    std::vector<SwitchStep> steps;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        for (std::size_t j = i; j > 0 && to.rank(seq[j - 1]) > to.rank(seq[j]); --j) {
            const Letter first = seq[j - 1];
            const Letter second = seq[j];
            if (first.barred == second.barred)
                throw std::logic_error("adjacent_switch_path: chains out of agreement");
            steps.push_back({first.barred ? second : first,
                             first.barred ? first : second,
                             !first.barred});
            std::swap(seq[j - 1], seq[j]);
        }
    }
    return steps;
}

}  // namespace kronhook
