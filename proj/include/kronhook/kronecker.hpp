#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "kronhook/order.hpp"
#include "kronhook/partition.hpp"
#include "kronhook/tableau.hpp"

namespace kronhook {

inline long long factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: out of 64-bit range");
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Centralizer order of a permutation of cycle type rho: prod i^{m_i} m_i!.
inline long long centralizer_order(const Partition& rho) {
    long long z = 1;
    int run_value = 0, run_length = 0;
    auto flush = [&]() {
        for (int j = 1; j <= run_length; ++j) z *= static_cast<long long>(run_value) * j;
    };
    for (int part : rho.parts()) {
        if (part == run_value) {
            ++run_length;
        } else {
            flush();
            run_value = part;
            run_length = 1;
        }
    }
    flush();
    return z;
}

namespace detail {

// Border-strip recursion on the beta-set (first-column hook lengths).
// Removing a strip of size k moves one bead down k positions on the abacus;
// the sign counts the beads it jumps over.
inline long long mn_recurse(const std::vector<int>& lambda, const std::vector<int>& rho,
                            std::size_t idx,
                            std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    if (idx == rho.size()) return lambda.empty() ? 1 : 0;
    const auto key = std::make_pair(lambda, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int k = rho[idx];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.begin(), lambda.end());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] += len - 1 - i;

    long long total = 0;
    for (int i = 0; i < len; ++i) {
        const int target = beta[static_cast<std::size_t>(i)] - k;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = i + 1; j < len; ++j) {
            const int b = beta[static_cast<std::size_t>(j)];
            if (b == target) occupied = true;
            if (b > target) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> next_beta = beta;
        next_beta[static_cast<std::size_t>(i)] = target;
        std::sort(next_beta.rbegin(), next_beta.rend());
        std::vector<int> next_lambda;
        for (int j = 0; j < len; ++j) {
            const int part = next_beta[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) next_lambda.push_back(part);
        }
        const long long sign = (jumped % 2 == 0) ? 1 : -1;
        total += sign * mn_recurse(next_lambda, rho, idx + 1, memo);
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace detail

/// Irreducible character value of the symmetric group, chi_lambda(rho), by
/// the Murnaghan-Nakayama rule.
inline long long mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.sum() != rho.sum())
        throw std::invalid_argument("mn_character: partitions have different sizes");
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    return detail::mn_recurse(lambda.parts(), rho.parts(), 0, memo);
}

/// Full character table of S_n, rows and columns both indexed by
/// partitions_of(n) in reverse lexicographic order. Built once and cached.
class CharacterTable {
public:
    explicit CharacterTable(int n) : n_(n), classes_(partitions_of(n)) {
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            index_.emplace(classes_[i].parts(), static_cast<int>(i));
            z_.push_back(centralizer_order(classes_[i]));
            class_size_.push_back(factorial(n) / z_.back());
        }
        chi_.assign(classes_.size(), std::vector<long long>(classes_.size(), 0));
        for (std::size_t ri = 0; ri < classes_.size(); ++ri) {
            std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
            for (std::size_t li = 0; li < classes_.size(); ++li)
                chi_[li][ri] =
                    detail::mn_recurse(classes_[li].parts(), classes_[ri].parts(), 0, memo);
        }
    }

    int n() const { return n_; }
    const std::vector<Partition>& classes() const { return classes_; }
    int index(const Partition& p) const {
        auto it = index_.find(p.parts());
        if (it == index_.end()) throw std::invalid_argument("CharacterTable: not a partition of n");
        return it->second;
    }
    long long chi(int lambda_idx, int rho_idx) const {
        return chi_[static_cast<std::size_t>(lambda_idx)][static_cast<std::size_t>(rho_idx)];
    }
    long long chi(const Partition& lambda, const Partition& rho) const {
        return chi(index(lambda), index(rho));
    }
    long long z(int rho_idx) const { return z_[static_cast<std::size_t>(rho_idx)]; }
    long long class_size(int rho_idx) const { return class_size_[static_cast<std::size_t>(rho_idx)]; }

    static const CharacterTable& cached(int n) {
        static std::mutex mutex;
        static std::map<int, std::unique_ptr<CharacterTable>> tables;
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = tables[n];
        if (!slot) slot = std::make_unique<CharacterTable>(n);
        return *slot;
    }

private:
    int n_;
    std::vector<Partition> classes_;
    std::map<std::vector<int>, int> index_;
    std::vector<long long> z_;
    std::vector<long long> class_size_;
    std::vector<std::vector<long long>> chi_;
};

/// Kronecker coefficient by the class-sum formula:
/// sum over classes of chi_lambda chi_mu chi_nu / z_rho. Exact integer
/// arithmetic throughout; a non-integer or negative total is reported as an
/// internal failure.
inline long long kron_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int n = lambda.sum();
    if (mu.sum() != n || nu.sum() != n)
        throw std::invalid_argument("kron_oracle: partitions have different sizes");
    if (n == 0) return 1;
    const CharacterTable& table = CharacterTable::cached(n);
    const int li = table.index(lambda), mi = table.index(mu), ni = table.index(nu);
    __int128 acc = 0;
    for (std::size_t ri = 0; ri < table.classes().size(); ++ri) {
        const int r = static_cast<int>(ri);
        acc += static_cast<__int128>(table.class_size(r)) * table.chi(li, r) * table.chi(mi, r) *
               table.chi(ni, r);
    }
    const __int128 order = factorial(n);
    if (acc % order != 0 || acc < 0)
        throw std::logic_error("kron_oracle: class sum is not a nonnegative multiple of n!");
    return static_cast<long long>(acc / order);
}

namespace detail {

inline void check_hook_args(const Partition& lambda, int d, const Partition& nu) {
    const int n = lambda.sum();
    if (nu.sum() != n) throw std::invalid_argument("hook count: |lambda| != |nu|");
    if (n < 1) throw std::invalid_argument("hook count: empty partitions");
    if (d < 0 || d > n - 1) throw std::invalid_argument("hook count: d must lie in [0, n-1]");
}

}  // namespace detail

/// Counts of natural-order colored tableaux of shape nu, total content
/// lambda, total color d, and ballot total word, split by whether the
/// southwest corner is barred (plus) or unbarred (minus).
struct CornerSplit {
    long long plus = 0;
    long long minus = 0;
    std::vector<ColoredTableau> witnesses;  // unbarred-corner members, up to the cap
};

inline CornerSplit corner_split(const Partition& lambda, int d, const Partition& nu,
                                int witness_cap = 0) {
    detail::check_hook_args(lambda, d, nu);
    const int alphabet = std::max(1, lambda.rows());
    CornerSplit split;
    EnumerateOptions opts;
    opts.ballot_word = true;
    enumerate_tableaux(nu, lambda, d, natural_order(alphabet),
                       [&](const ColoredTableau& t) {
                           if (t.rows.back().front().barred) {
                               ++split.plus;
                           } else {
                               ++split.minus;
                               if (static_cast<int>(split.witnesses.size()) < witness_cap)
                                   split.witnesses.push_back(t);
                           }
                           return true;
                       },
                       opts);
    return split;
}

/// The Kronecker coefficient g(lambda, (n-d, 1^d), nu): the number of
/// natural-order colored tableaux of shape nu, total content lambda, total
/// color d whose total word is a ballot sequence and whose southwest corner
/// is unbarred.
inline long long kron_hook(const Partition& lambda, int d, const Partition& nu) {
    return corner_split(lambda, d, nu).minus;
}

/// The small-bar-order ballot count: g at d plus g at d-1, with g at -1
/// taken to be zero.
inline long long kron_sum(const Partition& lambda, int d, const Partition& nu) {
    detail::check_hook_args(lambda, d, nu);
    const int alphabet = std::max(1, lambda.rows());
    long long count = 0;
    EnumerateOptions opts;
    opts.ballot_word = true;
    enumerate_tableaux(nu, lambda, d, small_bar_order(alphabet),
                       [&](const ColoredTableau&) {
                           ++count;
                           return true;
                       },
                       opts);
    return count;
}

/// One verification record for a (lambda, d, nu) triple.
struct CoefficientReport {
    Partition lambda;
    int d = 0;
    Partition nu;
    long long theorem_count = 0;  // unbarred-corner ballot tableaux, natural order
    long long plus_count = 0;     // barred-corner ballot tableaux, natural order
    long long sum_count = 0;      // ballot tableaux, small bar order
    long long oracle_g_d = 0;
    long long oracle_g_dm1 = 0;
    std::vector<ColoredTableau> witnesses;

    bool ok() const {
        return theorem_count == oracle_g_d && sum_count == oracle_g_d + oracle_g_dm1 &&
               theorem_count + plus_count == sum_count;
    }
};

inline CoefficientReport make_report(const Partition& lambda, int d, const Partition& nu,
                                     int witness_cap = 0) {
    detail::check_hook_args(lambda, d, nu);
    const int n = lambda.sum();
    CoefficientReport report;
    report.lambda = lambda;
    report.d = d;
    report.nu = nu;
    CornerSplit split = corner_split(lambda, d, nu, witness_cap);
    report.theorem_count = split.minus;
    report.plus_count = split.plus;
    report.witnesses = std::move(split.witnesses);
    report.sum_count = kron_sum(lambda, d, nu);
    report.oracle_g_d = kron_oracle(lambda, hook_mu(n, d), nu);
    report.oracle_g_dm1 = d == 0 ? 0 : kron_oracle(lambda, hook_mu(n, d - 1), nu);
    return report;
}

/// Reports for every lambda, nu of n and every d in the range (full range by
/// default). Work items run independently; the result order is always
/// (lambda, nu, d) in reverse lexicographic partition order.
inline std::vector<CoefficientReport> verify_sweep(
    int n, std::optional<std::pair<int, int>> d_range = std::nullopt, unsigned threads = 1,
    int witness_cap = 0) {
    if (n < 1) throw std::invalid_argument("verify_sweep: n must be positive");
    if (n > 8) throw std::invalid_argument("verify_sweep: guarded to n <= 8");
    int d_lo = 0, d_hi = n - 1;
    if (d_range) {
        d_lo = std::max(d_lo, d_range->first);
        d_hi = std::min(d_hi, d_range->second);
    }
    const auto shapes = partitions_of(n);
    std::vector<std::tuple<const Partition*, const Partition*, int>> items;
    for (const Partition& lambda : shapes)
        for (const Partition& nu : shapes)
            for (int d = d_lo; d <= d_hi; ++d) items.emplace_back(&lambda, &nu, d);

    std::vector<CoefficientReport> reports(items.size());
    CharacterTable::cached(n);  // build once before workers start
    auto work = [&](std::size_t i) {
        const auto& [lambda, nu, d] = items[i];
        reports[i] = make_report(*lambda, d, *nu, witness_cap);
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned count = std::min<unsigned>(threads, std::max<std::size_t>(items.size(), 1));
        for (unsigned t = 0; t < count; ++t)
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& t : pool) t.join();
    }
    return reports;
}

}  // namespace kronhook
