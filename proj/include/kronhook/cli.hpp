#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kronhook/conversion.hpp"
#include "kronhook/io.hpp"
#include "kronhook/kronecker.hpp"
#include "kronhook/random.hpp"
#include "kronhook/words.hpp"

namespace kronhook::cli {

namespace detail {

inline unsigned sweep_threads() {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("KRONHOOK_THREADS")) {
        const long requested = std::strtol(env, nullptr, 10);
        if (requested >= 1) threads = std::min<unsigned>(threads, static_cast<unsigned>(requested));
    }
    return threads;
}

/// Aliases take the alphabet size from the data; explicit lists only need to
/// cover it.
inline TotalOrder resolve_order(const std::string& text, int min_n) {
    const int hint = std::max(1, min_n);
    if (text == "natural" || text == "smallbar") return parse_order(text, hint);
    TotalOrder order = parse_order(text);
    if (order.n() < min_n)
        throw std::invalid_argument("order covers fewer values than the input needs");
    return order;
}

inline std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::vector<std::vector<Letter>> parse_rows(const std::string& text) {
    std::vector<std::vector<Letter>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row_in(line);
        std::vector<Letter> row;
        std::string tok;
        while (row_in >> tok) row.push_back(parse_letter(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

inline ColoredTableau load_tableau(const std::string& path, const std::string& from_order) {
    const std::string text = read_input(path);
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return tableau_from_json(nlohmann::json::parse(text));
    auto rows = parse_rows(text);
    int max_value = 1;
    for (const auto& row : rows)
        for (const Letter& l : row) max_value = std::max(max_value, l.value);
    const TotalOrder order = resolve_order(from_order, max_value);
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return validate(Partition(std::move(parts)), std::move(rows), order);
}

struct ComputeArgs {
    std::string lambda, nu;
    int d = 0;
    bool oracle = false;
    bool witnesses = false;
    int witness_cap = 10;
    bool json = false;
};

inline int run_compute(const ComputeArgs& a, std::ostream& out) {
    const Partition lambda = parse_partition(a.lambda);
    const Partition nu = parse_partition(a.nu);
    if (a.json) {
        const CoefficientReport report =
            make_report(lambda, a.d, nu, a.witnesses ? a.witness_cap : 0);
        out << to_json(report).dump(2) << '\n';
        return report.ok() ? 0 : 1;
    }
    const CornerSplit split = corner_split(lambda, a.d, nu, a.witnesses ? a.witness_cap : 0);
    out << split.minus << '\n';
    int status = 0;
    if (a.oracle) {
        const long long g = kron_oracle(lambda, hook_mu(lambda.sum(), a.d), nu);
        out << "oracle " << g << '\n';
        if (g != split.minus) status = 1;
    }
    if (a.witnesses)
        for (const ColoredTableau& w : split.witnesses) out << '\n' << tableau_text(w) << '\n';
    return status;
}

struct TableArgs {
    int n = 0;
    std::string format = "tsv";
};

inline int run_table(const TableArgs& a, std::ostream& out) {
    if (a.n < 1) throw std::invalid_argument("table: --n must be positive");
    const auto shapes = partitions_of(a.n);
    if (a.format == "tsv") {
        out << "lambda\td\tnu\tg\n";
        for (const Partition& lambda : shapes)
            for (int d = 0; d < a.n; ++d)
                for (const Partition& nu : shapes)
                    out << to_string(lambda) << '\t' << d << '\t' << to_string(nu) << '\t'
                        << kron_hook(lambda, d, nu) << '\n';
        return 0;
    }
    if (a.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const Partition& lambda : shapes)
            for (int d = 0; d < a.n; ++d)
                for (const Partition& nu : shapes)
                    rows.push_back(nlohmann::json{{"lambda", to_json(lambda)},
                                                  {"d", d},
                                                  {"nu", to_json(nu)},
                                                  {"g", kron_hook(lambda, d, nu)}});
        out << rows.dump(2) << '\n';
        return 0;
    }
    throw CLI::ValidationError("--format must be tsv or json");
}

struct EnumerateArgs {
    std::string shape, content, order = "natural";
    int color = 0;
    bool ballot = false;
    bool json = false;
};

inline int run_enumerate(const EnumerateArgs& a, std::ostream& out) {
    const Partition shape = parse_partition(a.shape);
    const Partition content = parse_partition(a.content);
    const TotalOrder order = resolve_order(a.order, content.rows());
    EnumerateOptions opts;
    opts.ballot_word = a.ballot;
    if (a.json) {
        nlohmann::json arr = nlohmann::json::array();
        enumerate_tableaux(shape, content, a.color, order,
                           [&](const ColoredTableau& t) {
                               arr.push_back(to_json(t));
                               return true;
                           },
                           opts);
        out << arr.dump(2) << '\n';
        return 0;
    }
    bool first = true;
    enumerate_tableaux(shape, content, a.color, order,
                       [&](const ColoredTableau& t) {
                           if (!first) out << '\n';
                           first = false;
                           out << tableau_text(t) << '\n';
                           return true;
                       },
                       opts);
    return 0;
}

struct ConvertArgs {
    std::string input, to, from = "natural";
    bool trace = false;
    bool json = false;
};

inline int run_convert(const ConvertArgs& a, std::ostream& out) {
    const ColoredTableau t = load_tableau(a.input, a.from);
    const TotalOrder target = resolve_order(a.to, t.order.n());
    if (a.trace) {
        const auto stages = convert_trace(t, target);
        if (a.json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const ColoredTableau& stage : stages) arr.push_back(to_json(stage));
            out << arr.dump(2) << '\n';
            return 0;
        }
        for (std::size_t i = 0; i < stages.size(); ++i) {
            if (i) out << '\n';
            out << "order: " << to_string(stages[i].order) << '\n'
                << tableau_text(stages[i]) << '\n';
        }
        return 0;
    }
    const ColoredTableau converted = convert(t, target);
    if (a.json)
        out << to_json(converted).dump(2) << '\n';
    else
        out << tableau_text(converted) << '\n';
    return 0;
}

struct VerifyArgs {
    int n = 0;
    int d_min = -1;
    int d_max = -1;
    int paths = 0;
    unsigned long long seed = 0;
};

inline int run_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.n < 1) throw std::invalid_argument("verify: --n must be positive");
    std::optional<std::pair<int, int>> d_range;
    if (a.d_min >= 0 || a.d_max >= 0)
        d_range = std::make_pair(a.d_min >= 0 ? a.d_min : 0, a.d_max >= 0 ? a.d_max : a.n - 1);
    const auto reports = verify_sweep(a.n, d_range, sweep_threads());
    long long mismatches = 0;
    for (const CoefficientReport& r : reports) {
        if (r.ok()) continue;
        ++mismatches;
        out << "mismatch lambda=" << to_string(r.lambda) << " d=" << r.d
            << " nu=" << to_string(r.nu) << " theorem=" << r.theorem_count
            << " plus=" << r.plus_count << " sum=" << r.sum_count
            << " oracle_g_d=" << r.oracle_g_d << " oracle_g_dm1=" << r.oracle_g_dm1 << '\n';
    }
    out << "verify n=" << a.n << ": " << reports.size() << " reports, " << mismatches
        << " mismatches\n";

    long long path_mismatches = 0;
    if (a.paths > 0) {
        std::mt19937_64 rng(a.seed);
        const auto orders = all_orders(a.n);
        for (int trial = 0; trial < a.paths; ++trial) {
            const int m = std::uniform_int_distribution<int>(1, 8)(rng);
            const auto shapes = partitions_of(m);
            const Partition& shape =
                shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
            const TotalOrder& from =
                orders[std::uniform_int_distribution<std::size_t>(0, orders.size() - 1)(rng)];
            const TotalOrder& to =
                orders[std::uniform_int_distribution<std::size_t>(0, orders.size() - 1)(rng)];
            const ColoredTableau t = random_tableau(shape, from, rng);
            const ColoredTableau a1 = convert_along(t, random_switch_path(from, to, rng));
            const ColoredTableau a2 = convert_along(t, random_switch_path(from, to, rng));
            if (!(a1 == a2) || !(a1 == convert(t, to))) ++path_mismatches;
        }
        out << "path-independence n=" << a.n << ": " << a.paths << " trials, " << path_mismatches
            << " mismatches\n";
    }
    return (mismatches + path_mismatches) ? 1 : 0;
}

}  // namespace detail

/// Entry point shared by the binary and the tests. Returns 0 on success,
/// 1 on a verification mismatch, 2 on a usage or input error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Kronecker coefficients for one hook shape"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output_path;
    app.add_option("--output", output_path, "write the output to a file instead of stdout");

    detail::ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand(
        "compute", "count g(lambda, (n-d,1^d), nu) by tableau enumeration");
    compute->add_option("--lambda", compute_args.lambda, "total content partition")->required();
    compute->add_option("--nu", compute_args.nu, "shape partition")->required();
    compute->add_option("--d", compute_args.d, "hook column length d")->required();
    compute->add_flag("--oracle", compute_args.oracle, "also evaluate the character oracle");
    compute->add_flag("--witnesses", compute_args.witnesses, "print witness tableaux");
    compute->add_option("--witness-cap", compute_args.witness_cap, "cap on printed witnesses");
    compute->add_flag("--json", compute_args.json, "emit a JSON report");

    detail::TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "tabulate coefficients for all (lambda, d, nu)");
    table->add_option("--n", table_args.n, "size of the partitions")->required();
    table->add_option("--format", table_args.format, "tsv or json");

    detail::EnumerateArgs enum_args;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list colored tableaux");
    enumerate->add_option("--shape", enum_args.shape, "shape partition")->required();
    enumerate->add_option("--content", enum_args.content, "total content partition")->required();
    enumerate->add_option("--color", enum_args.color, "number of barred letters")->required();
    enumerate->add_option("--order", enum_args.order, "total order (alias or letter list)");
    enumerate->add_flag("--ballot", enum_args.ballot, "only tableaux with ballot total word");
    enumerate->add_flag("--json", enum_args.json, "emit a JSON array");

    detail::ConvertArgs convert_args;
    CLI::App* convert = app.add_subcommand("convert", "convert a tableau to another total order");
    convert->add_option("--input", convert_args.input, "tableau file, or - for stdin")->required();
    convert->add_option("--to", convert_args.to, "target order (alias or letter list)")->required();
    convert->add_option("--from", convert_args.from,
                        "source order for text input (JSON input carries its own)");
    convert->add_flag("--trace", convert_args.trace, "print every intermediate tableau");
    convert->add_flag("--json", convert_args.json, "emit JSON");

    detail::VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check the counts against the oracle");
    verify->add_option("--n", verify_args.n, "size of the partitions")->required();
    verify->add_option("--d-min", verify_args.d_min, "lowest d to check");
    verify->add_option("--d-max", verify_args.d_max, "highest d to check");
    verify->add_option("--paths", verify_args.paths, "random conversion path-independence trials");
    verify->add_option("--seed", verify_args.seed, "seed for the randomized trials");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        // Output is staged so a failure part way through a sweep never
        // leaves a partial table behind.
        std::ostringstream staged;
        int status = 2;
        if (compute->parsed())
            status = detail::run_compute(compute_args, staged);
        else if (table->parsed())
            status = detail::run_table(table_args, staged);
        else if (enumerate->parsed())
            status = detail::run_enumerate(enum_args, staged);
        else if (convert->parsed())
            status = detail::run_convert(convert_args, staged);
        else if (verify->parsed())
            status = detail::run_verify(verify_args, staged);
        else {
            err << "no subcommand given\n";
            return 2;
        }
        if (!output_path.empty()) {
            std::ofstream file(output_path);
            if (!file) throw std::invalid_argument("cannot open output file '" + output_path + "'");
            file << staged.str();
        } else {
            out << staged.str();
        }
        return status;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const tableau_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace kronhook::cli
