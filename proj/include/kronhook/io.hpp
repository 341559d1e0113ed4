#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "kronhook/kronecker.hpp"
#include "kronhook/order.hpp"
#include "kronhook/partition.hpp"
#include "kronhook/tableau.hpp"
#include "kronhook/words.hpp"

namespace kronhook {

/// "4,3,3,3,1"; the empty partition prints as "-".
inline std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

inline Partition parse_partition(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty() || s == "-") return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) throw std::invalid_argument("parse_partition: empty part in '" + text + "'");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw std::invalid_argument("parse_partition: bad part '" + tok + "'");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

/// Bars print as a trailing apostrophe: 2' is the barred 2.
inline std::string to_string(const Letter& l) {
    return std::to_string(l.value) + (l.barred ? "'" : "");
}

inline Letter parse_letter(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("parse_letter: empty token");
    std::string digits = tok;
    bool barred = false;
    if (digits.back() == '\'') {
        barred = true;
        digits.pop_back();
    }
    if (digits.empty()) throw std::invalid_argument("parse_letter: bad token '" + tok + "'");
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(digits, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != digits.size() || value < 1)
        throw std::invalid_argument("parse_letter: bad token '" + tok + "'");
    return Letter{value, barred};
}

/// Space-separated letters: "1' 1 2' 2 3' 3".
inline std::string to_string(const TotalOrder& o) {
    std::string out;
    for (std::size_t i = 0; i < o.letters().size(); ++i) {
        if (i) out += ' ';
        out += to_string(o.letters()[i]);
    }
    return out;
}

/// Accepts the aliases "natural" and "smallbar" (which need n_hint) or an
/// explicit letter list.
inline TotalOrder parse_order(const std::string& text, int n_hint = -1) {
    std::istringstream in(text);
    std::string tok;
    std::vector<std::string> tokens;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.size() == 1 && (tokens[0] == "natural" || tokens[0] == "smallbar")) {
        if (n_hint < 1)
            throw std::invalid_argument("parse_order: alias '" + tokens[0] + "' needs an alphabet size");
        return tokens[0] == "natural" ? natural_order(n_hint) : small_bar_order(n_hint);
    }
    std::vector<Letter> letters;
    letters.reserve(tokens.size());
    for (const std::string& t : tokens) letters.push_back(parse_letter(t));
    TotalOrder order(std::move(letters));
    if (n_hint > 0 && order.n() != n_hint)
        throw std::invalid_argument("parse_order: order has the wrong alphabet size");
    return order;
}

/// One line per row, entries space-separated: "1' 1 1 2'".
inline std::string tableau_text(const ColoredTableau& t) {
    std::string out;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r) out += '\n';
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c) out += ' ';
            out += to_string(t.rows[r][c]);
        }
    }
    return out;
}

/// Parses the row lines of a tableau (shape inferred) and validates the
/// filling against the given order.
inline ColoredTableau parse_tableau_text(const std::string& text, const TotalOrder& order) {
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
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return validate(Partition(std::move(parts)), std::move(rows), order);
}

/// Digit string when every letter is a single digit, comma-separated
/// otherwise; the empty word prints as "-".
inline std::string to_string(const Word& w) {
    if (w.empty()) return "-";
    bool digits = true;
    for (int x : w)
        if (x > 9) digits = false;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

inline nlohmann::json to_json(const Partition& p) { return nlohmann::json(p.parts()); }

inline nlohmann::json to_json(const ColoredTableau& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json line = nlohmann::json::array();
        for (const Letter& l : row) line.push_back(to_string(l));
        rows.push_back(std::move(line));
    }
    return nlohmann::json{
        {"shape", to_json(t.shape)}, {"rows", std::move(rows)}, {"order", to_string(t.order)}};
}

inline ColoredTableau tableau_from_json(const nlohmann::json& j) {
    const TotalOrder order = parse_order(j.at("order").get<std::string>());
    std::vector<std::vector<Letter>> rows;
    for (const auto& line : j.at("rows")) {
        std::vector<Letter> row;
        for (const auto& tok : line) row.push_back(parse_letter(tok.get<std::string>()));
        rows.push_back(std::move(row));
    }
    Partition shape(j.at("shape").get<std::vector<int>>());
    return validate(shape, std::move(rows), order);
}

inline nlohmann::json to_json(const CoefficientReport& r) {
    nlohmann::json j{{"lambda", to_json(r.lambda)},
                     {"d", r.d},
                     {"nu", to_json(r.nu)},
                     {"theorem_count", r.theorem_count},
                     {"plus_count", r.plus_count},
                     {"sum_count", r.sum_count},
                     {"oracle_g_d", r.oracle_g_d},
                     {"oracle_g_dm1", r.oracle_g_dm1},
                     {"ok", r.ok()}};
    if (!r.witnesses.empty()) {
        nlohmann::json ws = nlohmann::json::array();
        for (const ColoredTableau& w : r.witnesses) ws.push_back(to_json(w));
        j["witnesses"] = std::move(ws);
    }
    return j;
}

}  // namespace kronhook
