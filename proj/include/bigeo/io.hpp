#pragma once

/**
 * @file io.hpp
 * @brief Flat-file formats used by the command-line front end.
 *
 * Node files are CSV with a header naming `x`, `f` and optionally one of
 * `fprime` or `dgf` per row (`#` starts a comment line), or JSON: an array of
 * objects with the same field names, optionally wrapped as {"nodes": [...]}.
 *
 * Divided-difference tables are written as CSV with full-precision logs so
 * that reading a table back reproduces it exactly:
 *
 *   order,index,z,value,log_value
 *
 * where `z` is the left abscissa z_index and `value` is the positive real.
 */

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bigeo/error.hpp"
#include "bigeo/geo_real.hpp"
#include "bigeo/hermite.hpp"
#include "bigeo/matrix.hpp"
#include "bigeo/sequence.hpp"

namespace bigeo::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view line, char sep = ',') {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto at = line.find(sep, start);
        out.push_back(trim(line.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
        if (at == std::string_view::npos) return out;
        start = at + 1;
    }
}

inline bool skippable(std::string_view line) {
    line = trim(line);
    return line.empty() || line.front() == '#';
}

inline std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

} // namespace detail

/// Strict decimal parse of the whole field.
inline double parse_real(std::string_view field, std::size_t line_no = 0) {
    field = detail::trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
        throw parse_error((line_no ? detail::where(line_no) : std::string()) + "malformed number '" +
                          std::string(field) + "'");
    if (std::isinf(v) || std::isnan(v))
        throw parse_error((line_no ? detail::where(line_no) : std::string()) + "number must be finite");
    return v;
}

inline double parse_positive(std::string_view field, std::size_t line_no, std::string_view what) {
    const double v = parse_real(field, line_no);
    if (!(v > 0))
        throw parse_error(detail::where(line_no) + std::string(what) + " must be positive, got " + std::string(field));
    return v;
}

inline std::vector<node_record> parse_node_csv(std::istream& in) {
    std::vector<node_record> out;
    std::map<std::string, std::size_t, std::less<>> columns;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::skippable(line)) continue;
        const auto fields = detail::split(line);
        if (columns.empty()) {
            for (std::size_t c = 0; c < fields.size(); ++c) {
                const std::string name(fields[c]);
                if (name != "x" && name != "f" && name != "fprime" && name != "dgf")
                    throw parse_error(detail::where(line_no) + "unknown column '" + name + "'");
                if (!columns.emplace(name, c).second)
                    throw parse_error(detail::where(line_no) + "duplicate column '" + name + "'");
            }
            if (!columns.contains("x") || !columns.contains("f"))
                throw parse_error(detail::where(line_no) + "header must name columns x and f");
            continue;
        }
        if (fields.size() != columns.size())
            throw parse_error(detail::where(line_no) + "expected " + std::to_string(columns.size()) + " fields, got " +
                              std::to_string(fields.size()));
        node_record r;
        r.x = parse_positive(fields[columns.at("x")], line_no, "x");
        r.f = parse_positive(fields[columns.at("f")], line_no, "f");
        if (auto it = columns.find("fprime"); it != columns.end() && !fields[it->second].empty())
            r.fprime = parse_real(fields[it->second], line_no);
        if (auto it = columns.find("dgf"); it != columns.end() && !fields[it->second].empty())
            r.dgf = parse_positive(fields[it->second], line_no, "dgf");
        if (r.fprime && r.dgf) throw parse_error(detail::where(line_no) + "give either fprime or dgf, not both");
        out.push_back(r);
    }
    if (columns.empty()) throw parse_error("node file is empty");
    if (out.empty()) throw parse_error("node file has a header but no rows");
    return out;
}

inline std::vector<node_record> parse_node_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("nodes")) doc = doc.at("nodes");
    if (!doc.is_array() || doc.empty()) throw parse_error("JSON node file must hold a non-empty array of nodes");
    std::vector<node_record> out;
    std::size_t idx = 0;
    for (const auto& item : doc) {
        ++idx;
        const std::string at = "node " + std::to_string(idx) + ": ";
        if (!item.is_object() || !item.contains("x") || !item.contains("f"))
            throw parse_error(at + "needs numeric fields x and f");
        auto number = [&](const char* key) {
            const auto& v = item.at(key);
            if (!v.is_number()) throw parse_error(at + "field " + key + " is not a number");
            return v.get<double>();
        };
        node_record r;
        r.x = number("x");
        r.f = number("f");
        if (!(r.x > 0) || !(r.f > 0)) throw parse_error(at + "x and f must be positive");
        if (item.contains("fprime") && !item.at("fprime").is_null()) r.fprime = number("fprime");
        if (item.contains("dgf") && !item.at("dgf").is_null()) {
            r.dgf = number("dgf");
            if (!(*r.dgf > 0)) throw parse_error(at + "dgf must be positive");
        }
        if (r.fprime && r.dgf) throw parse_error(at + "give either fprime or dgf, not both");
        out.push_back(r);
    }
    return out;
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return in;
}

/// JSON when the path ends in .json or the content starts with '[' or '{'; CSV otherwise.
inline std::vector<node_record> read_node_file(const std::string& path) {
    auto in = open_input(path);
    const bool json_ext = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    in >> std::ws;
    const int first = in.peek();
    if (json_ext || first == '[' || first == '{') return parse_node_json(in);
    return parse_node_csv(in);
}

/// Shortest decimal that reads back to the same double.
inline std::string format_exact(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline std::string format_sig(double v, int significant = 10) {
    std::ostringstream os;
    os << std::setprecision(significant) << v;
    return os.str();
}

inline std::string format_fixed(double v, int decimals = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << v;
    return os.str();
}

inline void write_table_csv(std::ostream& out, const divided_diff_table& table) {
    out << "order,index,z,value,log_value\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        for (std::size_t j = 0; j < table.columns[c].size(); ++j) {
            const auto v = table.columns[c][j];
            out << c << ',' << j << ',' << format_exact(table.z[j].to_positive()) << ','
                << format_exact(v.to_positive()) << ',' << format_exact(v.log_value()) << '\n';
        }
}

/// Inverse of `write_table_csv`; entries come back from their logs bit for bit.
inline divided_diff_table read_table_csv(std::istream& in) {
    divided_diff_table table;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::skippable(line)) continue;
        const auto fields = detail::split(line);
        if (!header) {
            if (fields.size() != 5 || fields[0] != "order")
                throw parse_error(detail::where(line_no) + "expected table header order,index,z,value,log_value");
            header = true;
            continue;
        }
        if (fields.size() != 5) throw parse_error(detail::where(line_no) + "expected 5 fields");
        const auto c = static_cast<std::size_t>(parse_real(fields[0], line_no));
        const auto j = static_cast<std::size_t>(parse_real(fields[1], line_no));
        if (c > table.columns.size() || (c == table.columns.size() && j != 0))
            throw parse_error(detail::where(line_no) + "table rows out of order");
        if (c == table.columns.size()) table.columns.emplace_back();
        if (j != table.columns[c].size()) throw parse_error(detail::where(line_no) + "table rows out of order");
        table.columns[c].push_back(geo_real::from_log(parse_real(fields[4], line_no)));
        if (c == 0) table.z.push_back(geo_real::from_positive(parse_positive(fields[2], line_no, "z")));
    }
    if (table.columns.empty()) throw parse_error("table file has no rows");
    return table;
}

/**
 * Staggered rendering: abscissae and values on even lines, each divided
 * difference between the two entries it came from.
 */
inline void write_table_text(std::ostream& out, const divided_diff_table& table, bool fixed_view) {
    const std::size_t rows = table.z.size();
    auto fmt = [&](double v) { return fixed_view ? format_fixed(v, 4) : format_sig(v, 10); };
    const std::size_t width = fixed_view ? 9 : 15;
    out << std::left << std::setw(static_cast<int>(width)) << "x";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << std::setw(static_cast<int>(width)) << (c == 0 ? std::string("f(x)") : "order " + std::to_string(c));
    out << '\n';
    for (std::size_t line = 0; line + 1 < 2 * rows; ++line) {
        std::string label = line % 2 == 0 ? fmt(table.z[line / 2].to_positive()) : "";
        out << std::setw(static_cast<int>(width)) << label;
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            // Column c entry j sits on text line 2j + c.
            std::string cell;
            if (line >= c && (line - c) % 2 == 0) {
                const std::size_t j = (line - c) / 2;
                if (j < table.columns[c].size()) cell = fmt(table.columns[c][j].to_positive());
            }
            out << std::setw(static_cast<int>(width)) << cell;
        }
        out << '\n';
    }
    out << std::right;
}

/// Rows of positive reals, one matrix row per line.
inline geo_matrix parse_matrix_csv(std::istream& in) {
    std::vector<std::vector<geo_real>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::skippable(line)) continue;
        auto& row = rows.emplace_back();
        for (auto f : detail::split(line)) row.push_back(geo_real::from_positive(parse_positive(f, line_no, "matrix entry")));
        if (row.size() != rows.front().size())
            throw dimension_mismatch(detail::where(line_no) + "ragged matrix row");
    }
    if (rows.empty()) throw parse_error("matrix file is empty");
    return geo_matrix::from_rows(rows);
}

/// Positive reals separated by commas, whitespace or newlines.
inline geo_sequence parse_sequence(std::istream& in) {
    std::vector<geo_real> terms;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::skippable(line)) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream words(line);
        std::string w;
        while (words >> w) terms.push_back(geo_real::from_positive(parse_positive(w, line_no, "sequence term")));
    }
    if (terms.empty()) throw parse_error("sequence file is empty");
    return geo_sequence(std::move(terms));
}

inline void write_values_csv(std::ostream& out, const std::vector<double>& xs, const std::vector<geo_real>& ps,
                             const std::vector<double>* reference = nullptr) {
    out << "x,p_G(x)" << (reference ? ",f(x)" : "") << '\n';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out << format_exact(xs[i]) << ',' << format_exact(ps[i].to_positive());
        if (reference) out << ',' << format_exact((*reference)[i]);
        out << '\n';
    }
}

/// Reads `x,p_G(x)[,f(x)]` rows; returns (x, value) pairs.
inline std::vector<std::pair<double, double>> parse_values_csv(std::istream& in) {
    std::vector<std::pair<double, double>> out;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::skippable(line)) continue;
        const auto fields = detail::split(line);
        if (!header) {
            header = true;
            if (fields.empty() || fields[0] != "x") throw parse_error(detail::where(line_no) + "expected header x,...");
            continue;
        }
        if (fields.size() < 2) throw parse_error(detail::where(line_no) + "expected at least 2 fields");
        out.emplace_back(parse_real(fields[0], line_no), parse_real(fields[1], line_no));
    }
    return out;
}

} // namespace bigeo::io
