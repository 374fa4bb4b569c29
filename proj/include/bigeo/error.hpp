#pragma once

/**
 * @file error.hpp
 * @brief Error categories raised by the bigeometric library.
 *
 * Every failure is a `bigeo::error` carrying an `error_kind`. Each kind also
 * has its own exception type so callers can catch exactly the category they
 * care about (`catch (const bigeo::degenerate_nodes&)`).
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace bigeo {

enum class error_kind {
    parse,
    domain,
    division_by_geometric_zero,
    evaluation,
    index_out_of_range,
    invalid_p,
    dimension_mismatch,
    degenerate_nodes,
};

constexpr std::string_view to_string(error_kind kind) noexcept {
    switch (kind) {
    case error_kind::parse: return "parse";
    case error_kind::domain: return "domain";
    case error_kind::division_by_geometric_zero: return "division-by-geometric-zero";
    case error_kind::evaluation: return "evaluation";
    case error_kind::index_out_of_range: return "index-out-of-range";
    case error_kind::invalid_p: return "invalid-p";
    case error_kind::dimension_mismatch: return "dimension-mismatch";
    case error_kind::degenerate_nodes: return "degenerate-nodes";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(error_kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    error_kind kind() const noexcept { return kind_; }

private:
    error_kind kind_;
};

template <error_kind Kind>
class basic_error : public error {
public:
    explicit basic_error(const std::string& what) : error(Kind, what) {}
};

using parse_error = basic_error<error_kind::parse>;
using domain_error = basic_error<error_kind::domain>;
using division_by_geometric_zero = basic_error<error_kind::division_by_geometric_zero>;
using evaluation_error = basic_error<error_kind::evaluation>;
using index_out_of_range = basic_error<error_kind::index_out_of_range>;
using invalid_p = basic_error<error_kind::invalid_p>;
using dimension_mismatch = basic_error<error_kind::dimension_mismatch>;
using degenerate_nodes = basic_error<error_kind::degenerate_nodes>;

} // namespace bigeo
