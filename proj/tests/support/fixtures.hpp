#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "bigeo/hermite.hpp"

namespace bigeo::test {

/// x = {e, e^2}, f = x^2, f' = 2x
inline hermite_data square_data() {
    const double e = std::numbers::e;
    std::vector<node_record> rows{{e, e * e, 2 * e, {}}, {e * e, e * e * e * e, 2 * e * e, {}}};
    return hermite_data::from_records(rows);
}

/// x = {3, 6, 12, 24}, f = ln x with its exact bigeometric derivative.
inline hermite_data ln_data() {
    std::vector<hermite_node> nodes;
    for (double x : {3.0, 6.0, 12.0, 24.0})
        nodes.push_back({geo_real::from_positive(x), geo_real::from_positive(std::log(x)),
                         geo_real::from_log(1.0 / std::log(x))});
    return hermite_data(nodes);
}

/// 4-decimal divided-difference columns 1..7 for ln on 3, 6, 12, 24.
inline const std::array<std::vector<double>, 7>& ln_table_4dp() {
    static const std::array<std::vector<double>, 7> cols{{
        {2.4849, 2.0254, 1.7474, 1.6028, 1.4954, 1.4261, 1.3698},
        {0.7445, 0.8082, 0.8828, 0.9048, 0.9338, 0.9435},
        {1.1257, 1.0658, 1.0362, 1.0230, 1.0150},
        {0.9613, 0.9799, 0.9908, 0.9944},
        {1.0139, 1.0053, 1.0026},
        {0.9959, 0.9987},
        {1.0014},
    }};
    return cols;
}

} // namespace bigeo::test
