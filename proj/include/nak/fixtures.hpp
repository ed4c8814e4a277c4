#pragma once

// Bundled example parameter sets. Free parameters are instantiated with small
// rationals: q = 2 for the three-generator example, a = 1 and b = 2 for the two
// four-generator examples, a = 1 for the rank-two skew-symmetric example.

#include <optional>
#include <string>
#include <vector>

#include "nak/io.hpp"

namespace nak::fixtures {

namespace detail {

inline Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
    Matrix m(rows.size(), rows.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const char* cell : row) m(r, c++) = parse_scalar(cell);
        ++r;
    }
    return m;
}

} // namespace detail

/// Three generators, one of them central; Omega = t1^2.
inline Fixture ex2_1() {
    Fixture f;
    f.name = "ex2.1";
    f.instantiations = {{"q", "2"}};
    f.params = Params(3, 1, detail::mat({{"1", "1", "1"}, {"1", "1", "2"}, {"1", "1/2", "1"}}),
                      detail::mat({{"0", "0", "0"}, {"0", "0", "1"}, {"0", "-1/2", "0"}}));
    f.expected = detail::mat({{"1", "0", "0"}, {"0", "1/2", "0"}, {"0", "0", "2"}});
    return f;
}

/// Four generators, s = 2, C_s = 0.
inline Fixture ex2_2() {
    Fixture f;
    f.name = "ex2.2";
    f.instantiations = {{"a", "1"}, {"b", "2"}};
    f.params = Params(4, 2,
                      detail::mat({{"1", "-1", "1/2", "-1"}, {"-1", "1", "1/2", "1"}, {"2", "2", "1", "2"}, {"-1", "1", "1/2", "1"}}),
                      detail::mat({{"0", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "0", "0"}, {"0", "-1", "0", "0"}}));
    // t1 -> b t1, t2 -> -b t2, t3 -> t3 / b^3, t4 -> -2ab t2 - b t4
    f.expected = detail::mat({{"2", "0", "0", "0"}, {"0", "-2", "0", "-4"}, {"0", "0", "1/8", "0"}, {"0", "0", "0", "-2"}});
    return f;
}

/// Four generators, s = 3, C_s skew-symmetric with det(I - C_3) = 1 + a^2.
inline Fixture ex2_3() {
    Fixture f;
    f.name = "ex2.3";
    f.instantiations = {{"a", "1"}, {"b", "2"}};
    f.params = Params(4, 3,
                      detail::mat({{"1", "-1", "1", "1/2"}, {"-1", "1", "-1", "1/2"}, {"1", "-1", "1", "1/2"}, {"2", "2", "2", "1"}}),
                      detail::mat({{"0", "0", "1", "0"}, {"0", "0", "0", "0"}, {"-1", "0", "0", "0"}, {"0", "0", "0", "0"}}));
    // with a = 1: (a^2 b - b)/(1 + a^2) = 0, 2ab/(1 + a^2) = 2
    f.expected = detail::mat({{"0", "0", "-2", "0"}, {"0", "2", "0", "0"}, {"2", "0", "0", "0"}, {"0", "0", "0", "1/8"}});
    return f;
}

/// q_ij = 1, s = n = 4, C the rank-two canonical form with a = 1.
inline Fixture ex2_4a() {
    Fixture f;
    f.name = "ex2.4a";
    f.instantiations = {{"a", "1"}};
    f.params = Params(4, 4, detail::mat({{"1", "1", "1", "1"}, {"1", "1", "1", "1"}, {"1", "1", "1", "1"}, {"1", "1", "1", "1"}}),
                      detail::mat({{"0", "1", "0", "0"}, {"-1", "0", "0", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}}));
    return f;
}

inline std::vector<Fixture> all() { return {ex2_1(), ex2_2(), ex2_3(), ex2_4a()}; }

inline std::optional<Fixture> by_name(const std::string& name) {
    for (auto& f : all())
        if (f.name == name) return f;
    return std::nullopt;
}

} // namespace nak::fixtures
