#pragma once

// Fixture files and JSON serialization of reports.
//
// Fixture schema: {"n": int, "s": int, "Q": [[scalar]], "C": [[scalar]]}, with
// optional "name", "instantiations" and "expected_nakayama" metadata.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nak/error.hpp"
#include "nak/groebner.hpp"
#include "nak/linalg.hpp"
#include "nak/nakayama.hpp"
#include "nak/presentations.hpp"
#include "nak/scalar.hpp"

namespace nak {

using Json = nlohmann::ordered_json;

struct Fixture {
    std::string name;
    Params params;
    std::vector<std::pair<std::string, std::string>> instantiations;
    std::optional<Matrix> expected;  // expected Nakayama matrix of A, if documented
};

namespace detail {

inline Matrix parse_matrix(const Json& j, const char* field, std::size_t n) {
    if (!j.contains(field) || !j[field].is_array()) throw ParseError(0, std::string("missing matrix field \"") + field + "\"");
    const Json& rows = j[field];
    if (rows.size() != n) throw ParseError(0, std::string(field) + " must have n rows");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) throw ParseError(0, std::string(field) + " must be n x n");
        for (std::size_t c = 0; c < n; ++c) {
            const Json& cell = rows[r][c];
            std::string where = std::string(field) + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (!cell.is_string()) throw ParseError(0, where + " must be a scalar string");
            try {
                m(r, c) = parse_scalar(cell.get<std::string>());
            } catch (const ParseError& e) {
                throw ParseError(e.offset(), where + ": " + e.message() + " (offset within the scalar string)");
            }
        }
    }
    return m;
}

inline Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

inline Fixture parse_fixture(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, e.what());
    }
    if (!j.is_object()) throw ParseError(0, "fixture must be a JSON object");
    auto count = [&](const char* key) -> std::size_t {
        if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
            throw ParseError(0, std::string("missing or invalid integer field \"") + key + "\"");
        return j[key].get<std::size_t>();
    };
    Fixture f;
    const std::size_t n = count("n");
    const std::size_t s = count("s");
    Matrix q = detail::parse_matrix(j, "Q", n);
    Matrix c = detail::parse_matrix(j, "C", n);
    try {
        f.params = Params(n, s, std::move(q), std::move(c));
    } catch (const SizeMismatch& e) {
        throw ParseError(0, e.what());
    }
    if (j.contains("name") && j["name"].is_string()) f.name = j["name"].get<std::string>();
    if (j.contains("instantiations") && j["instantiations"].is_object())
        for (const auto& [k, v] : j["instantiations"].items())
            if (v.is_string()) f.instantiations.emplace_back(k, v.get<std::string>());
    if (j.contains("expected_nakayama")) f.expected = detail::parse_matrix(j, "expected_nakayama", n);
    return f;
}

inline Json fixture_json(const Fixture& f) {
    Json j;
    if (!f.name.empty()) j["name"] = f.name;
    if (!f.instantiations.empty()) {
        Json inst = Json::object();
        for (const auto& [k, v] : f.instantiations) inst[k] = v;
        j["instantiations"] = std::move(inst);
    }
    j["n"] = f.params.n;
    j["s"] = f.params.s;
    j["Q"] = detail::matrix_json(f.params.Q);
    j["C"] = detail::matrix_json(f.params.C);
    if (f.expected) j["expected_nakayama"] = detail::matrix_json(*f.expected);
    return j;
}

inline Json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    Json idx = Json::object();
    for (const auto& [k, v] : w->indices) idx[k] = v;
    Json vals = Json::object();
    for (const auto& [k, v] : w->values) vals[k] = format_scalar(v);
    return Json{{"indices", std::move(idx)}, {"values", std::move(vals)}};
}

inline Json condition_report_json(const ConditionReport& r) {
    Json conds = Json::array();
    for (const auto& e : r.conditions)
        conds.push_back(Json{{"id", e.id}, {"holds", e.holds}, {"witness", witness_json(e.witness)}});
    const auto& d = r.det_i_plus_cs;
    return Json{{"all_hold", r.all_hold()},
                {"conditions", std::move(conds)},
                {"derived", Json::array({Json{{"id", d.id}, {"holds", d.holds}, {"witness", witness_json(d.witness)}}})}};
}

inline Json map_json(const LinearGeneratorMap& m) { return detail::matrix_json(m.matrix); }

inline Json verification_json(const VerificationReport& r) {
    Json items = Json::array();
    for (const auto& it : r.items) {
        Json j{{"item", it.id}, {"status", it.pass ? "pass" : "fail"}, {"residue", nullptr}};
        if (it.residue) j["residue"] = it.residue->text();
        if (!it.detail.empty()) j["detail"] = it.detail;
        items.push_back(std::move(j));
    }
    return items;
}

inline Json hilbert_json(const HilbertFunction& h) {
    Json a = Json::array();
    for (auto d : h.dims) a.push_back(d);
    return a;
}

} // namespace nak
