// Copyright 2026 The fintop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file io.hpp
/// JSON documents for spaces, maps and families.
///
/// A space document is {"n": 2, "opens": [[], [1], [0, 1]]} with optional
/// "name" and "labels" members. Emission is canonical: members sorted
/// ascending, families in bitmask order, no whitespace. Parsing goes
/// through validate_topology and reports every violation.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "constructors.hpp"
#include "finite_map.hpp"
#include "space.hpp"

namespace fintop {

using Json = nlohmann::json;

class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, const std::string& detail)
        : Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail)
        , line_(line)
        , column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

inline Error schema_error(const std::string& what) { return Error(ErrorKind::SchemaError, what); }

/// Parses JSON text, turning parser failures into SyntaxError with a
/// 1-based line and column.
inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        int line = 1;
        int column = 1;
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string detail = e.what();
        if (auto pos = detail.rfind(": "); pos != std::string::npos) {
            detail = detail.substr(pos + 2);
        }
        throw SyntaxError(line, column, detail);
    }
}

// ---- emission ----

inline Json to_json(PointSet a) {
    Json out = Json::array();
    for (int p : a.points()) {
        out.push_back(p);
    }
    return out;
}

inline Json to_json(const Family& f) {
    Json out = Json::array();
    for (PointSet a : f) {
        out.push_back(to_json(a));
    }
    return out;
}

inline Json to_json(const TopSpace& s) { return Json{{"n", s.carrier()}, {"opens", to_json(s.opens())}}; }

inline Json to_json(const FiniteMap& f) { return Json(f.table()); }

inline Json to_json(const Partition& p) {
    Json out = Json::array();
    for (PointSet b : p.blocks()) {
        out.push_back(to_json(b));
    }
    return out;
}

inline Json to_json(const AxiomViolation& v) {
    Json w = Json::array();
    for (PointSet a : v.witness) {
        w.push_back(to_json(a));
    }
    return Json{{"kind", std::string(to_string(v.kind))}, {"witness", w}};
}

inline std::string emit_space(const TopSpace& s) { return to_json(s).dump(); }

// ---- parsing ----

inline int json_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        throw schema_error(what + " must be an integer");
    }
    const auto v = j.get<long long>();
    if (v < 0 || v > 1'000'000) {
        throw schema_error(what + " out of range");
    }
    return static_cast<int>(v);
}

inline const Json& json_member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw schema_error(std::string("missing member \"") + key + "\"");
    }
    return j.at(key);
}

/// A list of point indices, range-checked against n.
inline PointSet point_set_from_json(int n, const Json& j) {
    if (!j.is_array()) {
        throw schema_error("a set must be a list of point indices");
    }
    Mask m = 0;
    for (const Json& p : j) {
        const int v = json_int(p, "point index");
        if (v >= n) {
            throw Error(ErrorKind::PointOutOfRange,
                        "point " + std::to_string(v) + " outside a carrier of " + std::to_string(n));
        }
        m |= Mask{1} << v;
    }
    return PointSet(n, m);
}

inline Family family_from_json(int n, const Json& j) {
    if (!j.is_array()) {
        throw schema_error("a family must be a list of sets");
    }
    std::vector<PointSet> out;
    for (const Json& a : j) {
        out.push_back(point_set_from_json(n, a));
    }
    return Family(n, std::move(out));
}

struct SpaceDocument {
    TopSpace space;
    std::optional<std::string> name;
    std::optional<std::vector<std::string>> labels;
};

/// Raw opens are collected as masks so that out-of-carrier members reach
/// validate_topology instead of failing earlier.
inline SpaceDocument space_from_json(const Json& j) {
    const int n = json_int(json_member(j, "n"), "n");
    require_carrier(n);
    const Json& opens = json_member(j, "opens");
    if (!opens.is_array()) {
        throw schema_error("\"opens\" must be a list of sets");
    }
    std::vector<Mask> masks;
    for (const Json& a : opens) {
        if (!a.is_array()) {
            throw schema_error("each open set must be a list of point indices");
        }
        Mask m = 0;
        for (const Json& p : a) {
            const int v = json_int(p, "point index");
            if (v >= kMaxCarrier) {
                throw Error(ErrorKind::PointOutOfRange, "point " + std::to_string(v));
            }
            m |= Mask{1} << v;
        }
        masks.push_back(m);
    }
    SpaceDocument doc{validate_topology(n, masks).take(), std::nullopt, std::nullopt};
    if (j.contains("name")) {
        if (!j.at("name").is_string()) {
            throw schema_error("\"name\" must be a string");
        }
        doc.name = j.at("name").get<std::string>();
    }
    if (j.contains("labels")) {
        const Json& l = j.at("labels");
        if (!l.is_array() || l.size() != static_cast<std::size_t>(n) ||
            !std::all_of(l.begin(), l.end(), [](const Json& x) { return x.is_string(); })) {
            throw schema_error("\"labels\" must list one string per point");
        }
        doc.labels = l.get<std::vector<std::string>>();
    }
    return doc;
}

inline Json to_json(const SpaceDocument& doc) {
    Json out = to_json(doc.space);
    if (doc.name) {
        out["name"] = *doc.name;
    }
    if (doc.labels) {
        out["labels"] = *doc.labels;
    }
    return out;
}

inline SpaceDocument parse_space_document(std::string_view text) { return space_from_json(parse_json(text)); }
inline TopSpace parse_space(std::string_view text) { return parse_space_document(text).space; }
inline std::string emit_space_document(const SpaceDocument& doc) { return to_json(doc).dump(); }

/// Loads the text of a referenced document (a file path in the CLI).
using DocumentResolver = std::function<std::string(const std::string&)>;

struct MapDocument {
    TopSpace dom;
    TopSpace cod;
    FiniteMap map;
};

inline TopSpace space_or_reference(const Json& j, const DocumentResolver& resolve) {
    if (j.is_string()) {
        if (!resolve) {
            throw schema_error("space references are not available here");
        }
        return parse_space(resolve(j.get<std::string>()));
    }
    return space_from_json(j).space;
}

inline MapDocument map_from_json(const Json& j, const DocumentResolver& resolve = {}) {
    TopSpace dom = space_or_reference(json_member(j, "dom"), resolve);
    TopSpace cod = space_or_reference(json_member(j, "cod"), resolve);
    const Json& t = json_member(j, "table");
    if (!t.is_array()) {
        throw schema_error("\"table\" must be a list of point indices");
    }
    std::vector<int> table;
    for (const Json& v : t) {
        table.push_back(json_int(v, "table entry"));
    }
    FiniteMap f(dom.carrier(), cod.carrier(), std::move(table));
    return MapDocument{std::move(dom), std::move(cod), std::move(f)};
}

inline MapDocument parse_map_document(std::string_view text, const DocumentResolver& resolve = {}) {
    return map_from_json(parse_json(text), resolve);
}

inline Json to_json(const MapDocument& doc) {
    return Json{{"dom", to_json(doc.dom)}, {"cod", to_json(doc.cod)}, {"table", to_json(doc.map)}};
}

} // namespace fintop
