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

// Command-line front end. Kept out of include/ so that the library does not
// depend on CLI11; the tool and the transcript tests both include it.
//
// Exit codes: 0 success or predicate true, 1 predicate false, 2 bad input,
// 64 usage error.

#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fintop/fintop.hpp"

namespace fintop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitUsage = 64;

/// Library operation -> subcommand that reaches it.
struct Coverage {
    const char* operation;
    const char* subcommand;
};

inline constexpr Coverage kCoverage[] = {
    {"family_union", "cover"},
    {"family_intersection", "cover"},
    {"subsets", "subsets"},
    {"discrete", "generate"},
    {"indiscrete", "generate"},
    {"restrict", "map"},
    {"is_continuous", "map"},
    {"validate_topology", "validate"},
    {"closed_sets", "validate"},
    {"clopen_sets", "validate"},
    {"minimal_open", "ops"},
    {"neighborhoods", "ops"},
    {"interior", "ops"},
    {"closure", "ops"},
    {"exterior", "ops"},
    {"boundary", "ops"},
    {"point_roles", "ops"},
    {"limit_set", "ops"},
    {"isolated_set", "ops"},
    {"density_report", "ops"},
    {"is_dense_in", "ops"},
    {"pair_relation", "ops"},
    {"separation_report", "check"},
    {"is_connected", "check"},
    {"is_compact", "check"},
    {"is_metrizable", "check"},
    {"is_locally_connected", "check"},
    {"is_totally_disconnected", "check"},
    {"is_locally_compact", "check"},
    {"classify_pair", "pair"},
    {"compare", "compare"},
    {"meet_topologies", "meet"},
    {"t1_minimum", "t1-minimum"},
    {"one_point_extension", "extend"},
    {"check_base_conditions", "generate"},
    {"topology_from_base", "generate"},
    {"is_base_for", "generate"},
    {"base_generates_same", "generate"},
    {"topology_from_subbase", "generate"},
    {"metric_topology", "generate"},
    {"subspace", "subspace"},
    {"product", "product"},
    {"quotient", "quotient"},
    {"alexandroff", "alexandroff"},
    {"components", "components"},
    {"mcp", "components"},
    {"is_connected_set", "components"},
    {"is_locally_connected_at", "components"},
    {"find_homeomorphism", "homeo"},
    {"self_homeomorphisms", "homeo"},
    {"check_map", "map"},
    {"is_continuous_at", "map"},
    {"limits_at", "map"},
    {"is_embedding", "map"},
    {"embeddings_equivalent", "map"},
    {"hausdorff_compact_checks", "map"},
    {"classify_cover", "cover"},
    {"is_subcover", "cover"},
    {"is_refinement", "cover"},
    {"minimal_subcover", "cover"},
    {"verify_pasting", "cover"},
    {"is_compact_set", "compact"},
    {"compactness_report", "compact"},
    {"enumerate_topologies", "enumerate"},
    {"count_topologies", "enumerate"},
    {"count_topologies_parallel", "enumerate"},
    {"canonical_opens", "enumerate"},
    {"sweep_theorems", "sweep"},
    {"parse_space", "validate"},
    {"emit_space", "validate"},
    {"parse_map_document", "map"},
};

namespace detail {

inline std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::UnreadableInput, "cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline TopSpace load_space(const std::string& path) { return parse_space(read_input(path)); }

inline MapDocument load_map(const std::string& path) {
    return parse_map_document(read_input(path), [](const std::string& ref) { return read_input(ref); });
}

/// "0,2,3" -> {0,2,3}; the empty string is the empty set.
inline PointSet parse_point_list(int n, const std::string& text) {
    Json list = Json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 0) {
            throw schema_error("bad point index \"" + item + "\"");
        }
        list.push_back(v);
    }
    return point_set_from_json(n, list);
}

inline Family parse_family(int n, const std::string& text) { return family_from_json(n, parse_json(text)); }

inline void emit(std::ostream& out, const Json& j, bool pretty) {
    if (!pretty) {
        out << j.dump() << '\n';
        return;
    }
    if (!j.is_object()) {
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : j.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

inline Json error_json(const Error& e) {
    // Error::what() carries a "Kind: " prefix; the kind has its own member.
    std::string message = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (message.rfind(prefix, 0) == 0) {
        message.erase(0, prefix.size());
    }
    Json err{{"kind", std::string(to_string(e.kind()))}, {"message", message}};
    if (const auto* inv = dynamic_cast<const InvalidTopology*>(&e)) {
        Json vs = Json::array();
        for (const auto& v : inv->violations()) {
            vs.push_back(to_json(v));
        }
        err["violations"] = vs;
    }
    if (const auto* syn = dynamic_cast<const SyntaxError*>(&e)) {
        err["line"] = syn->line();
        err["column"] = syn->column();
    }
    return Json{{"error", err}};
}

inline Json json_of(const RoleFlags& r) {
    return Json{{"interior", r.interior}, {"exterior", r.exterior}, {"boundary", r.boundary},
                {"adherent", r.adherent}, {"limit", r.limit},       {"isolated", r.isolated}};
}

inline Json json_of(const DensityReport& r) {
    return Json{{"dense", r.dense},
                {"dense_in_itself", r.dense_in_itself},
                {"nowhere_dense", r.nowhere_dense},
                {"perfect", r.perfect}};
}

inline Json json_of(const MapReport& r) {
    return Json{{"continuous", r.continuous},   {"open_map", r.open_map},         {"closed_map", r.closed_map},
                {"injective", r.injective},     {"surjective", r.surjective},     {"homeomorphism", r.homeomorphism},
                {"embedding", r.embedding}};
}

inline Json json_of(const CoverReport& r) {
    Json out{{"is_cover", r.is_cover},
             {"open_cover", r.open_cover},
             {"closed_cover", r.closed_cover},
             {"locally_finite", r.locally_finite}};
    if (r.fundamental) {
        out["fundamental"] = *r.fundamental;
    }
    return out;
}

/// Collects the result of a subcommand: JSON payload plus exit code.
struct Outcome {
    Json body = Json::object();
    int code = kExitOk;
};

} // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;
    CLI::App app{"Finite topological spaces: validation, operators, constructions, enumeration."};
    app.name("fintop");
    app.require_subcommand(1);
    bool pretty = false;
    bool json_flag = false;
    app.add_flag("--pretty", pretty, "human-readable summary instead of JSON");
    app.add_flag("--json", json_flag, "JSON output (the default)");

    Outcome result;
    std::function<void()> action;

    // validate
    std::string file;
    auto* validate = app.add_subcommand("validate", "check the topology axioms and print the canonical document");
    validate->add_option("file", file, "space document ('-' for stdin)")->required();
    validate->callback([&] {
        action = [&] {
            const std::string text = read_input(file);
            const Json j = parse_json(text);
            try {
                const SpaceDocument doc = space_from_json(j);
                result.body = Json{{"valid", true},
                                   {"space", to_json(doc)},
                                   {"closeds", to_json(closed_sets(doc.space))},
                                   {"clopens", to_json(clopen_sets(doc.space))}};
            } catch (const InvalidTopology& e) {
                Json vs = Json::array();
                for (const auto& v : e.violations()) {
                    vs.push_back(to_json(v));
                }
                result.body = Json{{"valid", false}, {"violations", vs}};
                result.code = kExitFalse;
            }
        };
    });

    // ops
    std::string set_text;
    std::string other_text;
    bool op_int = false, op_cl = false, op_ext = false, op_fr = false, op_roles = false, op_lim = false,
         op_iso = false, op_density = false, op_nbhd = false, op_cnbhd = false, op_min = false;
    auto* ops = app.add_subcommand("ops", "interior, closure, exterior, frontier and point roles of a set");
    ops->add_option("file", file)->required();
    ops->add_option("--set", set_text, "comma-separated points")->required();
    ops->add_flag("--interior,--int", op_int);
    ops->add_flag("--closure,--cl", op_cl);
    ops->add_flag("--exterior,--ext", op_ext);
    ops->add_flag("--frontier,--fr,--boundary", op_fr);
    ops->add_flag("--roles", op_roles, "role flags of every point");
    ops->add_flag("--limits", op_lim);
    ops->add_flag("--isolated", op_iso);
    ops->add_flag("--density", op_density);
    ops->add_flag("--neighborhoods", op_nbhd, "open neighbourhoods of the set");
    ops->add_flag("--closed-neighborhoods", op_cnbhd);
    ops->add_flag("--minimal-open", op_min, "minimal open set of every point");
    ops->add_option("--other", other_text, "second set: pair relation and density of one in the other");
    ops->callback([&] {
        action = [&] {
            const TopSpace s = load_space(file);
            const PointSet a = parse_point_list(s.carrier(), set_text);
            const bool all = !(op_int || op_cl || op_ext || op_fr || op_roles || op_lim || op_iso || op_density ||
                               op_nbhd || op_cnbhd || op_min || !other_text.empty());
            Json& b = result.body;
            if (all || op_int) b["interior"] = to_json(interior(s, a));
            if (all || op_cl) b["closure"] = to_json(closure(s, a));
            if (all || op_ext) b["exterior"] = to_json(exterior(s, a));
            if (all || op_fr) b["frontier"] = to_json(boundary(s, a));
            if (op_lim) b["limits"] = to_json(limit_set(s, a));
            if (op_iso) b["isolated"] = to_json(isolated_set(s, a));
            if (op_density) b["density"] = json_of(density_report(s, a));
            if (op_nbhd) b["neighborhoods"] = to_json(neighborhoods(s, a));
            if (op_cnbhd) b["closed_neighborhoods"] = to_json(neighborhoods(s, a, NeighborhoodKind::closed));
            if (op_roles) {
                Json roles = Json::array();
                for (int p = 0; p < s.carrier(); ++p) {
                    roles.push_back(json_of(point_roles(s, a, p)));
                }
                b["roles"] = roles;
            }
            if (op_min) {
                Json mins = Json::array();
                for (int p = 0; p < s.carrier(); ++p) {
                    mins.push_back(to_json(minimal_open(s, p)));
                }
                b["minimal_open"] = mins;
            }
            if (!other_text.empty()) {
                const PointSet o = parse_point_list(s.carrier(), other_text);
                b["relation"] = std::string(to_string(pair_relation(s, a, o)));
                b["dense_in_other"] = is_dense_in(s, a, o);
            }
        };
    });

    // check
    std::vector<std::pair<std::string, bool>> wanted;
    for (const auto& [name, fn] : named_predicates()) {
        wanted.emplace_back(name, false);
    }
    auto* check = app.add_subcommand("check", "evaluate named predicates; exit 1 if a requested one is false");
    check->add_option("file", file)->required();
    for (auto& [name, flag] : wanted) {
        check->add_flag("--" + name, flag);
    }
    check->callback([&] {
        action = [&] {
            const TopSpace s = load_space(file);
            const bool any = std::any_of(wanted.begin(), wanted.end(), [](const auto& w) { return w.second; });
            bool all_true = true;
            for (std::size_t i = 0; i < wanted.size(); ++i) {
                if (any && !wanted[i].second) {
                    continue;
                }
                const bool v = named_predicates()[i].second(s);
                result.body[wanted[i].first] = v;
                all_true = all_true && v;
            }
            if (any && !all_true) {
                result.code = kExitFalse;
            }
        };
    });

    // pair
    int p_arg = 0;
    int q_arg = 0;
    auto* pair = app.add_subcommand("pair", "distinguishability of two points");
    pair->add_option("file", file)->required();
    pair->add_option("--p", p_arg)->required();
    pair->add_option("--q", q_arg)->required();
    pair->callback([&] {
        action = [&] {
            const TopSpace s = load_space(file);
            const PairClass c = classify_pair(s, p_arg, q_arg);
            result.body = Json{{"indistinguishable", c.indistinguishable},
                               {"partially_distinguishable", c.partially_distinguishable},
                               {"distinguishable", c.distinguishable},
                               {"separated", c.separated}};
        };
    });

    // compare, meet
    std::string file2;
    auto* cmp = app.add_subcommand("compare", "compare two topologies on the same carrier");
    cmp->add_option("first", file)->required();
    cmp->add_option("second", file2)->required();
    cmp->callback([&] {
        action = [&] {
            const Comparison c = compare(load_space(file), load_space(file2));
            result.body = Json{{"comparison", std::string(to_string(c))}};
        };
    });

    std::vector<std::string> files;
    auto* meet = app.add_subcommand("meet", "intersection of topologies on one carrier");
    meet->add_option("files", files)->required();
    meet->callback([&] {
        action = [&] {
            std::vector<TopSpace> spaces;
            for (const auto& f : files) {
                spaces.push_back(load_space(f));
            }
            result.body = Json{{"space", to_json(meet_topologies(spaces))}};
        };
    });

    int n_arg = 0;
    auto* t1min = app.add_subcommand("t1-minimum", "meet of all T1 topologies on n points (n <= 3)");
    t1min->add_option("--n", n_arg)->required();
    t1min->callback([&] { action = [&] { result.body = Json{{"space", to_json(t1_minimum(n_arg))}}; }; });

    auto* extend = app.add_subcommand("extend", "add a point lying in every nonempty open set");
    extend->add_option("file", file)->required();
    extend->callback(
        [&] { action = [&] { result.body = Json{{"space", to_json(one_point_extension(load_space(file)))}}; }; });

    // generate
    std::string family_text;
    std::string compare_text;
    std::string metric_text;
    std::string against;
    auto* gen = app.add_subcommand("generate", "topology from a base, a subbase or a metric");
    gen->require_subcommand(1);
    auto* gen_base = gen->add_subcommand("base", "all unions of a base");
    gen_base->add_option("--n", n_arg)->required();
    gen_base->add_option("--family", family_text, "JSON list of sets")->required();
    gen_base->add_option("--compare", compare_text, "second base: which generates the finer topology");
    gen_base->add_option("--for", against, "space document: is the family a base for it");
    gen_base->callback([&] {
        action = [&] {
            const Family b = parse_family(n_arg, family_text);
            const BaseCheck c = check_base_conditions(n_arg, b);
            Json& body = result.body;
            body["check"] = std::string(to_string(c.status));
            if (c.witness) {
                body["witness"] = Json::array({to_json(c.witness->first), to_json(c.witness->second)});
            }
            if (!against.empty()) {
                const bool is_base = is_base_for(load_space(against), b);
                body["base_for"] = is_base;
                if (!is_base) {
                    result.code = kExitFalse;
                }
            }
            if (c.status != BaseStatus::ok) {
                result.code = kExitFalse;
                return;
            }
            body["space"] = to_json(topology_from_base(n_arg, b));
            if (!compare_text.empty()) {
                body["relation"] =
                    std::string(to_string(base_generates_same(n_arg, b, parse_family(n_arg, compare_text))));
            }
        };
    });
    auto* gen_sub = gen->add_subcommand("subbase", "unions of finite intersections of a subbase");
    gen_sub->add_option("--n", n_arg)->required();
    gen_sub->add_option("--family", family_text, "JSON list of sets")->required();
    gen_sub->callback([&] {
        action = [&] {
            result.body = Json{{"space", to_json(topology_from_subbase(n_arg, parse_family(n_arg, family_text)))}};
        };
    });
    auto* gen_metric = gen->add_subcommand("metric", "topology of open balls");
    gen_metric->add_option("--metric", metric_text, "JSON distance matrix")->required();
    gen_metric->callback([&] {
        action = [&] {
            const Json m = parse_json(metric_text);
            if (!m.is_array()) {
                throw schema_error("the metric must be a list of rows");
            }
            std::vector<std::vector<MetricTable::Distance>> rows;
            for (const Json& r : m) {
                if (!r.is_array()) {
                    throw schema_error("each metric row must be a list");
                }
                std::vector<MetricTable::Distance> row;
                for (const Json& v : r) {
                    if (!v.is_number_unsigned()) {
                        throw schema_error("distances must be non-negative integers");
                    }
                    row.push_back(v.get<MetricTable::Distance>());
                }
                rows.push_back(std::move(row));
            }
            const int n = static_cast<int>(rows.size());
            result.body = Json{{"space", to_json(metric_topology(MetricTable(n, std::move(rows))))}};
        };
    });

    auto* gen_discrete = gen->add_subcommand("discrete", "every subset open");
    gen_discrete->add_option("--n", n_arg)->required();
    gen_discrete->callback([&] { action = [&] { result.body = Json{{"space", to_json(discrete(n_arg))}}; }; });
    auto* gen_indiscrete = gen->add_subcommand("indiscrete", "only the empty set and the carrier open");
    gen_indiscrete->add_option("--n", n_arg)->required();
    gen_indiscrete->callback(
        [&] { action = [&] { result.body = Json{{"space", to_json(indiscrete(n_arg))}}; }; });

    auto* subs = app.add_subcommand("subsets", "every subset of n points, ascending by bitmask");
    subs->add_option("--n", n_arg)->required();
    subs->callback([&] {
        action = [&] {
            Json all = Json::array();
            for (PointSet a : subsets(n_arg)) {
                all.push_back(to_json(a));
            }
            result.body = Json{{"subsets", all}};
        };
    });

    // subspace, product, quotient, alexandroff
    auto* sub = app.add_subcommand("subspace", "induced topology on a subset, re-indexed from 0");
    sub->add_option("file", file)->required();
    sub->add_option("--set", set_text)->required();
    sub->callback([&] {
        action = [&] {
            const TopSpace s = load_space(file);
            const Subspace y = subspace(s, parse_point_list(s.carrier(), set_text));
            result.body = Json{{"space", to_json(y.space)}, {"points", to_json(y.points)}};
        };
    });

    auto* prod = app.add_subcommand("product", "product topology; point k is the pair listed at index k");
    prod->add_option("first", file)->required();
    prod->add_option("second", file2)->required();
    prod->callback([&] {
        action = [&] {
            const Product p = product(load_space(file), load_space(file2));
            Json pairs = Json::array();
            for (int k = 0; k < p.encoding.size(); ++k) {
                const auto [i, j] = p.encoding.decode(k);
                pairs.push_back(Json::array({i, j}));
            }
            result.body = Json{{"space", to_json(p.space)}, {"pairs", pairs}};
        };
    });

    std::string partition_text;
    auto* quo = app.add_subcommand("quotient", "quotient topology by a partition");
    quo->add_option("file", file)->required();
    quo->add_option("--partition", partition_text, "JSON list of blocks")->required();
    quo->callback([&] {
        action = [&] {
            const TopSpace s = load_space(file);
            const Json j = parse_json(partition_text);
            if (!j.is_array()) {
                throw schema_error("a partition must be a list of blocks");
            }
            std::vector<PointSet> blocks;
            for (const Json& b : j) {
                blocks.push_back(point_set_from_json(s.carrier(), b));
            }
            const Quotient q = quotient(s, Partition(s.carrier(), std::move(blocks)));
            result.body = Json{{"space", to_json(q.space)}, {"projection", to_json(q.projection)}};
        };
    });

    auto* alex = app.add_subcommand("alexandroff", "one-point compactification; the new point is index n");
    alex->add_option("file", file)->required();
    alex->callback([&] { action = [&] { result.body = Json{{"space", to_json(alexandroff(load_space(file)))}}; }; });

    // components
    auto* comp = app.add_subcommand("components", "connected components and related predicates");
    comp->add_option("file", file)->required();
    comp->add_option("--set", set_text, "also report the connected hull of this set");
    comp->callback([&] {
        action = [&] {
            const TopSpace s = load_space(file);
            const ConnectedSetTable table(s);
            const ComponentDecomposition c = components(table);
            Json lc = Json::array();
            for (int p = 0; p < s.carrier(); ++p) {
                lc.push_back(is_locally_connected_at(s, p));
            }
            result.body = Json{{"components", to_json(c.blocks)},
                               {"count", c.count()},
                               {"connected", is_connected(s)},
                               {"locally_connected_at", lc}};
            if (!set_text.empty()) {
                const PointSet a = parse_point_list(s.carrier(), set_text);
                result.body["set_connected"] = is_connected_set(s, a);
                result.body["hull"] = to_json(mcp(table, a));
            }
        };
    });

    // homeo
    auto* homeo = app.add_subcommand("homeo", "find a homeomorphism; exit 1 if none");
    homeo->add_option("first", file)->required();
    homeo->add_option("second", file2)->required();
    bool list_autos = false;
    homeo->add_flag("--automorphisms", list_autos, "also list self-homeomorphisms of the first space");
    homeo->callback([&] {
        action = [&] {
            const TopSpace a = load_space(file);
            const TopSpace b = load_space(file2);
            const auto h = find_homeomorphism(a, b);
            result.body["homeomorphic"] = h.has_value();
            if (h) {
                result.body["map"] = to_json(*h);
            } else {
                result.code = kExitFalse;
            }
            if (list_autos) {
                Json autos = Json::array();
                for (const FiniteMap& f : self_homeomorphisms(a)) {
                    autos.push_back(to_json(f));
                }
                result.body["automorphisms"] = autos;
            }
        };
    });

    // map
    std::string map_file;
    std::string other_map;
    int point_arg = -1;
    bool hausdorff = false;
    auto* mapc = app.add_subcommand("map", "properties of a map document {dom, cod, table}");
    mapc->add_option("file", map_file)->required();
    mapc->add_option("--set", set_text, "restrict the map to this subset of the domain");
    mapc->add_option("--point", point_arg, "with --set: limits of the restriction at this point");
    mapc->add_flag("--hausdorff", hausdorff, "compact-to-Hausdorff consequences");
    mapc->add_option("--equivalent", other_map, "second embedding with the same spaces");
    mapc->callback([&] {
        action = [&] {
            const MapDocument m = load_map(map_file);
            result.body = json_of(check_map(m.map, m.dom, m.cod));
            Json at = Json::array();
            for (int p = 0; p < m.dom.carrier(); ++p) {
                at.push_back(is_continuous_at(m.map, m.dom, m.cod, p));
            }
            result.body["continuous_at"] = at;
            if (!set_text.empty()) {
                const PointSet a = parse_point_list(m.dom.carrier(), set_text);
                const FiniteMap g = restrict(m.map, m.dom, m.cod, a);
                result.body["restriction"] = to_json(g);
                result.body["restriction_continuous"] = is_continuous(g, subspace(m.dom, a).space, m.cod);
                if (point_arg >= 0) {
                    result.body["limits"] = to_json(limits_at(m.dom, a, g, m.cod, point_arg));
                }
            }
            if (hausdorff) {
                const auto h = hausdorff_compact_checks(m.dom, m.cod, m.map);
                result.body["hausdorff"] = Json{{"continuous_is_closed", h.continuous_is_closed},
                                                {"bijection_is_homeomorphism", h.bijection_is_homeomorphism},
                                                {"injection_is_embedding", h.injection_is_embedding},
                                                {"compact_sets_closed", h.compact_sets_closed},
                                                {"disjoint_compacts_separated", h.disjoint_compacts_separated}};
            }
            if (!other_map.empty()) {
                const MapDocument o = load_map(other_map);
                if (o.dom != m.dom || o.cod != m.cod) {
                    throw Error(ErrorKind::CarrierMismatch, "the two maps join different spaces");
                }
                result.body["equivalent"] = embeddings_equivalent(m.map, o.map, m.dom, m.cod);
            }
        };
    });

    // cover
    std::string cover_text;
    std::string refined_text;
    auto* cov = app.add_subcommand("cover", "classify a family of sets as a cover; exit 1 if it does not cover");
    cov->add_option("file", file)->required();
    cov->add_option("--cover", cover_text, "JSON list of sets")->required();
    cov->add_option("--set", set_text, "target set (default: the whole carrier)");
    cov->add_option("--refines", refined_text, "second cover: is the first a refinement of it");
    cov->add_option("--subcover-of", compare_text, "second family: is the first drawn from it");
    cov->add_option("--paste", map_file, "map document: check the pasting implication along the cover");
    cov->callback([&] {
        action = [&] {
            const TopSpace s = load_space(file);
            const Family c = parse_family(s.carrier(), cover_text);
            const PointSet target = set_text.empty() ? s.full() : parse_point_list(s.carrier(), set_text);
            const CoverReport r = classify_cover(s, c, target);
            result.body = json_of(r);
            result.body["union"] = to_json(family_union(c));
            if (!c.empty()) {
                result.body["intersection"] = to_json(family_intersection(c));
            }
            if (!r.is_cover) {
                result.code = kExitFalse;
                return;
            }
            result.body["minimal_subcover"] = to_json(minimal_subcover(s, c, target));
            if (!refined_text.empty()) {
                result.body["refinement"] = is_refinement(s, c, parse_family(s.carrier(), refined_text));
            }
            if (!compare_text.empty()) {
                result.body["subcover"] = is_subcover(c, parse_family(s.carrier(), compare_text), target);
            }
            if (!map_file.empty()) {
                const MapDocument m = load_map(map_file);
                result.body["pasting"] = verify_pasting(m.dom, m.cod, m.map, c);
            }
        };
    });

    // compact
    bool diagnostics = false;
    auto* compact = app.add_subcommand("compact", "compactness of the space or a set");
    compact->add_option("file", file)->required();
    compact->add_option("--set", set_text);
    compact->add_flag("--diagnostics", diagnostics, "histogram of smallest subcover sizes over all open covers");
    compact->callback([&] {
        action = [&] {
            const TopSpace s = load_space(file);
            const CompactnessReport r = compactness_report(s, diagnostics);
            result.body = Json{{"compact", r.compact},
                               {"locally_compact", r.locally_compact},
                               {"mode", std::string(to_string(r.mode))}};
            if (diagnostics) {
                result.body["subcover_sizes"] = r.subcover_sizes;
            }
            if (!set_text.empty()) {
                const bool c = is_compact_set(s, parse_point_list(s.carrier(), set_text));
                result.body["set_compact"] = c;
                if (!c) {
                    result.code = kExitFalse;
                }
            }
        };
    });

    // enumerate
    bool count_only = false;
    std::string mode = "labeled";
    std::string filter;
    unsigned parallel = 0;
    auto* en = app.add_subcommand("enumerate", "every topology on n points (n <= 5)");
    en->add_option("--n", n_arg)->required();
    en->add_flag("--count", count_only);
    en->add_option("--mode", mode)->check(CLI::IsMember({"labeled", "classes"}));
    en->add_option("--filter", filter, "predicate name, as accepted by check");
    en->add_option("--parallel", parallel, "worker threads for --count");
    en->callback([&] {
        action = [&] {
            EnumConfig cfg{n_arg, {}, filter, mode == "classes" ? EnumMode::up_to_homeomorphism : EnumMode::labeled};
            if (!filter.empty()) {
                auto fn = find_predicate(filter);
                if (!fn) {
                    throw schema_error("unknown predicate \"" + filter + "\"");
                }
                cfg.filter = *fn;
            }
            if (count_only) {
                const std::size_t c = parallel > 0 ? count_topologies_parallel(n_arg, cfg.filter, cfg.mode, parallel)
                                                   : count_topologies(n_arg, cfg.filter, cfg.mode);
                result.body = Json{{"count", c}};
                return;
            }
            Json list = Json::array();
            for_each_topology(cfg, [&](const TopSpace& s) {
                Json entry = to_json(s);
                if (cfg.mode == EnumMode::labeled) {
                    entry["canonical"] = to_json(canonical_opens(s));
                }
                list.push_back(entry);
            });
            result.body = Json{{"count", list.size()}, {"spaces", list}};
        };
    });

    // sweep
    bool no_maps = false;
    std::vector<std::string> only;
    auto* sw = app.add_subcommand("sweep", "run the law regression over every topology on n points");
    sw->add_option("--n", n_arg)->required();
    sw->add_flag("--no-maps", no_maps, "skip the pair and map scopes");
    sw->add_option("--only", only, "law ids to run");
    sw->callback([&] {
        action = [&] {
            SweepOptions o;
            o.maps = !no_maps;
            o.only = only;
            const SweepReport r = sweep_theorems(n_arg, o);
            result.body = to_json(r);
            if (!r.all_pass()) {
                result.code = kExitFalse;
            }
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    (void)json_flag;

    try {
        action();
    } catch (const Error& e) {
        emit(out, error_json(e), pretty);
        return kExitInput;
    }
    emit(out, result.body, pretty);
    return result.code;
}

/// Subcommand names registered by run(), for the coverage check.
inline std::vector<std::string> subcommand_names() {
    return {"validate", "ops",      "check",     "pair",        "compare",    "meet",   "t1-minimum",
            "extend",   "generate", "subspace",  "product",     "quotient",   "alexandroff",
            "components", "homeo",  "map",       "cover",       "compact",    "enumerate", "sweep", "subsets"};
}

} // namespace fintop::cli
