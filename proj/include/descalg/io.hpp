#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "descalg/covering.hpp"
#include "descalg/descent_algebra.hpp"
#include "descalg/monodromy.hpp"

namespace descalg::io {

using Json = nlohmann::ordered_json;

/// Reads `{"rank": r, "m": [[...]], "element_cap": N}`; m entries are the
/// orders m(s,t) with 0 meaning infinity. The group is named after the file stem.
inline CoxeterSpec load_matrix_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open Coxeter matrix file " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec("malformed JSON in " + path.string() + ": " + e.what());
    }
    try {
        CoxeterMatrix m = j.at("m").get<CoxeterMatrix>();
        if (j.contains("rank") && j.at("rank").get<std::size_t>() != m.size())
            throw InvalidSpec("rank does not match matrix size in " + path.string());
        const std::size_t cap = j.value("element_cap", kDefaultElementCap);
        CoxeterSpec spec = CoxeterSpec::matrix(std::move(m), cap, path.stem().string());
        spec.validate();
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec("bad Coxeter matrix file " + path.string() + ": " + e.what());
    }
}

inline Json subset_json(GeneratorSet g) { return Json(g.one_based()); }

inline Json lambda_json(const MultiplicityPartition& l) { return Json(l.parts); }

inline Json row_json(const TableRow& r) {
    return Json{{"I", subset_json(r.I)}, {"J", subset_json(r.J)},        {"K", subset_json(r.K)},
                {"a", r.a},              {"lambda", lambda_json(r.lambda)}, {"components", r.components}};
}

inline Json table_json(const StructureTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) rows.push_back(row_json(r));
    return Json{{"group", t.group}, {"rank", t.rank}, {"zero_rows_omitted", true}, {"rows", std::move(rows)}};
}

inline Json covering_json(const CoveringInstance& z) {
    return Json{{"I", subset_json(z.I)},
                {"J", subset_json(z.J)},
                {"K", subset_json(z.K)},
                {"a", structure_constant(z)},
                {"lambda", lambda_json(multiplicity_partition(z))},
                {"components", z.component_count},
                {"vertices", z.vertices.size()}};
}

inline Json monodromy_json(const MonodromyReport& r) {
    Json orders = Json::object();
    orders["1"] = 0;
    orders["2"] = 0;
    for (const auto& [order, n] : r.braid_orders) orders[std::to_string(order)] = n;
    return Json{{"I", subset_json(r.I)},
                {"J", subset_json(r.J)},
                {"K", subset_json(r.K)},
                {"braid_loops", r.braid_loops},
                {"orders", std::move(orders)},
                {"no_braid_loops", r.no_braid_loops},
                {"empty", r.empty}};
}

inline std::string quoted(const std::string& s) { return "\"" + s + "\""; }

/// Undirected class graph, vertices labeled by element, edges by 1-based generator.
inline std::string class_dot(const CoxeterSystem& sys, const RecoilClass& cls) {
    std::ostringstream out;
    out << "graph " << quoted(cls.subset.subscript()) << " {\n";
    for (std::uint32_t i = 0; i < cls.size(); ++i)
        out << "  v" << i << " [label=" << quoted(sys.label(cls.members[i])) << "];\n";
    for (std::uint32_t i = 0; i < cls.size(); ++i)
        for (const auto& e : cls.graph[i])
            if (i < e.to) out << "  v" << i << " -- v" << e.to << " [label=\"" << e.label + 1 << "\"];\n";
    out << "}\n";
    return out.str();
}

/// Z_IJK with vertices "(π|ρ)"; right moves blue, left moves red.
inline std::string covering_dot(const CoveringInstance& z) {
    const CoxeterSystem& sys = *z.sys;
    std::ostringstream out;
    out << "graph " << quoted("Z_" + z.I.to_string() + "/" + z.J.to_string() + "/" + z.K.to_string()) << " {\n";
    for (std::uint32_t v = 0; v < z.vertices.size(); ++v) {
        const auto& x = z.vertices[v];
        out << "  z" << v << " [label=" << quoted("(" + sys.label(x.pi) + "|" + sys.label(x.rho) + ")")
            << ", tooltip=" << quoted(sys.label(x.sigma)) << "];\n";
    }
    for (std::uint32_t v = 0; v < z.vertices.size(); ++v)
        for (const auto& e : z.adjacency[v])
            if (v < e.to)
                out << "  z" << v << " -- z" << e.to << " [color=" << (e.side == Side::right ? "blue" : "red")
                    << ", label=\"" << e.base + 1 << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace descalg::io
