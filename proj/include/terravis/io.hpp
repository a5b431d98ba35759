#pragma once

#include "terravis/funnel.hpp"
#include "terravis/ordered_graph.hpp"
#include "terravis/terrain.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace terravis {

using Json = nlohmann::json;

/// {"n": int, "edges": [[i,j],...]} with i<j, lexicographically sorted.
inline Json graph_to_json(const OrderedGraph& g) {
    Json edges = Json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return Json{{"n", g.size()}, {"edges", std::move(edges)}};
}

inline OrderedGraph graph_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw GraphError("graph JSON needs \"n\" and \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw GraphError("edge entries must be [i, j]");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return OrderedGraph::from_edges(doc.at("n").get<int>(), edges);
}

inline std::string graph_to_dot(const OrderedGraph& g) {
    std::string out = "graph {\n";
    for (int v = 0; v < g.size(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (auto [i, j] : g.edges())
        out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

inline Json chain_vertex_to_json(const ChainVertex& v) {
    return Json::array({v.chain == Chain::L ? "L" : "R", v.index});
}

/// {"nL":, "nR":, "edges": [["L",i,"R",j],...], "coords": optional}.
/// The bottom prints as ["L",0]; ["R",0] is accepted on input.
inline Json funnel_to_json(const Funnel& f, const Terrain* terrain = nullptr) {
    Json edges = Json::array();
    for (auto [u, v] : f.graph().edges()) {
        ChainVertex a = f.label(u), b = f.label(v);
        edges.push_back({a.chain == Chain::L ? "L" : "R", a.index,
                         b.chain == Chain::L ? "L" : "R", b.index});
    }
    Json out{{"nL", f.left_length()}, {"nR", f.right_length()}, {"edges", std::move(edges)}};
    if (terrain) {
        Json coords = Json::array();
        for (int id = 0; id < f.vertex_count(); ++id) {
            const Point& p =
                (*terrain)[static_cast<std::size_t>(f.terrain_indices()[static_cast<std::size_t>(id)])];
            coords.push_back({to_string(p.x), to_string(p.y)});
        }
        out["coords"] = std::move(coords);
    }
    return out;
}

inline Funnel funnel_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("nL") || !doc.contains("nR") || !doc.contains("edges"))
        throw FunnelFormatError("funnel JSON needs \"nL\", \"nR\" and \"edges\"");
    auto parse_chain = [](const Json& j) {
        std::string s = j.get<std::string>();
        if (s == "L") return Chain::L;
        if (s == "R") return Chain::R;
        throw FunnelFormatError("chain label must be \"L\" or \"R\"");
    };
    std::vector<std::pair<ChainVertex, ChainVertex>> edges;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 4)
            throw FunnelFormatError("funnel edges must be [chain, i, chain, j]");
        edges.push_back({ChainVertex{parse_chain(e.at(0)), e.at(1).get<int>()},
                         ChainVertex{parse_chain(e.at(2)), e.at(3).get<int>()}});
    }
    return Funnel::from_chains(doc.at("nL").get<int>(), doc.at("nR").get<int>(), edges);
}

inline Json witness_to_json(const Witness& w) {
    return Json{{"kind", witness_kind_name(w.kind)}, {"vertices", w.vertices}};
}

} // namespace terravis
