#ifndef KPG_JSON_IO_HPP
#define KPG_JSON_IO_HPP

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kpg/fundamental.hpp"

namespace kpg {

using json = nlohmann::json;

namespace detail {

inline void require(bool cond, const std::string& pointer, const std::string& msg) {
    if (!cond) throw error("SchemaError", pointer + ": " + msg);
}

}  // namespace detail

inline KGraph parse_kgraph(const json& j) {
    detail::require(j.is_object(), "/", "kgraph document must be an object");
    detail::require(j.value("kind", "") == "kgraph", "/kind", "expected \"kgraph\"");
    detail::require(j.contains("k") && j["k"].is_number_integer() && j["k"].get<int>() >= 1, "/k",
                    "positive integer required");
    detail::require(j.contains("vertices") && j["vertices"].is_array(), "/vertices",
                    "array required");
    detail::require(j.contains("edges") && j["edges"].is_array(), "/edges", "array required");
    detail::require(j.contains("squares") && j["squares"].is_array(), "/squares",
                    "array required");
    KGraph g;
    g.k = j["k"].get<int>();
    for (size_t i = 0; i < j["vertices"].size(); ++i) {
        const auto& v = j["vertices"][i];
        detail::require(v.is_string(), "/vertices/" + std::to_string(i), "string id required");
        g.vertices.push_back(v.get<std::string>());
    }
    std::map<std::string, int> vidx, eidx;
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        detail::require(!vidx.count(g.vertices[i]), "/vertices/" + std::to_string(i),
                        "duplicate id " + g.vertices[i]);
        vidx[g.vertices[i]] = static_cast<int>(i);
    }
    for (size_t i = 0; i < j["edges"].size(); ++i) {
        std::string ptr = "/edges/" + std::to_string(i);
        const auto& e = j["edges"][i];
        detail::require(e.is_object() && e.contains("id") && e.contains("color") &&
                            e.contains("src") && e.contains("rng"),
                        ptr, "need id/color/src/rng");
        Edge ed;
        ed.id = e["id"].get<std::string>();
        detail::require(!eidx.count(ed.id), ptr + "/id", "duplicate id " + ed.id);
        eidx[ed.id] = static_cast<int>(i);
        ed.color = e["color"].get<int>();
        detail::require(vidx.count(e["src"].get<std::string>()), ptr + "/src",
                        "unknown vertex " + e["src"].get<std::string>());
        detail::require(vidx.count(e["rng"].get<std::string>()), ptr + "/rng",
                        "unknown vertex " + e["rng"].get<std::string>());
        ed.src = vidx[e["src"].get<std::string>()];
        ed.rng = vidx[e["rng"].get<std::string>()];
        g.edges.push_back(ed);
    }
    for (size_t i = 0; i < j["squares"].size(); ++i) {
        std::string ptr = "/squares/" + std::to_string(i);
        const auto& s = j["squares"][i];
        detail::require(s.is_array() && s.size() == 2 && s[0].is_array() && s[0].size() == 2 &&
                            s[1].is_array() && s[1].size() == 2,
                        ptr, "square is a pair of [inner, outer] pairs");
        auto side = [&](const json& half, const std::string& p) {
            detail::require(eidx.count(half[0].get<std::string>()), p + "/0",
                            "unknown edge " + half[0].get<std::string>());
            detail::require(eidx.count(half[1].get<std::string>()), p + "/1",
                            "unknown edge " + half[1].get<std::string>());
            return std::pair(eidx[half[0].get<std::string>()], eidx[half[1].get<std::string>()]);
        };
        g.squares.push_back({side(s[0], ptr + "/0"), side(s[1], ptr + "/1")});
    }
    g.finalize();
    return g;
}

inline json emit_kgraph(const KGraph& g) {
    json j;
    j["kind"] = "kgraph";
    j["k"] = g.k;
    j["vertices"] = g.vertices;
    j["edges"] = json::array();
    for (const Edge& e : g.edges)
        j["edges"].push_back({{"id", e.id},
                              {"color", e.color},
                              {"src", g.vertices[static_cast<size_t>(e.src)]},
                              {"rng", g.vertices[static_cast<size_t>(e.rng)]}});
    j["squares"] = json::array();
    for (const auto& s : g.squares)
        j["squares"].push_back(json::array(
            {json::array({g.edges[static_cast<size_t>(s.first.first)].id,
                          g.edges[static_cast<size_t>(s.first.second)].id}),
             json::array({g.edges[static_cast<size_t>(s.second.first)].id,
                          g.edges[static_cast<size_t>(s.second.second)].id})}));
    return j;
}

/// base may be an inline kgraph object or a path (resolved against dir).
inline RepKGraph parse_repgraph(const json& j, const std::string& dir = ".") {
    detail::require(j.is_object(), "/", "repgraph document must be an object");
    detail::require(j.value("kind", "") == "repgraph", "/kind", "expected \"repgraph\"");
    detail::require(j.contains("base"), "/base", "required");
    RepKGraph d;
    if (j["base"].is_string()) {
        std::string path = j["base"].get<std::string>();
        if (!path.empty() && path[0] != '/') path = dir + "/" + path;
        std::ifstream in(path);
        detail::require(in.good(), "/base", "cannot open " + path);
        json b = json::parse(in, nullptr, true, true);
        d.base = std::make_shared<KGraph>(parse_kgraph(b));
    } else {
        d.base = std::make_shared<KGraph>(parse_kgraph(j["base"]));
    }
    detail::require(j.contains("core_vertices") && j["core_vertices"].is_array(),
                    "/core_vertices", "array required");
    detail::require(j.contains("core_edges") && j["core_edges"].is_array(), "/core_edges",
                    "array required");
    std::map<std::string, int> vidx;
    for (size_t i = 0; i < j["core_vertices"].size(); ++i) {
        std::string ptr = "/core_vertices/" + std::to_string(i);
        const auto& v = j["core_vertices"][i];
        detail::require(v.is_object() && v.contains("id") && v.contains("alpha"), ptr,
                        "need id/alpha");
        std::string id = v["id"].get<std::string>();
        detail::require(!vidx.count(id), ptr + "/id", "duplicate id " + id);
        vidx[id] = static_cast<int>(i);
        std::string av = v["alpha"].get<std::string>();
        detail::require(d.base->vertex_index.count(av), ptr + "/alpha", "unknown vertex " + av);
        d.core_vertices.push_back(id);
        d.alpha_v.push_back(d.base->vertex_index.at(av));
    }
    std::set<std::string> eids;
    for (size_t i = 0; i < j["core_edges"].size(); ++i) {
        std::string ptr = "/core_edges/" + std::to_string(i);
        const auto& e = j["core_edges"][i];
        detail::require(e.is_object() && e.contains("id") && e.contains("alpha_edge") &&
                            e.contains("src") && e.contains("rng"),
                        ptr, "need id/alpha_edge/src/rng");
        CoreEdge ce;
        ce.id = e["id"].get<std::string>();
        detail::require(eids.insert(ce.id).second, ptr + "/id", "duplicate id " + ce.id);
        std::string ae = e["alpha_edge"].get<std::string>();
        detail::require(d.base->edge_index.count(ae), ptr + "/alpha_edge", "unknown edge " + ae);
        ce.alpha_edge = d.base->edge_index.at(ae);
        detail::require(vidx.count(e["src"].get<std::string>()), ptr + "/src",
                        "unknown core vertex " + e["src"].get<std::string>());
        detail::require(vidx.count(e["rng"].get<std::string>()), ptr + "/rng",
                        "unknown core vertex " + e["rng"].get<std::string>());
        ce.src = vidx[e["src"].get<std::string>()];
        ce.rng = vidx[e["rng"].get<std::string>()];
        d.core_edges.push_back(ce);
    }
    d.finalize();
    return d;
}

inline json emit_repgraph(const RepKGraph& d) {
    json j;
    j["kind"] = "repgraph";
    j["base"] = emit_kgraph(d.g());
    j["core_vertices"] = json::array();
    for (int v = 0; v < d.n(); ++v)
        j["core_vertices"].push_back(
            {{"id", d.core_vertices[static_cast<size_t>(v)]},
             {"alpha", d.g().vertices[static_cast<size_t>(d.alpha_v[static_cast<size_t>(v)])]}});
    j["core_edges"] = json::array();
    for (const CoreEdge& e : d.core_edges)
        j["core_edges"].push_back(
            {{"id", e.id},
             {"alpha_edge", d.g().edges[static_cast<size_t>(e.alpha_edge)].id},
             {"src", d.core_vertices[static_cast<size_t>(e.src)]},
             {"rng", d.core_vertices[static_cast<size_t>(e.rng)]}});
    return j;
}

inline std::string emit_document(const json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline const char* dot_color(int c) {
    static const char* palette[] = {"blue",   "red",    "forestgreen", "orange",
                                    "purple", "brown",  "deeppink",    "gray40"};
    return palette[(c - 1) % 8];
}

}  // namespace detail

inline std::string export_dot(const KGraph& g) {
    std::ostringstream o;
    o << "digraph kgraph {\n";
    for (const auto& v : g.vertices) o << "  \"" << v << "\";\n";
    for (const Edge& e : g.edges)
        o << "  \"" << g.vertices[static_cast<size_t>(e.src)] << "\" -> \""
          << g.vertices[static_cast<size_t>(e.rng)] << "\" [label=\"" << e.id << "\", color="
          << detail::dot_color(e.color) << "];\n";
    o << "}\n";
    return o.str();
}

inline std::string export_dot(const RepKGraph& d) {
    const KGraph& g = d.g();
    std::ostringstream o;
    o << "digraph repgraph {\n";
    for (int v = 0; v < d.n(); ++v) {
        bool implicit = false;  // some out-label of alpha(v) has no explicit lift
        for (const Edge& e : g.edges)
            if (e.src == d.alpha_v[static_cast<size_t>(v)] &&
                !d.out_by_label[static_cast<size_t>(v)].count(
                    static_cast<int>(&e - g.edges.data())))
                implicit = true;
        o << "  \"" << d.core_vertices[static_cast<size_t>(v)] << "\""
          << (implicit ? " [style=dashed]" : "") << ";\n";
    }
    for (const CoreEdge& e : d.core_edges)
        o << "  \"" << d.core_vertices[static_cast<size_t>(e.src)] << "\" -> \""
          << d.core_vertices[static_cast<size_t>(e.rng)] << "\" [label=\""
          << g.edges[static_cast<size_t>(e.alpha_edge)].id << "\", color="
          << detail::dot_color(g.edges[static_cast<size_t>(e.alpha_edge)].color) << "];\n";
    o << "}\n";
    return o.str();
}

inline std::string export_dot(const CoverBall& ball) {
    const RepKGraph& d = *ball.rep;
    const KGraph& g = d.g();
    std::ostringstream o;
    o << "digraph coverball {\n";
    for (size_t i = 0; i < ball.vertices.size(); ++i) {
        bool boundary = ball.dist[i] >= ball.radius;
        o << "  n" << i << " [label=\"" << addr_str(d, detail::ball_endpoint(d, ball.base, ball.vertices[i]))
          << "\"" << (boundary ? ", style=dashed" : "") << (i == 0 ? ", shape=doublecircle" : "")
          << "];\n";
    }
    for (const BallEdge& e : ball.edges)
        o << "  n" << e.src << " -> n" << e.rng << " [label=\""
          << g.edges[static_cast<size_t>(e.label)].id << "\", color="
          << detail::dot_color(g.edges[static_cast<size_t>(e.label)].color) << "];\n";
    o << "}\n";
    return o.str();
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw error("IOError", "cannot open " + path);
    return json::parse(in, nullptr, true, true);
}

}  // namespace kpg

#endif
