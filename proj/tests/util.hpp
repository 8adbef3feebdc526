#ifndef KPG_TESTS_UTIL_HPP
#define KPG_TESTS_UTIL_HPP

#include <string>

#include "kpg/kpg.hpp"

namespace kpgtest {

inline std::string fixture_path(const std::string& name) {
    return std::string(KPG_FIXTURES) + "/" + name;
}

inline kpg::KGraph load_kgraph(const std::string& name) {
    return kpg::parse_kgraph(kpg::load_json_file(fixture_path(name)));
}

inline kpg::RepKGraph load_rep(const std::string& name) {
    kpg::RepKGraph d =
        kpg::parse_repgraph(kpg::load_json_file(fixture_path(name)), KPG_FIXTURES);
    kpg::ValidationReport r = kpg::validate_rep(d);
    if (!r.ok()) throw kpg::error("BadFixture", name + ": " + r.issues[0].code);
    return d;
}

inline kpg::PathNF path_of(const kpg::KGraph& g, int src_vertex,
                           std::initializer_list<const char*> edge_ids) {
    std::vector<int> es;
    for (const char* id : edge_ids) es.push_back(g.edge_index.at(id));
    return kpg::normalize_path(g, src_vertex, es);
}

}  // namespace kpgtest

#endif
