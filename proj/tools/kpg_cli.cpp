// kpg: symbolic computation for k-graphs, representation k-graphs,
// Kumjian-Pask algebra arithmetic and module verdicts.
//
// Exit codes: 0 success / positive decision, 1 negative decision, 2 error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kpg/kpg.hpp"

namespace {

using namespace kpg;

struct Session {
    std::string field = "q";  // "q" or "fp:P"
    std::string out_path;
    bool json_out = false;

    bool is_fp() const { return field.rfind("fp:", 0) == 0; }
    void configure_field() const {
        if (field == "q") return;
        if (!is_fp()) throw error("UsageError", "--field must be q or fp:P");
        int64_t p = std::stoll(field.substr(3));
        if (p < 2 || p >= (int64_t{1} << 31)) throw error("UsageError", "prime out of range");
        for (int64_t t = 2; t * t <= p; ++t)
            if (p % t == 0) throw error("UsageError", std::to_string(p) + " is not prime");
        ScalarField<Fp>::p = p;
    }

    int emit(const std::string& text, const json& report, int code) const {
        std::string s = json_out ? emit_document(report) : text;
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << s;
        } else {
            std::cout << s;
        }
        return code;
    }
};

std::string dir_of(const std::string& path) {
    auto p = std::filesystem::path(path).parent_path();
    return p.empty() ? "." : p.string();
}

struct Loaded {
    bool is_rep = false;
    KGraph g;
    RepKGraph d;
};

Loaded load(const std::string& path) {
    json j = load_json_file(path);
    Loaded l;
    std::string kind = j.value("kind", "");
    if (kind == "kgraph") {
        l.g = parse_kgraph(j);
    } else if (kind == "repgraph") {
        l.is_rep = true;
        l.d = parse_repgraph(j, dir_of(path));
    } else {
        throw error("SchemaError", "/kind: expected kgraph or repgraph");
    }
    return l;
}

RepKGraph load_rep(const std::string& path) {
    Loaded l = load(path);
    if (!l.is_rep) throw error("UsageError", path + " is not a repgraph document");
    ValidationReport base_rep = validate_kgraph(*l.d.base);
    if (!base_rep.ok()) throw error("InvalidBase", base_rep.issues[0].code);
    ValidationReport rep = validate_rep(l.d);
    if (!rep.ok()) throw error("InvalidRep", rep.issues[0].code + ": " + rep.issues[0].detail);
    return l.d;
}

json issues_json(const ValidationReport& r) {
    json out = json::array();
    for (const Issue& i : r.issues) out.push_back({{"code", i.code}, {"detail", i.detail}});
    return out;
}

int cmd_validate(const Session& s, const std::string& path) {
    Loaded l = load(path);
    ValidationReport r = l.is_rep ? validate_rep(l.d) : validate_kgraph(l.g);
    if (l.is_rep) {
        ValidationReport base_rep = validate_kgraph(*l.d.base);
        for (const Issue& i : base_rep.issues) r.add("Base" + i.code, i.detail);
    }
    json rep{{"command", "validate"}, {"valid", r.ok()}, {"issues", issues_json(r)}};
    std::string text = r.ok() ? "valid: true\n" : "valid: false\n";
    for (const Issue& i : r.issues) text += "  " + i.code + ": " + i.detail + "\n";
    return s.emit(text, rep, r.ok() ? 0 : 1);
}

VertexPartition load_partition(const RepKGraph& d, const std::string& path) {
    json j = load_json_file(path);
    if (!j.contains("blocks") || !j["blocks"].is_array())
        throw error("SchemaError", "/blocks: array required");
    VertexPartition p;
    for (const auto& blk : j["blocks"]) {
        std::vector<int> b;
        for (const auto& v : blk) b.push_back(d.vertex(v.get<std::string>()));
        p.push_back(b);
    }
    return p;
}

int cmd_quotient(const Session& s, const std::string& path, const std::string& by) {
    RepKGraph d = load_rep(path);
    VertexPartition p = (by == "sim") ? sim_relation(d) : load_partition(d, by);
    RepKGraph q = quotient(d, p);
    json doc = emit_repgraph(q);
    // the quotient document is the payload in both modes
    std::string text = emit_document(doc);
    return s.emit(text, doc, 0);
}

int cmd_irreducible(const Session& s, const std::string& path, const char* name) {
    RepKGraph d = load_rep(path);
    auto w = submodule_witness(d);
    json rep{{"command", name}, {"result", !w.has_value()}};
    std::string text = std::string(name) + ": " + (w ? "false" : "true") + "\n";
    if (w) {
        rep["witness"] = {d.core_vertices[static_cast<size_t>(w->first)],
                          d.core_vertices[static_cast<size_t>(w->second)]};
        text += "witness: " + d.core_vertices[static_cast<size_t>(w->first)] + " ~ " +
                d.core_vertices[static_cast<size_t>(w->second)] + "\n";
    }
    return s.emit(text, rep, w ? 1 : 0);
}

template <class S>
int run_act(const Session& s, const RepKGraph& d, const std::string& elem,
            const std::string& vec) {
    KPElement<S> a = parse_element<S>(d.g(), elem);
    ModuleVector<S> x = parse_vector<S>(d, vec);
    ModuleVector<S> y = act_element(d, a, x);
    json entries = json::array();
    for (const auto& [addr, c] : y.entries)
        entries.push_back({{"addr", addr_str(d, addr)}, {"coef", scalar_str(c)}});
    json rep{{"command", "act"}, {"result", entries}};
    return s.emit(vec_str(d, y) + "\n", rep, 0);
}

int cmd_pi1(const Session& s, const std::string& path, const std::string& base) {
    RepKGraph d = load_rep(path);
    int y = base.empty() ? 0 : d.vertex(base);
    GroupPresentation p = presentation(d, y);
    GroupClass c = classify_group(p);
    json rels = json::array();
    std::string text = "generators:";
    for (const auto& g : p.generators) text += " " + g;
    text += "\nrelators:\n";
    for (const auto& r : p.relators) {
        json rel = json::array();
        std::string line = "  ";
        for (int x : r) {
            rel.push_back((x > 0 ? "" : "-") + p.generators[static_cast<size_t>(std::abs(x) - 1)]);
            line += std::string(x > 0 ? "" : "-") +
                    p.generators[static_cast<size_t>(std::abs(x) - 1)] + " ";
        }
        rels.push_back(rel);
        text += line + "\n";
    }
    text += "class: " + c.str() + "\n";
    json rep{{"command", "pi1"},
             {"generators", p.generators},
             {"relators", rels},
             {"class", c.str()}};
    return s.emit(text, rep, 0);
}

int cmd_verdict(const Session& s, const std::string& path) {
    RepKGraph d = load_rep(path);
    VerdictResult v = indecomposability_verdict(d);
    std::string verdict = v.verdict == Verdict::Indecomposable ? "Indecomposable" : "Unknown";
    std::string text = verdict + " (" + v.group.str() + ")\n" + v.reason + "\n";
    json rep{{"command", "verdict"},
             {"verdict", verdict},
             {"class", v.group.str()},
             {"reason", v.reason}};
    return s.emit(text, rep, v.verdict == Verdict::Indecomposable ? 0 : 1);
}

int cmd_cover_ball(const Session& s, const std::string& path, int radius,
                   const std::string& base, bool dot) {
    RepKGraph d = load_rep(path);
    VertexAddr y = core_addr(d, base.empty() ? 0 : d.vertex(base));
    CoverBall ball = universal_cover_ball(d, y, radius);
    if (dot) return s.emit(export_dot(ball), json{{"dot", export_dot(ball)}}, 0);
    std::string text = "vertices: " + std::to_string(ball.vertices.size()) +
                       "\nedges: " + std::to_string(ball.edges.size()) +
                       "\ndecided: " + (ball.decided ? "yes" : "no") + "\n";
    json rep{{"command", "cover-ball"},
             {"vertices", ball.vertices.size()},
             {"edges", ball.edges.size()},
             {"decided", ball.decided}};
    return s.emit(text, rep, 0);
}

template <class S>
int run_ann(const Session& s, const RepKGraph& d, int length, int radius,
            const std::string& base) {
    VertexAddr y = core_addr(d, base.empty() ? 0 : d.vertex(base));
    CoverBall ball = universal_cover_ball(d, y, radius);
    AnnResult<S> r = annihilator_ball<S>(ball, length);
    std::string text = "loops: " + std::to_string(r.loops.size()) +
                       "\nkernel dimension: " + std::to_string(r.kernel_basis.size()) + "\n";
    json basis = json::array();
    for (const auto& row : r.kernel_basis) {
        json combo = json::array();
        std::string line = "  ";
        for (size_t i = 0; i < row.size(); ++i) {
            if (ScalarField<S>::is_zero(row[i])) continue;
            combo.push_back(
                {{"coef", scalar_str(row[i])}, {"walk", walk_str(d.g(), r.loops[i])}});
            line += scalar_str(row[i]) + "·(" + walk_str(d.g(), r.loops[i]) + ") ";
        }
        basis.push_back(combo);
        text += line + "\n";
    }
    json rep{{"command", "ann"},
             {"loops", r.loops.size()},
             {"kernel_dimension", r.kernel_basis.size()},
             {"basis", basis}};
    return s.emit(text, rep, 0);
}

int cmd_same_component(const Session& s, const std::string& a, const std::string& b) {
    RepKGraph d1 = load_rep(a);
    RepKGraph d2 = load_rep(b);
    bool same = same_component(d1, d2);
    json rep{{"command", "same-component"}, {"result", same}};
    return s.emit(std::string("same-component: ") + (same ? "true" : "false") + "\n", rep,
                  same ? 0 : 1);
}

int cmd_dot(const Session& s, const std::string& path) {
    Loaded l = load(path);
    std::string dot = l.is_rep ? export_dot(l.d) : export_dot(l.g);
    return s.emit(dot, json{{"dot", dot}}, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic computation for k-graphs and Kumjian-Pask modules"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after the subcommand too

    Session session;
    app.add_option("--field", session.field, "scalar field: q or fp:P")->capture_default_str();
    app.add_option("--out", session.out_path, "write the report to a file");
    app.add_flag("--json", session.json_out, "machine-readable JSON report");

    std::string file, file_b, by = "sim", elem, vec, base;
    int radius = 0, length = 0;
    bool dot_flag = false;

    auto* validate = app.add_subcommand("validate", "validate a document");
    validate->add_option("file", file)->required();
    auto* quot = app.add_subcommand("quotient", "quotient by sim or a partition file");
    quot->add_option("file", file)->required();
    quot->add_option("--by", by, "sim or a partition JSON path")->capture_default_str();
    auto* irr = app.add_subcommand("irreducible", "decide irreducibility");
    irr->add_option("file", file)->required();
    auto* simple = app.add_subcommand("simple", "decide module simplicity");
    simple->add_option("file", file)->required();
    auto* act = app.add_subcommand("act", "apply an algebra element to a vector");
    act->add_option("file", file)->required();
    act->add_option("--elem", elem)->required();
    act->add_option("--vec", vec)->required();
    auto* pi1 = app.add_subcommand("pi1", "fundamental group presentation");
    pi1->add_option("file", file)->required();
    pi1->add_option("--base", base);
    auto* verdict = app.add_subcommand("verdict", "indecomposability verdict");
    verdict->add_option("file", file)->required();
    auto* ball = app.add_subcommand("cover-ball", "universal cover ball");
    ball->add_option("file", file)->required();
    ball->add_option("--radius", radius)->required();
    ball->add_option("--base", base);
    ball->add_flag("--dot", dot_flag, "emit the ball as DOT");
    auto* ann = app.add_subcommand("ann", "annihilator basis at ball scale");
    ann->add_option("file", file)->required();
    ann->add_option("--length", length)->required();
    ann->add_option("--radius", radius)->required();
    ann->add_option("--base", base);
    auto* same = app.add_subcommand("same-component", "compare two repgraphs");
    same->add_option("a", file)->required();
    same->add_option("b", file_b)->required();
    auto* dot = app.add_subcommand("dot", "DOT export");
    dot->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        session.configure_field();
        bool fp = session.is_fp();
        if (validate->parsed()) return cmd_validate(session, file);
        if (quot->parsed()) return cmd_quotient(session, file, by);
        if (irr->parsed()) return cmd_irreducible(session, file, "irreducible");
        if (simple->parsed()) return cmd_irreducible(session, file, "simple");
        if (act->parsed()) {
            RepKGraph d = load_rep(file);
            return fp ? run_act<Fp>(session, d, elem, vec)
                      : run_act<Rational>(session, d, elem, vec);
        }
        if (pi1->parsed()) return cmd_pi1(session, file, base);
        if (verdict->parsed()) return cmd_verdict(session, file);
        if (ball->parsed()) return cmd_cover_ball(session, file, radius, base, dot_flag);
        if (ann->parsed()) {
            RepKGraph d = load_rep(file);
            return fp ? run_ann<Fp>(session, d, length, radius, base)
                      : run_ann<Rational>(session, d, length, radius, base);
        }
        if (same->parsed()) return cmd_same_component(session, file, file_b);
        if (dot->parsed()) return cmd_dot(session, file);
    } catch (const kpg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
