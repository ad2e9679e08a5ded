// Command-line front end: decide / angle / wheel / draw / verify / enumerate.
// Exit codes: 0 yes/valid, 1 no/invalid, 2 uncertain, 64 usage, 65 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "greedy/decide.hpp"
#include "greedy/embed.hpp"
#include "greedy/generators.hpp"
#include "greedy/opening_angle.hpp"

using nlohmann::json;
using namespace greedy;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUncertain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

json bound_json(const AngleBound& b) {
    json j;
    j["value"] = rat_to_string(b.value);
    j["kind"] = b.is_closed() ? "closed" : (b.is_path() ? "exact" : "sup");
    j["display"] = b.str();
    return j;
}

json assignment_json(const WheelAssignment& a) {
    json j;
    j["ordering"] = a.ordering;
    j["alpha"] = a.alpha;
    j["beta"] = a.beta;
    j["gamma"] = a.gamma;
    j["eps"] = a.eps;
    j["omega"] = a.omega;
    return j;
}

json wheel_json(const WheelDecision& w) {
    json j;
    j["verdict"] = w.verdict == WheelVerdict::Yes ? "yes"
                   : w.verdict == WheelVerdict::No ? "no"
                                                   : "uncertain";
    j["lemma"] = w.lemma;
    if (w.assignment) j["assignment"] = assignment_json(*w.assignment);
    if (!w.attempts.empty()) j["attempts"] = w.attempts;
    if (!w.lp.orderings.empty()) {
        json lp;
        lp["orderings"] = w.lp.orderings;
        lp["feasible"] = std::vector<bool>(w.lp.feasible.begin(), w.lp.feasible.end());
        lp["any_feasible"] = w.lp.any_feasible;
        j["lp"] = lp;
    }
    return j;
}

int verdict_exit(Verdict v) {
    return v == Verdict::Yes ? kExitYes : (v == Verdict::No ? kExitNo : kExitUncertain);
}

void print_assignment(const WheelAssignment& a) {
    std::cout << "  ordering (corner -> bound index):";
    for (int i : a.ordering) std::cout << " " << i;
    std::cout << "\n";
    for (int i = 0; i < a.n(); ++i) {
        std::cout << "  triangle " << i << ": alpha=" << a.alpha[i] << " beta=" << a.beta[i]
                  << " gamma=" << a.gamma[i] << "\n";
    }
    std::cout << "  eps=" << a.eps << " deg, wheel residual=" << a.omega << "\n";
}

int cmd_decide(const std::string& file, bool as_json, bool explain) {
    Tree t = parse_tree(read_file(file));
    Decision d = decide(t);
    if (as_json) {
        json j;
        j["command"] = "decide";
        j["verdict"] = verdict_name(d.verdict);
        j["rule"] = d.rule;
        if (!d.hub.empty()) j["hub"] = d.hub;
        if (!d.hub_bounds.empty()) {
            json bs = json::array();
            for (size_t i = 0; i < d.hub_bounds.size(); ++i) {
                json e = bound_json(d.hub_bounds[i]);
                e["subtree"] = d.hub_neighbors[i];
                bs.push_back(e);
            }
            j["subtree_bounds"] = bs;
        }
        if (d.wheel) j["wheel"] = wheel_json(*d.wheel);
        if (explain) {
            json tr = json::array();
            for (auto& e : d.trace)
                tr.push_back({{"node", e.node}, {"rule", e.rule}, {"bound", e.bound.str()}});
            j["trace"] = tr;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << verdict_name(d.verdict) << ": " << d.rule << "\n";
        if (!d.hub.empty() && !d.hub_bounds.empty()) {
            std::cout << "subtree bounds at " << d.hub << ":";
            for (auto& b : d.hub_bounds) std::cout << " " << b.str();
            std::cout << "\n";
        }
        if (explain) {
            for (auto& e : d.trace)
                std::cout << "  " << e.node << " [" << e.rule << "] -> " << e.bound.str() << "\n";
            if (d.wheel && d.wheel->assignment) print_assignment(*d.wheel->assignment);
        }
    }
    return verdict_exit(d.verdict);
}

int cmd_angle(const std::string& file, const std::string& root, bool as_json) {
    Tree t = parse_tree(read_file(file));
    int r = t.index_of(root);
    if (r < 0) throw ParseError(0, "root node '" + root + "' not in tree");
    if (t.degree(r) != 1) throw ParseError(0, "root must be a leaf (degree 1)");
    RootedSubtree sub{t, r, t.neighbors(r)[0]};
    AngleAnnotation ann = get_open_angle_annotated(sub);
    if (as_json) {
        json j;
        j["command"] = "angle";
        j["root"] = root;
        j["bound"] = bound_json(ann.result);
        json tr = json::array();
        for (auto& e : ann.trace)
            tr.push_back({{"node", e.node}, {"rule", e.rule}, {"bound", e.bound.str()}});
        j["trace"] = tr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ann.result.str() << "\n";
    }
    return ann.result.is_closed() ? kExitNo : kExitYes;
}

int cmd_wheel(const std::string& phis_arg, bool as_json) {
    std::vector<Rat> phis;
    std::istringstream in(phis_arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto r = rat_from_decimal(tok);
        if (!r) throw ParseError(0, "bad angle '" + tok + "'");
        phis.push_back(*r);
    }
    WheelInstance inst = WheelInstance::make(phis);
    WheelDecision w = decide_membership(inst);
    if (as_json) {
        json j;
        j["command"] = "wheel";
        json ps = json::array();
        for (auto& p : inst.phis) ps.push_back(rat_to_string(p));
        j["phis"] = ps;
        j["result"] = wheel_json(w);
        std::cout << j.dump(2) << "\n";
    } else {
        const char* v = w.verdict == WheelVerdict::Yes ? "yes"
                        : w.verdict == WheelVerdict::No ? "no"
                                                        : "uncertain";
        std::cout << v << ": " << w.lemma << "\n";
        if (w.assignment) print_assignment(*w.assignment);
        for (auto& a : w.attempts) std::cout << "  tried: " << a << "\n";
    }
    return w.verdict == WheelVerdict::Yes ? kExitYes
           : w.verdict == WheelVerdict::No ? kExitNo
                                           : kExitUncertain;
}

int cmd_draw(const std::string& file, double shrink, const std::string& out,
             const std::string& svg, bool as_json) {
    Tree t = parse_tree(read_file(file));
    Decision d = decide(t);
    if (d.verdict != Verdict::Yes) {
        std::cerr << "not drawable: " << verdict_name(d.verdict) << " (" << d.rule << ")\n";
        return verdict_exit(d.verdict);
    }
    EmbedOptions opt;
    if (shrink > 0) opt.shrink = shrink;
    auto drawing = embed(t, d, opt);
    if (!drawing) {
        std::cerr << "embedding failed after retries\n";
        return kExitUncertain;
    }
    VerifyReport rep = verify_drawing(*drawing);
    if (!out.empty()) write_file(out, serialize_drawing(*drawing));
    if (!svg.empty()) write_file(svg, export_svg(*drawing));
    if (as_json) {
        json j;
        j["command"] = "draw";
        j["verified"] = rep.ok();
        j["worst_margin"] = rep.worst_margin;
        if (out.empty()) j["drawing"] = serialize_drawing(*drawing);
        std::cout << j.dump(2) << "\n";
    } else {
        if (out.empty() && svg.empty()) std::cout << serialize_drawing(*drawing);
        std::cout << "verified greedy, worst margin " << rep.worst_margin << "\n";
    }
    return kExitYes;
}

int cmd_verify(const std::string& drawing_file, const std::string& tree_file, bool as_json) {
    Tree t = parse_tree(read_file(tree_file));
    Drawing d = parse_drawing(read_file(drawing_file), t);
    VerifyReport rep = verify_drawing(d);
    if (as_json) {
        json j;
        j["command"] = "verify";
        j["greedy_pairwise"] = rep.greedy_pairwise;
        j["greedy_bisector"] = rep.greedy_bisector;
        j["worst_margin"] = rep.worst_margin;
        auto viol = [](const std::vector<Violation>& vs) {
            json a = json::array();
            for (auto& v : vs)
                a.push_back({{"s", v.s}, {"t", v.t}, {"u", v.u}, {"slack", v.slack}});
            return a;
        };
        j["pairwise_violations"] = viol(rep.pairwise_violations);
        j["bisector_violations"] = viol(rep.bisector_violations);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (rep.ok() ? "greedy" : "not greedy") << ", worst margin " << rep.worst_margin
                  << "\n";
        for (auto& v : rep.pairwise_violations)
            std::cout << "  pair (" << v.s << " -> " << v.t << ") via " << v.u
                      << " slack " << v.slack << "\n";
    }
    return rep.ok() ? kExitYes : kExitNo;
}

int cmd_enumerate(int n, int max_degree, bool count_only, bool as_json) {
    auto trees = enumerate_trees(n, max_degree);
    if (as_json) {
        json j;
        j["command"] = "enumerate";
        j["n"] = n;
        j["max_degree"] = max_degree;
        j["count"] = trees.size();
        if (!count_only) {
            json ts = json::array();
            for (auto& t : trees) ts.push_back(serialize_tree(t));
            j["trees"] = ts;
        }
        std::cout << j.dump(2) << "\n";
    } else if (count_only) {
        std::cout << trees.size() << "\n";
    } else {
        for (size_t i = 0; i < trees.size(); ++i) {
            std::cout << "# tree " << i << "\n" << serialize_tree(trees[i]) << "\n";
        }
    }
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("GREEDY_EMBED_THREADS")) {
#ifdef _OPENMP
        int k = std::atoi(env);
        if (k > 0) omp_set_num_threads(k);
#endif
    }
    CLI::App app{"greedy-drawable tree recognition, wheel solving and drawing"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");
    unsigned seed = 0;
    app.add_option("--seed", seed, "seed for randomized steps (constructions are deterministic)");

    std::string tree_file, root, phis, drawing_file, out_file, svg_file;
    bool explain = false, count_only = false;
    double shrink = 0;
    int n = 0, max_degree = 6;

    auto* c_decide = app.add_subcommand("decide", "does the tree admit a greedy drawing?");
    c_decide->add_option("tree", tree_file)->required();
    c_decide->add_flag("--explain", explain, "dump the annotation trace");

    auto* c_angle = app.add_subcommand("angle", "tight opening-angle bound of a rooted subtree");
    c_angle->add_option("tree", tree_file)->required();
    c_angle->add_option("--root", root, "leaf acting as the root")->required();

    auto* c_wheel = app.add_subcommand("wheel", "membership of an angle set in P^n");
    c_wheel->add_option("--phis", phis, "comma-separated bounds, e.g. 180,120,105,93.75,60")
        ->required();

    auto* c_draw = app.add_subcommand("draw", "construct a verified greedy drawing");
    c_draw->add_option("tree", tree_file)->required();
    c_draw->add_option("--shrink", shrink, "blob scale (default 1e-2)");
    c_draw->add_option("-o,--out", out_file, "write the drawing file");
    c_draw->add_option("--svg", svg_file, "write an SVG rendering");

    auto* c_verify = app.add_subcommand("verify", "check a drawing for greediness");
    c_verify->add_option("drawing", drawing_file)->required();
    c_verify->add_option("--tree", tree_file)->required();

    auto* c_enum = app.add_subcommand("enumerate", "all non-isomorphic trees");
    c_enum->add_option("--n", n, "node count (<= 20)")->required();
    c_enum->add_option("--max-degree", max_degree, "degree bound (default 6)");
    c_enum->add_flag("--count-only", count_only);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (c_decide->parsed()) return cmd_decide(tree_file, as_json, explain);
        if (c_angle->parsed()) return cmd_angle(tree_file, root, as_json);
        if (c_wheel->parsed()) return cmd_wheel(phis, as_json);
        if (c_draw->parsed()) return cmd_draw(tree_file, shrink, out_file, svg_file, as_json);
        if (c_verify->parsed()) return cmd_verify(drawing_file, tree_file, as_json);
        if (c_enum->parsed()) return cmd_enumerate(n, max_degree, count_only, as_json);
    } catch (const ParseError& e) {
        std::cerr << "input error (line " << e.line << "): " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
