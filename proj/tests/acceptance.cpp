// Acceptance suite: one check per release criterion, one pass/fail line
// each. Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "greedy/decide.hpp"
#include "greedy/embed.hpp"
#include "greedy/generators.hpp"
#include "greedy/opening_angle.hpp"

using namespace greedy;

namespace {

int failures = 0;

void run(int number, const char* title, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2d: %-34s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, title,
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

Tree random_subdivision(const Tree& t, std::mt19937& rng, int rounds) {
    Tree cur = t;
    for (int i = 0; i < rounds; ++i) {
        auto edges = cur.edges();
        auto [u, v] = edges[std::uniform_int_distribution<size_t>(0, edges.size() - 1)(rng)];
        cur = subdivide_edge(cur, u, v, "as" + std::to_string(i) + "x" + std::to_string(rng() % 100000));
    }
    return cur;
}

RootedSubtree rooted_at(const Tree& t, const std::string& leaf) {
    int r = t.index_of(leaf);
    return {t, r, t.neighbors(r)[0]};
}

WheelInstance wheel_inst(std::initializer_list<const char*> vals) {
    std::vector<Rat> phis;
    for (auto* v : vals) phis.push_back(*rat_from_decimal(v));
    return WheelInstance::make(phis);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");

    run(1, "Q_k angle table, k = 0..6", [](std::string& detail) {
        std::mt19937 rng(1001);
        for (int k = 0; k <= 6; ++k) {
            Rat expect = caterpillar_bound(k);
            for (int rep = 0; rep < 20; ++rep) {
                Tree sub = random_subdivision(make_caterpillar(k), rng, 1 + (int)(rng() % 8));
                AngleBound b = get_open_angle(rooted_at(sub, "b0"));
                if (b.kind != BoundKind::StrictSupremum || b.value != expect) {
                    detail = "k=" + std::to_string(k) + " got " + b.str();
                    return false;
                }
            }
        }
        return true;
    });

    run(2, "star family K_{1,m}", [](std::string& detail) {
        for (int m = 1; m <= 5; ++m)
            if (decide(make_star(m)).verdict != Verdict::Yes) {
                detail = "K_{1," + std::to_string(m) + "} not yes";
                return false;
            }
        for (int m = 6; m <= 8; ++m)
            if (decide(make_star(m)).verdict != Verdict::No) {
                detail = "K_{1," + std::to_string(m) + "} not no";
                return false;
            }
        return true;
    });

    run(3, "complete binary tree, 31 nodes", [](std::string& detail) {
        Tree t = make_complete_binary(31);
        if (decide(t).verdict != Verdict::No) {
            detail = "decide not no";
            return false;
        }
        auto counts = tuple_negative_certificate(t);
        if (!counts || counts->n3 < 6) {
            detail = "tuple certificate missing or n3 < 6";
            return false;
        }
        return true;
    });

    run(4, "five-crab suite", [](std::string& detail) {
        auto want = [&](std::vector<int> orders, Verdict v) {
            if (decide(make_five_crab(orders)).verdict != v) {
                detail = "orders {" + std::to_string(orders[0]) + "," + std::to_string(orders[1]) +
                         "," + std::to_string(orders[2]) + "," + std::to_string(orders[3]) + "," +
                         std::to_string(orders[4]) + "}";
                return false;
            }
            return true;
        };
        if (!want({0, 0, 0, 0, 0}, Verdict::Yes)) return false;
        for (int k = 0; k <= 3; ++k)
            if (!want({0, 0, 1, 1, k}, Verdict::Yes)) return false;
        if (!want({0, 1, 1, 1, 1}, Verdict::No)) return false;
        if (!want({0, 0, 1, 2, 2}, Verdict::No)) return false;
        return true;
    });

    run(5, "Fig. 11 wheel trio", [](std::string& detail) {
        auto a = decide_membership(wheel_inst({"180", "105", "105", "105", "60"}));
        if (a.verdict != WheelVerdict::No || a.lemma != "LP infeasible for all orderings") {
            detail = "first instance: " + a.lemma;
            return false;
        }
        auto b = decide_membership(wheel_inst({"180", "120", "105", "93.75", "60"}));
        if (b.verdict != WheelVerdict::Yes || !b.assignment) {
            detail = "second instance not yes-with-assignment";
            return false;
        }
        auto rep = verify_assignment(wheel_inst({"180", "120", "105", "93.75", "60"}), *b.assignment);
        if (!rep.ok || std::abs(b.assignment->omega) > 1e-9 || b.assignment->eps < 1e-6) {
            detail = "second instance certificate out of tolerance";
            return false;
        }
        auto c = decide_membership(wheel_inst({"180", "120", "120", "120", "30"}));
        if (c.verdict != WheelVerdict::Uncertain) {
            detail = "third instance not uncertain";
            return false;
        }
        return true;
    });

    run(6, "Table 2 boundaries", [](std::string& detail) {
        struct Case {
            std::initializer_list<const char*> phis;
            WheelVerdict want;
        };
        std::vector<Case> cases = {
            {{"180", "180", "180", "60", "60"}, WheelVerdict::No},
            {{"180", "180", "180", "60", "60.0625"}, WheelVerdict::Yes},
            {{"180", "180", "120", "100", "20"}, WheelVerdict::No},
            {{"180", "180", "120", "100", "20.0625"}, WheelVerdict::Yes},
        };
        for (auto& c : cases) {
            auto d = decide_membership(wheel_inst(c.phis));
            if (d.verdict != c.want) {
                detail = "wrong verdict near a boundary";
                return false;
            }
            if (c.want == WheelVerdict::Yes &&
                !(d.assignment && verify_assignment(wheel_inst(c.phis), *d.assignment).ok)) {
                detail = "yes without a verified assignment";
                return false;
            }
        }
        return true;
    });

    run(7, "oracle equivalence on binary trees", [](std::string& detail) {
        int tested = 0;
        for (int n = 4; n <= 16; ++n) {
            for (auto& t : enumerate_trees(n, 3)) {
                if (binary_tree_characterize(t).verdict != decide(t).verdict) {
                    detail = "mismatch on an enumerated tree with n=" + std::to_string(n);
                    return false;
                }
                ++tested;
            }
        }
        std::mt19937 rng(2077);
        for (int it = 0; it < 500; ++it) {
            Tree t = random_tree(6 + (int)(rng() % 19), 3, rng);
            if (binary_tree_characterize(t).verdict != decide(t).verdict) {
                detail = "mismatch on a random tree";
                return false;
            }
            ++tested;
        }
        detail = std::to_string(tested) + " trees";
        return true;
    });

    run(8, "subdivision invariance of decide", [](std::string& detail) {
        std::mt19937 rng(31337);
        for (int it = 0; it < 200; ++it) {
            Tree t = random_tree(4 + (int)(rng() % 12), 5, rng);
            Verdict v = decide(t).verdict;
            if (decide(subdivide_all_edges(t)).verdict != v) {
                detail = "verdict changed under subdivision";
                return false;
            }
        }
        return true;
    });

    run(9, "embedder soundness", [](std::string& detail) {
        std::vector<std::pair<std::string, Tree>> cases;
        for (int n : {2, 7, 20}) cases.emplace_back("path" + std::to_string(n), make_path(n));
        for (int m : {3, 4, 5}) cases.emplace_back("star" + std::to_string(m), make_star(m));
        for (int k = 0; k <= 3; ++k) {
            Tree t = make_caterpillar(k);
            t.add_edge("b0", "t1");
            t.add_edge("t1", "t2");
            cases.emplace_back("Q" + std::to_string(k) + "+path", t);
        }
        cases.emplace_back("five-crab", make_five_crab({0, 0, 0, 0, 0}));
        cases.emplace_back("fig11b",
                           make_degree5_tree({180 * 16, 120 * 16, 105 * 16, 1500, 60 * 16}));
        for (auto& [name, t] : cases) {
            Decision dec = decide(t);
            if (dec.verdict != Verdict::Yes) {
                detail = name + " not yes";
                return false;
            }
            auto d = embed(t, dec);
            if (!d) {
                detail = name + " failed to embed";
                return false;
            }
            auto rep = verify_drawing(*d);
            if (!rep.ok() || !(rep.worst_margin > 0)) {
                detail = name + " drawing not verified";
                return false;
            }
        }
        return true;
    });

    run(10, "verifier equivalence, 10^4 drawings", [](std::string& detail) {
        std::mt19937 rng(4242);
        std::uniform_real_distribution<double> coord(-1.0, 1.0);
        std::normal_distribution<double> jitter(0.0, 0.02);
        int greedy_count = 0;
        for (int it = 0; it < 10000; ++it) {
            Drawing d;
            if (it % 3 == 0) {
                // perturbed greedy construction
                Tree t = (it % 2 == 0) ? make_star(3 + (int)(rng() % 3))
                                       : make_path(3 + (int)(rng() % 10));
                auto e = embed(t, decide(t));
                if (!e) {
                    detail = "construction failed";
                    return false;
                }
                d = *e;
                if (it % 6 < 3)
                    for (auto& p : d.pos) p = p + Vec2{jitter(rng), jitter(rng)};
            } else {
                Tree t = random_tree(3 + (int)(rng() % 12), 6, rng);
                d.tree = t;
                d.pos.resize(t.node_count());
                for (auto& p : d.pos) p = {coord(rng), coord(rng)};
            }
            auto rep = verify_drawing(d);
            if (rep.greedy_pairwise != rep.greedy_bisector) {
                detail = "criteria disagree";
                return false;
            }
            greedy_count += rep.ok() ? 1 : 0;
        }
        detail = std::to_string(greedy_count) + " of 10000 greedy";
        return true;
    });

    run(11, "wheel certificate geometry", [](std::string& detail) {
        std::vector<WheelInstance> insts = {
            wheel_inst({"180", "120", "105", "93.75", "60"}),
            wheel_inst({"180", "180", "180", "180", "10"}),
            wheel_inst({"180", "180", "180", "60", "60.0625"}),
            wheel_inst({"180", "180", "120", "100", "20.0625"}),
            wheel_inst({"110", "110", "110", "110", "110"}),
            wheel_inst({"100", "100", "100"}),
            wheel_inst({"180", "120", "105", "40"}),
            wheel_inst({"180", "105", "105", "105"}),
        };
        for (auto& wi : insts) {
            auto d = decide_membership(wi);
            if (d.verdict != WheelVerdict::Yes || !d.assignment) {
                detail = "missing assignment";
                return false;
            }
            auto rep = verify_assignment(wi, *d.assignment);
            if (!rep.ok || rep.closure_residual > 1e-7 || !(rep.min_star_margin > 0)) {
                detail = "geometry check failed";
                return false;
            }
        }
        return true;
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILURES", failures);
    return failures;
}
