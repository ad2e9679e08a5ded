#include "greedy/decide.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace greedy {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "uncertain";
    }
}

namespace {

WheelVerdict to_wheel(Verdict v) {
    return v == Verdict::Yes ? WheelVerdict::Yes
                             : (v == Verdict::No ? WheelVerdict::No : WheelVerdict::Uncertain);
}

Verdict from_wheel(WheelVerdict v) {
    return v == WheelVerdict::Yes ? Verdict::Yes
                                  : (v == WheelVerdict::No ? Verdict::No : Verdict::Uncertain);
}

Decision decide_deg5(const Tree& t, int r) {
    Decision d;
    d.hub = t.id_of(r);
    std::vector<AngleBound> bounds;
    for (int u : t.neighbors(r)) {
        RootedSubtree sub = subtree_toward(t, r, u);
        AngleAnnotation ann = get_open_angle_annotated(sub);
        for (auto& e : ann.trace) d.trace.push_back(e);
        d.hub_neighbors.push_back(t.id_of(u));
        d.hub_bounds.push_back(ann.result);
        if (ann.result.is_closed()) {
            d.verdict = Verdict::No;
            d.rule = "closed subtree at the degree-5 node " + d.hub;
            d.closed_edge_u = t.id_of(r);
            d.closed_edge_v = t.id_of(u);
            return d;
        }
        bounds.push_back(ann.result);
    }
    if (!sum_exceeds(bounds, Rat(540))) {
        d.verdict = Verdict::No;
        d.rule = "angle sum at most 540 at the degree-5 node " + d.hub;
        d.sum_violation_node = d.hub;
        d.sum_bounds = bounds;
        return d;
    }
    std::vector<Rat> phis;
    for (const auto& b : bounds) phis.push_back(b.value);
    WheelDecision w = decide_membership(WheelInstance::make(phis));
    d.verdict = from_wheel(w.verdict);
    d.rule = w.lemma.empty() ? "wheel membership" : "wheel: " + w.lemma;
    d.hub_bounds = bounds;
    d.wheel = std::move(w);
    return d;
}

Decision decide_deg_le4(const Tree& t) {
    Decision d;
    const int n = t.node_count();
    std::vector<char> processed(n, 0);
    std::vector<AngleBound> bound(n, AngleBound::closed());
    std::vector<int> pending(n);
    for (int v = 0; v < n; ++v) pending[v] = t.degree(v);

    auto finish_yes = [&](int v, std::vector<AngleBound> bounds, const char* why) {
        d.verdict = Verdict::Yes;
        d.rule = why;
        d.hub = t.id_of(v);
        d.hub_neighbors.clear();
        for (int u : t.neighbors(v)) d.hub_neighbors.push_back(t.id_of(u));
        d.hub_bounds = std::move(bounds);
        if (t.degree(v) >= 3) {
            std::vector<Rat> phis;
            for (const auto& b : d.hub_bounds) phis.push_back(b.value);
            d.wheel = decide_membership(WheelInstance::make(phis));
            // Tables guarantee membership here; keep the certificate.
            assert(d.wheel->verdict == WheelVerdict::Yes);
        }
        return d;
    };

    auto mark = [&](int v, const AngleBound& b, const char* rule) {
        processed[v] = 1;
        bound[v] = b;
        d.trace.push_back({t.id_of(v), rule, b});
        for (int u : t.neighbors(v)) --pending[u];
    };
    for (int v = 0; v < n; ++v)
        if (t.degree(v) == 1) mark(v, AngleBound::path(), "leaf");

    while (true) {
        // Deterministic choice: the meeting branch wins, smallest id first.
        int meeting = -1, work = -1;
        for (int v = 0; v < n; ++v) {
            if (processed[v]) continue;
            if (pending[v] == 0 && (meeting < 0 || t.id_of(v) < t.id_of(meeting))) meeting = v;
            if (pending[v] == 1 && (work < 0 || t.id_of(v) < t.id_of(work))) work = v;
        }
        if (meeting >= 0) {
            std::vector<AngleBound> bounds;
            for (int u : t.neighbors(meeting)) bounds.push_back(bound[u]);
            if (sum_exceeds(bounds, Rat((t.degree(meeting) - 2) * 180)))
                return finish_yes(meeting, std::move(bounds), "angle sum above (d-2)*180 at the meeting node");
            d.verdict = Verdict::No;
            d.rule = "angle sum at most (d-2)*180 at node " + t.id_of(meeting);
            d.sum_violation_node = t.id_of(meeting);
            d.sum_bounds = std::move(bounds);
            return d;
        }
        if (work < 0) break;  // all processed without meeting: n <= 2
        int v = work;
        std::vector<AngleBound> children_nt;
        int path_children = 0;
        for (int u : t.neighbors(v)) {
            if (!processed[u]) continue;
            if (bound[u].is_path())
                ++path_children;
            else
                children_nt.push_back(bound[u]);
        }
        if (children_nt.empty()) {
            mark(v, pure_path_star_bound(t.degree(v)), "star");
            continue;
        }
        CombineCase c = classify_case(children_nt, path_children);
        AngleBound b = combine(c);
        if (!b.is_closed()) {
            mark(v, b, case_name(c.label));
            continue;
        }
        // Cases VI/VII: the subtrees below v close up; test the far side.
        d.trace.push_back({t.id_of(v), case_name(c.label), b});
        int w = -1;
        for (int u : t.neighbors(v))
            if (!processed[u]) w = u;
        assert(w >= 0);
        AngleBound far = get_open_angle(subtree_toward(t, v, w));
        if (far.is_closed()) {
            d.verdict = Verdict::No;
            d.rule = "two closed angles at edge " + t.id_of(v) + " - " + t.id_of(w);
            d.closed_edge_u = t.id_of(v);
            d.closed_edge_v = t.id_of(w);
            return d;
        }
        std::vector<AngleBound> bounds;
        for (int u : t.neighbors(v)) bounds.push_back(u == w ? far : bound[u]);
        if (sum_exceeds(bounds, Rat((t.degree(v) - 2) * 180)))
            return finish_yes(v, std::move(bounds), "open far side and angle sum above (d-2)*180");
        d.verdict = Verdict::No;
        d.rule = "angle sum at most (d-2)*180 at node " + t.id_of(v);
        d.sum_violation_node = t.id_of(v);
        d.sum_bounds = std::move(bounds);
        return d;
    }
    d.verdict = Verdict::Yes;
    d.rule = "trivial (at most two nodes)";
    return d;
}

}  // namespace

Decision decide(const Tree& t) {
    t.validate();
    if (t.node_count() <= 2) {
        Decision d;
        d.verdict = Verdict::Yes;
        d.rule = "trivial (at most two nodes)";
        return d;
    }
    for (int v = 0; v < t.node_count(); ++v) {
        if (t.degree(v) >= 6) {
            Decision d;
            d.verdict = Verdict::No;
            d.rule = "node of degree >= 6";
            d.degree_violation_node = t.id_of(v);
            return d;
        }
    }
    std::vector<int> deg5 = t.nodes_of_degree(5);
    if (deg5.size() >= 2) {
        Decision d;
        d.verdict = Verdict::No;
        d.rule = "two nodes of degree 5 (two independent 5-tuples)";
        d.degree_violation_node = t.id_of(deg5[1]);
        return d;
    }
    if (deg5.size() == 1) return decide_deg5(t, deg5[0]);
    return decide_deg_le4(t);
}

// ---------------------------------------------------------------------------
// independent tuple machinery

namespace {

struct Tuple {
    int head;
    int deg;                      // 3, 4 or 5
    std::vector<int> branch_to;   // the deg-1 chosen neighbors
    std::vector<char> node_mask;  // head + branch endpoints
};

struct TupleSearch {
    const Tree& t;
    std::vector<Tuple> tuples;
    std::vector<int> head_of;             // tuple -> head order index
    std::vector<std::vector<int>> by_head;
    std::vector<int> head_weight;
    std::vector<std::vector<char>> compatible;

    explicit TupleSearch(const Tree& tree) : t(tree) {
        int n = t.node_count();
        std::vector<int> heads;
        for (int v = 0; v < n; ++v)
            if (t.degree(v) >= 3 && t.degree(v) <= 5) heads.push_back(v);
        by_head.resize(heads.size());
        for (size_t hi = 0; hi < heads.size(); ++hi) {
            int h = heads[hi];
            int k = t.degree(h);
            head_weight.push_back(k - 2);
            const auto& nb = t.neighbors(h);
            for (int omit = 0; omit < k; ++omit) {
                Tuple tp;
                tp.head = h;
                tp.deg = k;
                tp.node_mask.assign(n, 0);
                tp.node_mask[h] = 1;
                for (int j = 0; j < k; ++j) {
                    if (j == omit) continue;
                    tp.branch_to.push_back(nb[j]);
                    tp.node_mask[nb[j]] = 1;
                }
                by_head[hi].push_back((int)tuples.size());
                head_of.push_back((int)hi);
                tuples.push_back(std::move(tp));
            }
        }
        precompute_compat();
    }

    // Path between two nodes as a list of (min,max) edges.
    std::vector<std::pair<int, int>> path_edges(int a, int b) const {
        int n = t.node_count();
        std::vector<int> parent(n, -2);
        std::deque<int> q{a};
        parent[a] = -1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (v == b) break;
            for (int u : t.neighbors(v))
                if (parent[u] == -2) {
                    parent[u] = v;
                    q.push_back(u);
                }
        }
        std::vector<std::pair<int, int>> out;
        for (int v = b; parent[v] != -1; v = parent[v])
            out.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
        return out;
    }

    void precompute_compat() {
        size_t m = tuples.size();
        compatible.assign(m, std::vector<char>(m, 0));
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = i + 1; j < m; ++j) {
                if (tuples[i].head == tuples[j].head) continue;
                bool disjoint = true;
                for (int v = 0; v < t.node_count() && disjoint; ++v)
                    if (tuples[i].node_mask[v] && tuples[j].node_mask[v]) disjoint = false;
                if (!disjoint) continue;
                std::set<std::pair<int, int>> branches;
                for (int b : tuples[i].branch_to)
                    branches.insert({std::min(tuples[i].head, b), std::max(tuples[i].head, b)});
                for (int b : tuples[j].branch_to)
                    branches.insert({std::min(tuples[j].head, b), std::max(tuples[j].head, b)});
                bool ok = true;
                for (auto& e : path_edges(tuples[i].head, tuples[j].head))
                    if (branches.count(e)) ok = false;
                compatible[i][j] = compatible[j][i] = ok;
            }
        }
    }

    // Maximizes sum of head weights over pairwise-compatible tuples, one
    // per head, stopping at `stop` when reached. `only_triples` restricts
    // to degree-3 heads.
    struct BestSet {
        int score = 0;
        std::vector<int> chosen;
    };

    BestSet maximize(int stop, bool only_triples) {
        BestSet best;
        std::vector<int> heads_order;
        for (size_t hi = 0; hi < by_head.size(); ++hi) {
            if (only_triples && head_weight[hi] != 1) continue;
            heads_order.push_back((int)hi);
        }
        std::vector<int> suffix(heads_order.size() + 1, 0);
        for (int i = (int)heads_order.size() - 1; i >= 0; --i)
            suffix[i] = suffix[i + 1] + (only_triples ? 1 : head_weight[heads_order[i]]);
        std::vector<int> chosen;
        std::function<void(int, int)> dfs = [&](int idx, int score) {
            if (best.score >= stop) return;
            if (score > best.score) {
                best.score = score;
                best.chosen = chosen;
                if (best.score >= stop) return;
            }
            if (idx >= (int)heads_order.size()) return;
            if (score + suffix[idx] <= best.score) return;
            int hi = heads_order[idx];
            for (int ti : by_head[hi]) {
                bool ok = true;
                for (int c : chosen)
                    if (!compatible[ti][c]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                chosen.push_back(ti);
                dfs(idx + 1, score + head_weight[hi]);
                chosen.pop_back();
                if (best.score >= stop) return;
            }
            dfs(idx + 1, score);  // skip this head
        };
        dfs(0, 0);
        return best;
    }
};

}  // namespace

std::optional<TupleCounts> tuple_negative_certificate(const Tree& t) {
    if (t.node_count() > 64) throw std::runtime_error("tuple search limited to 64 nodes");
    TupleSearch search(t);
    auto best = search.maximize(6, false);
    if (best.score < 6) return std::nullopt;
    TupleCounts c;
    for (int ti : best.chosen) {
        int d = search.tuples[ti].deg;
        if (d == 3) ++c.n3;
        if (d == 4) ++c.n4;
        if (d == 5) ++c.n5;
    }
    return c;
}

int max_independent_triples(const Tree& t, int cap) {
    TupleSearch search(t);
    return search.maximize(cap, true).score;
}

BinaryCharacterization binary_tree_characterize(const Tree& t) {
    if (t.max_degree() > 3) throw std::runtime_error("binary characterization needs max degree 3");
    if (t.node_count() > 64) throw std::runtime_error("characterization limited to 64 nodes");
    BinaryCharacterization out;
    out.n3 = max_independent_triples(t, 6);
    if (out.n3 <= 4) {
        out.verdict = Verdict::Yes;
        return out;
    }
    if (out.n3 >= 6) {
        out.verdict = Verdict::No;
        return out;
    }
    // n3 == 5: look for a five-crab whose subtrees are caterpillars of the
    // admissible orders.
    Tree c = contract_degree2(t);
    for (int e0 = 0; e0 < c.node_count(); ++e0) {
        if (c.degree(e0) != 3) continue;
        const auto& nb = c.neighbors(e0);
        for (int ai = 0; ai < 3; ++ai) {
            for (int ci = ai + 1; ci < 3; ++ci) {
                int a0 = nb[ai], c0 = nb[ci];
                if (c.degree(a0) != 3 || c.degree(c0) != 3) continue;
                int t5 = nb[3 - ai - ci];
                std::vector<int> orders;
                bool ok = true;
                auto push_order = [&](int hub, int toward) {
                    auto k = caterpillar_order(subtree_toward(c, hub, toward));
                    if (!k) {
                        ok = false;
                        return;
                    }
                    orders.push_back(*k);
                };
                for (int x : c.neighbors(a0))
                    if (x != e0 && ok) push_order(a0, x);
                for (int x : c.neighbors(c0))
                    if (x != e0 && ok) push_order(c0, x);
                if (ok) push_order(e0, t5);
                if (!ok || orders.size() != 5) continue;
                std::sort(orders.begin(), orders.end());
                bool pattern = (orders[0] == 0 && orders[1] == 0 && orders[2] == 0) ||
                               (orders[0] == 0 && orders[1] == 0 && orders[2] == 1 && orders[3] == 1);
                if (pattern) {
                    out.verdict = Verdict::Yes;
                    out.crab.found = true;
                    out.crab.subtree_orders = orders;
                    return out;
                }
            }
        }
    }
    out.verdict = Verdict::No;
    return out;
}

}  // namespace greedy
