#include "greedy/opening_angle.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace greedy {

AngleAnnotation get_open_angle_annotated(const RootedSubtree& sub) {
    const Tree& t = sub.tree;
    const int n = t.node_count();
    AngleAnnotation ann;
    if (n <= 2) {
        // Convention from the procedure's correctness proof: one- and
        // two-node subtrees have opening angle 180.
        ann.result = AngleBound::path();
        return ann;
    }
    if (t.degree(sub.root) != 1) throw std::runtime_error("root must have degree 1");

    for (int v = 0; v < n; ++v) {
        if (v == sub.root) continue;
        if (t.degree(v) >= 5) {
            ann.result = AngleBound::closed();
            ann.trace.push_back({t.id_of(v), "deg5", ann.result});
            return ann;
        }
    }

    std::vector<char> processed(n, 0);
    std::vector<AngleBound> bound(n, AngleBound::closed());
    std::vector<int> pending(n, 0);  // unprocessed neighbors
    std::deque<int> queue;
    int visits = 0;

    for (int v = 0; v < n; ++v) pending[v] = t.degree(v);
    auto mark = [&](int v, const AngleBound& b, const char* rule) {
        processed[v] = 1;
        bound[v] = b;
        ++visits;
        ann.trace.push_back({t.id_of(v), rule, b});
        ann.per_node.emplace_back(t.id_of(v), b);
        for (int u : t.neighbors(v)) {
            if (--pending[u] == 1 && !processed[u] && u != sub.root) queue.push_back(u);
        }
    };
    for (int v = 0; v < n; ++v)
        if (v != sub.root && t.degree(v) == 1) mark(v, AngleBound::path(), "leaf");

    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (processed[v] || pending[v] != 1) continue;
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
        } else {
            CombineCase c = classify_case(children_nt, path_children);
            AngleBound b = combine(c);
            if (b.is_closed()) {
                ann.result = b;
                ann.trace.push_back({t.id_of(v), case_name(c.label), b});
                return ann;
            }
            mark(v, b, case_name(c.label));
        }
    }

    int top = t.neighbors(sub.root)[0];
    if (!processed[top]) throw std::runtime_error("sweep did not reach the root's neighbor");
    assert(visits == n - 1);
    ann.result = bound[top];
    return ann;
}

AngleBound get_open_angle(const RootedSubtree& sub) { return get_open_angle_annotated(sub).result; }

Rat caterpillar_bound(int k) { return Rat(90) + Rat(30) / (BigInt(1) << k); }

std::optional<int> caterpillar_order(const RootedSubtree& sub) {
    if (sub.tree.max_degree() > 3) throw std::runtime_error("caterpillar_order: max degree 3 required");
    if (sub.tree.node_count() <= 2) return std::nullopt;
    RootedSubtree c = sub.contracted();
    const Tree& t = c.tree;
    if (t.node_count() < 4) return std::nullopt;
    if (t.degree(c.root) != 1) return std::nullopt;
    // Walk the spine: every spine node has one leaf child and one spine
    // child, except the last which has two leaf children.
    int prev = c.root;
    int cur = t.neighbors(c.root)[0];
    int k = 0;
    while (true) {
        if (t.degree(cur) != 3) return std::nullopt;
        std::vector<int> leaves, internals;
        for (int u : t.neighbors(cur)) {
            if (u == prev) continue;
            (t.degree(u) == 1 ? leaves : internals).push_back(u);
        }
        if (leaves.size() == 2 && internals.empty()) return k;  // b_{k+1}
        if (leaves.size() == 1 && internals.size() == 1) {
            prev = cur;
            cur = internals[0];
            ++k;
            continue;
        }
        return std::nullopt;
    }
}

}  // namespace greedy
