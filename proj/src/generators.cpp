#include "greedy/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace greedy {

Tree make_path(int n) {
    Tree t;
    if (n <= 0) throw std::runtime_error("need n >= 1");
    t.add_node("p0");
    for (int i = 1; i < n; ++i) t.add_edge("p" + std::to_string(i - 1), "p" + std::to_string(i));
    return t;
}

Tree make_star(int leaves) {
    Tree t;
    t.add_node("r");
    for (int i = 0; i < leaves; ++i) t.add_edge("r", "x" + std::to_string(i + 1));
    return t;
}

Tree make_complete_binary(int nodes) {
    Tree t;
    t.add_node("n1");
    for (int i = 2; i <= nodes; ++i)
        t.add_edge("n" + std::to_string(i / 2), "n" + std::to_string(i));
    return t;
}

Tree make_caterpillar(int order, const std::string& prefix) {
    Tree t;
    auto b = [&](int i) { return prefix + "b" + std::to_string(i); };
    auto c = [&](int i) { return prefix + "c" + std::to_string(i); };
    t.add_node(b(0));
    for (int i = 1; i <= order + 2; ++i) t.add_edge(b(i - 1), b(i));
    for (int i = 1; i <= order + 1; ++i) t.add_edge(b(i), c(i));
    return t;
}

void attach(Tree& host, const std::string& host_node, const Tree& t, const std::string& t_root,
            const std::string& prefix) {
    host.add_edge(host_node, prefix + t_root);
    for (auto [u, v] : t.edges()) host.add_edge(prefix + t.id_of(u), prefix + t.id_of(v));
}

Tree make_five_crab(const std::vector<int>& orders) {
    if (orders.size() != 5) throw std::runtime_error("five orders required");
    Tree t;
    t.add_edge("a0", "e0");
    t.add_edge("e0", "c0");
    const char* hubs[5] = {"a0", "a0", "c0", "c0", "e0"};
    for (int i = 0; i < 5; ++i) {
        Tree q = make_caterpillar(orders[i], "");
        std::string prefix = "t" + std::to_string(i + 1) + "_";
        // b0 of the caterpillar is its root; the hub plays that role, so we
        // hook the hub straight to b1.
        t.add_edge(hubs[i], prefix + "b1");
        for (auto [u, v] : q.edges()) {
            if (q.id_of(u) == "b0" || q.id_of(v) == "b0") continue;
            t.add_edge(prefix + q.id_of(u), prefix + q.id_of(v));
        }
    }
    return t;
}

Tree make_degree5_tree(const std::vector<int>& numerator16ths) {
    // Bounds are passed as multiples of 1/16 degree: 180*16, 120*16, ...
    if (numerator16ths.size() != 5) throw std::runtime_error("five bounds required");
    Tree t;
    t.add_node("r");
    for (int i = 0; i < 5; ++i) {
        std::string p = "s" + std::to_string(i + 1) + "_";
        int b = numerator16ths[i];
        if (b == 180 * 16) {
            t.add_edge("r", p + "a");
            t.add_edge(p + "a", p + "b");
        } else if (b == 60 * 16) {
            t.add_edge("r", p + "a");
            for (int j = 0; j < 3; ++j) t.add_edge(p + "a", p + "l" + std::to_string(j));
        } else if (b == 30 * 16) {
            // Two order-1 caterpillars merged at one node: case IV, 105+105-180.
            t.add_edge("r", p + "m");
            for (int s = 0; s < 2; ++s) {
                Tree q = make_caterpillar(1, "");
                std::string qp = p + "q" + std::to_string(s) + "_";
                t.add_edge(p + "m", qp + "b1");
                for (auto [u, v] : q.edges()) {
                    if (q.id_of(u) == "b0" || q.id_of(v) == "b0") continue;
                    t.add_edge(qp + q.id_of(u), qp + q.id_of(v));
                }
            }
        } else {
            // 90 + 30/2^k degrees, i.e. (90*16 + 30*16/2^k) sixteenths.
            int k = -1;
            for (int kk = 0; kk <= 6; ++kk)
                if (b == 90 * 16 + (30 * 16) / (1 << kk)) k = kk;
            if (k < 0) throw std::runtime_error("unsupported bound");
            Tree q = make_caterpillar(k, "");
            t.add_edge("r", p + "b1");
            for (auto [u, v] : q.edges()) {
                if (q.id_of(u) == "b0" || q.id_of(v) == "b0") continue;
                t.add_edge(p + q.id_of(u), p + q.id_of(v));
            }
        }
    }
    return t;
}

Tree random_tree(int n, int max_degree, std::mt19937& rng) {
    if (n < 1) throw std::runtime_error("need n >= 1");
    Tree t;
    t.add_node("v0");
    std::vector<int> deg(n, 0);
    for (int i = 1; i < n; ++i) {
        std::vector<int> candidates;
        for (int v = 0; v < i; ++v)
            if (deg[v] < max_degree) candidates.push_back(v);
        if (candidates.empty()) throw std::runtime_error("degree cap unreachable");
        int pick = candidates[std::uniform_int_distribution<int>(0, (int)candidates.size() - 1)(rng)];
        t.add_edge("v" + std::to_string(pick), "v" + std::to_string(i));
        ++deg[pick];
        ++deg[i];
    }
    return t;
}

namespace {

// Canonical rooted shapes, memoized by (size, root child cap). Children of
// non-root nodes are capped at inner_cap - 1 so inner degrees stay <= cap.
struct ShapeGen {
    int inner_cap;  // max degree of non-root nodes
    std::map<std::pair<int, int>, std::vector<std::string>> memo;

    const std::vector<std::string>& rooted(int size, int root_child_cap) {
        auto key = std::make_pair(size, root_child_cap);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<std::string> out;
        if (size == 1) {
            out.push_back("()");
        } else {
            std::vector<std::string> acc;
            build(size - 1, root_child_cap, size - 1, nullptr, acc, out);
        }
        std::sort(out.begin(), out.end());
        return memo.emplace(key, std::move(out)).first->second;
    }

    // Children form a non-increasing sequence of (size, shape) pairs so each
    // multiset appears exactly once. max_shape bounds the shape only at
    // max_child_size (the size of the previously chosen sibling).
    void build(int remaining, int slots, int max_child_size, const std::string* max_shape,
               std::vector<std::string>& acc, std::vector<std::string>& out) {
        if (remaining == 0) {
            std::string s = "(";
            for (auto& c : acc) s += c;
            s += ")";
            out.push_back(s);
            return;
        }
        if (slots <= 0) return;
        for (int sz = std::min(remaining, max_child_size); sz >= 1; --sz) {
            if ((long long)sz * slots < remaining) break;
            const auto& shapes = rooted(sz, inner_cap - 1);
            for (const auto& sh : shapes) {
                if (sz == max_child_size && max_shape && sh > *max_shape) continue;
                acc.push_back(sh);
                build(remaining - sz, slots - 1, sz, &sh, acc, out);
                acc.pop_back();
            }
        }
    }
};

// Converts a "()" shape into a Tree.
Tree shape_to_tree(const std::string& shape) {
    Tree t;
    int counter = 0;
    std::vector<int> stack;
    for (char c : shape) {
        if (c == '(') {
            int v = t.add_node("v" + std::to_string(counter++));
            if (!stack.empty()) t.add_edge_idx(stack.back(), v);
            stack.push_back(v);
        } else {
            stack.pop_back();
        }
    }
    return t;
}

Tree join_shapes(const std::string& a, const std::string& b) {
    Tree t = shape_to_tree(a);
    int offset = t.node_count();
    Tree tb = shape_to_tree(b);
    for (int v = 0; v < tb.node_count(); ++v) t.add_node("w" + std::to_string(v + offset));
    for (auto [u, v] : tb.edges())
        t.add_edge("w" + std::to_string(u + offset), "w" + std::to_string(v + offset));
    t.add_edge("v0", "w" + std::to_string(offset));
    return t;
}

}  // namespace

std::vector<Tree> enumerate_trees(int n, int max_degree) {
    if (n < 1 || n > 20) throw std::runtime_error("supported range is 1 <= n <= 20");
    if (max_degree < 1) throw std::runtime_error("max_degree >= 1 required");
    std::vector<Tree> out;
    if (n == 1) {
        Tree t;
        t.add_node("v0");
        out.push_back(t);
        return out;
    }
    if (n == 2) {
        Tree t;
        t.add_edge("v0", "v1");
        out.push_back(t);
        return out;
    }
    ShapeGen gen{max_degree, {}};
    // Single centroid: all child subtrees of the root have <= (n-1)/2 nodes.
    {
        std::vector<std::string> acc;
        std::vector<std::string> shapes;
        gen.build(n - 1, max_degree, (n - 1) / 2, nullptr, acc, shapes);
        std::sort(shapes.begin(), shapes.end());
        for (const auto& s : shapes) out.push_back(shape_to_tree(s));
    }
    // Bicentroid: two halves of size n/2 joined by an edge; each half's root
    // spends one degree on that edge.
    if (n % 2 == 0) {
        const auto& halves = gen.rooted(n / 2, max_degree - 1);
        for (size_t i = 0; i < halves.size(); ++i)
            for (size_t j = i; j < halves.size(); ++j)
                out.push_back(join_shapes(halves[i], halves[j]));
    }
    return out;
}

}  // namespace greedy
