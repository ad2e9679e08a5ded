#include "greedy/tree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace greedy {

int Tree::add_node(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    int idx = (int)ids_.size();
    ids_.push_back(id);
    index_.emplace(id, idx);
    adj_.emplace_back();
    return idx;
}

void Tree::add_edge(const std::string& u, const std::string& v) {
    int ui = add_node(u);
    int vi = add_node(v);
    add_edge_idx(ui, vi);
}

void Tree::add_edge_idx(int u, int v) {
    if (u == v) throw std::runtime_error("self-loop");
    if (has_edge(u, v)) throw std::runtime_error("duplicate edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

int Tree::edge_count() const {
    int total = 0;
    for (const auto& a : adj_) total += (int)a.size();
    return total / 2;
}

int Tree::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

bool Tree::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

int Tree::max_degree() const {
    int m = 0;
    for (int v = 0; v < node_count(); ++v) m = std::max(m, degree(v));
    return m;
}

std::vector<int> Tree::nodes_of_degree(int d) const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
        if (degree(v) == d) out.push_back(v);
    return out;
}

void Tree::validate() const {
    int n = node_count();
    if (n == 0) throw std::runtime_error("empty tree");
    if (edge_count() != n - 1) throw std::runtime_error("edge count is not n-1");
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    if (reached != n) throw std::runtime_error("disconnected input");
}

bool Tree::is_path() const { return max_degree() <= 2; }

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < node_count(); ++v)
        for (int u : adj_[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

Tree parse_tree(const std::string& text) {
    Tree t;
    // Union-find for cycle detection with line attribution.
    std::vector<int> parent;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string u, v, extra;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw ParseError(lineno, "expected two node ids");
        if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
        if (u == v) throw ParseError(lineno, "self-loop at '" + u + "'");
        int ui = t.add_node(u);
        int vi = t.add_node(v);
        while ((int)parent.size() < t.node_count()) parent.push_back((int)parent.size());
        if (t.has_edge(ui, vi)) throw ParseError(lineno, "duplicate edge " + u + " " + v);
        if (find(ui) == find(vi)) throw ParseError(lineno, "cycle detected at edge " + u + " " + v);
        parent[find(ui)] = find(vi);
        t.add_edge_idx(ui, vi);
    }
    if (t.node_count() == 0) throw ParseError(lineno, "no edges in input");
    if (t.edge_count() != t.node_count() - 1) throw ParseError(lineno, "disconnected input");
    t.validate();
    return t;
}

std::string serialize_tree(const Tree& t) {
    std::vector<std::pair<std::string, std::string>> lines;
    for (auto [u, v] : t.edges()) {
        std::string a = t.id_of(u), b = t.id_of(v);
        if (b < a) std::swap(a, b);
        lines.emplace_back(a, b);
    }
    std::sort(lines.begin(), lines.end());
    std::ostringstream os;
    for (auto& [a, b] : lines) os << a << " " << b << "\n";
    return os.str();
}

Tree contract_degree2(const Tree& t) {
    int n = t.node_count();
    if (n <= 2) return t;
    std::vector<char> keep(n, 1);
    for (int v = 0; v < n; ++v)
        if (t.degree(v) == 2) keep[v] = 0;
    // A pure path keeps only its two endpoints. If everything is degree 2
    // the input violates acyclicity, so at least the endpoints survive.
    Tree out;
    for (int v = 0; v < n; ++v)
        if (keep[v]) out.add_node(t.id_of(v));
    if (out.node_count() <= 1) return out;
    // Walk from each kept node along chains of degree-2 nodes.
    for (int v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        for (int first : t.neighbors(v)) {
            int prev = v, cur = first;
            while (!keep[cur]) {
                int nxt = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
            }
            int vi = out.index_of(t.id_of(v));
            int ci = out.index_of(t.id_of(cur));
            if (vi < ci) out.add_edge_idx(vi, ci);
        }
    }
    return out;
}

RootedSubtree RootedSubtree::contracted() const {
    RootedSubtree out;
    out.tree = contract_degree2(tree);
    out.root = out.tree.index_of(tree.id_of(root));
    if (out.root < 0) throw std::runtime_error("root lost in contraction");
    out.anchor = out.tree.neighbors(out.root).empty() ? out.root : out.tree.neighbors(out.root)[0];
    return out;
}

RootedSubtree subtree_toward(const Tree& t, int center, int nbr) {
    if (!t.has_edge(center, nbr)) throw std::runtime_error("edge not present");
    RootedSubtree sub;
    sub.root = sub.tree.add_node(t.id_of(center));
    sub.anchor = sub.tree.add_node(t.id_of(nbr));
    sub.tree.add_edge_idx(sub.root, sub.anchor);
    // DFS away from center.
    std::vector<std::pair<int, int>> stack{{nbr, center}};
    while (!stack.empty()) {
        auto [v, parent] = stack.back();
        stack.pop_back();
        for (int u : t.neighbors(v)) {
            if (u == parent) continue;
            sub.tree.add_edge(t.id_of(v), t.id_of(u));
            stack.emplace_back(u, v);
        }
    }
    return sub;
}

std::pair<RootedSubtree, RootedSubtree> split_at_edge(const Tree& t, const std::string& u,
                                                      const std::string& v) {
    int ui = t.index_of(u), vi = t.index_of(v);
    if (ui < 0 || vi < 0 || !t.has_edge(ui, vi)) throw std::runtime_error("edge not present");
    // (T_u + uv rooted at v, T_v + uv rooted at u)
    return {subtree_toward(t, vi, ui), subtree_toward(t, ui, vi)};
}

Tree subdivide_edge(const Tree& t, int u, int v, const std::string& new_id) {
    if (!t.has_edge(u, v)) throw std::runtime_error("edge not present");
    if (t.has_node(new_id)) throw std::runtime_error("node id already used");
    Tree out;
    for (int w = 0; w < t.node_count(); ++w) out.add_node(t.id_of(w));
    for (auto [a, b] : t.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) {
            out.add_edge(t.id_of(u), new_id);
            out.add_edge(new_id, t.id_of(v));
        } else {
            out.add_edge_idx(a, b);
        }
    }
    return out;
}

Tree subdivide_all_edges(const Tree& t) {
    Tree out;
    for (int w = 0; w < t.node_count(); ++w) out.add_node(t.id_of(w));
    int k = 0;
    for (auto [a, b] : t.edges()) {
        std::string mid;
        do {
            mid = "sd" + std::to_string(k++);
        } while (t.has_node(mid));
        out.add_edge(t.id_of(a), mid);
        out.add_edge(mid, t.id_of(b));
    }
    return out;
}

namespace {

std::string rooted_code(const Tree& t, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int u : t.neighbors(v))
        if (u != parent) child_codes.push_back(rooted_code(t, u, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "(";
    for (auto& c : child_codes) out += c;
    out += ")";
    return out;
}

// Centroids: one or two nodes minimizing the largest component of T - v.
std::vector<int> centroids(const Tree& t) {
    int n = t.node_count();
    if (n == 1) return {0};
    std::vector<int> size(n, 1), order, parent(n, -1);
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : t.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = v;
                stack.push_back(u);
            }
    }
    for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
    std::vector<int> cs;
    for (int v = 0; v < n; ++v) {
        int biggest = n - size[v];
        for (int u : t.neighbors(v))
            if (u != parent[v]) biggest = std::max(biggest, size[u]);
        if (biggest <= n / 2) cs.push_back(v);
    }
    return cs;
}

}  // namespace

std::string canonical_rooted_form(const Tree& t, int root) { return rooted_code(t, root, -1); }

std::string canonical_form(const Tree& t) {
    auto cs = centroids(t);
    if (cs.size() == 1) return rooted_code(t, cs[0], -1);
    std::string a = rooted_code(t, cs[0], cs[1]);
    std::string b = rooted_code(t, cs[1], cs[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

}  // namespace greedy
