#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace greedy {

// Undirected labeled tree. Node ids are opaque strings; internal indices are
// assigned by first appearance so serialization is stable across runs.
class Tree {
public:
    Tree() = default;

    // Adds the node if not present, returns its index.
    int add_node(const std::string& id);
    // Requires both endpoints to exist or not; adds missing endpoints.
    void add_edge(const std::string& u, const std::string& v);
    void add_edge_idx(int u, int v);

    int node_count() const { return (int)ids_.size(); }
    int edge_count() const;
    int degree(int v) const { return (int)adj_[v].size(); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::string& id_of(int v) const { return ids_[v]; }
    int index_of(const std::string& id) const;         // -1 if absent
    bool has_node(const std::string& id) const { return index_of(id) >= 0; }
    bool has_edge(int u, int v) const;

    int max_degree() const;
    std::vector<int> nodes_of_degree(int d) const;

    // Throws std::runtime_error unless connected, acyclic, loop-free and
    // free of duplicate edges (construction already rejects those two).
    void validate() const;
    bool is_path() const;  // max degree <= 2 (includes single node / edge)

    // All edges as index pairs (u < v), in a deterministic order.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};

// Edge-list format: one edge per line "u v", '#' starts a comment,
// blank lines ignored. Errors carry 1-based line numbers.
Tree parse_tree(const std::string& text);
// Emits edges sorted lexicographically by id pair (smaller id first).
std::string serialize_tree(const Tree& t);

// Splices out every degree-2 node. Idempotent; a path collapses to an edge;
// trees with fewer than 3 nodes come back unchanged.
Tree contract_degree2(const Tree& t);

// Rooted subtree T_{rv}^{v} + rv, materialized. root has degree 1.
struct RootedSubtree {
    Tree tree;
    int root;    // index within `tree`
    int anchor;  // root's unique neighbor

    const std::string& root_id() const { return tree.id_of(root); }
    const std::string& anchor_id() const { return tree.id_of(anchor); }

    // Degree-2 contraction of the subtree; the root is degree 1 and
    // therefore always survives. The anchor may be spliced out.
    RootedSubtree contracted() const;
};

// The subtree of t on the far side of edge (center, nbr), plus that edge,
// rooted at center. Requires the edge to exist.
RootedSubtree subtree_toward(const Tree& t, int center, int nbr);

// Splits t at edge uv into (T_u + uv rooted at v, T_v + uv rooted at u).
// Node sets of the halves overlap exactly in {u, v}.
std::pair<RootedSubtree, RootedSubtree> split_at_edge(const Tree& t, const std::string& u,
                                                      const std::string& v);

// Inserts one fresh node in the middle of edge (u, v).
Tree subdivide_edge(const Tree& t, int u, int v, const std::string& new_id);
// Subdivides every edge of t once.
Tree subdivide_all_edges(const Tree& t);

// AHU-style canonical encoding of the free tree (rooted at the centroid,
// or canonical combination at a bicentroid). Equal strings <=> isomorphic.
std::string canonical_form(const Tree& t);
// Canonical encoding of a rooted tree, rooted at `root`.
std::string canonical_rooted_form(const Tree& t, int root);

}  // namespace greedy
