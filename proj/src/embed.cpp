#include "greedy/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "greedy/opening_angle.hpp"

namespace greedy {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clampd(double v, double lo, double hi) { return std::max(lo, std::min(hi, v)); }

bool trace_on() {
    static bool on = std::getenv("GREEDY_EMBED_DEBUG") != nullptr;
    return on;
}

#define EMB_TRACE(...) \
    do { \
        if (trace_on()) std::fprintf(stderr, __VA_ARGS__); \
    } while (0)

// Local frames: directions are measured in degrees ccw from the node's
// root axis (the unit vector from the anchor toward its parent), so 0
// points at the parent, +90 left, 180 straight down.
Vec2 dir_from(Vec2 axis, double deg) { return axis.rotated(deg); }

struct Ctx {
    const Tree* t = nullptr;
    std::vector<Vec2> pos;
    std::vector<char> placed;
    // bound of the subtree hanging at `child` seen from `parent`
    std::map<std::pair<int, int>, AngleBound> bound_cache;
    double margin_scale = 1.0;  // retry knob
    double shrink = 1e-2;       // scale factor for blobs that must stay tiny
    int max_depth = 12;
    bool failed = false;

    AngleBound bound(int parent, int child) {
        auto key = std::make_pair(parent, child);
        auto it = bound_cache.find(key);
        if (it != bound_cache.end()) return it->second;
        AngleBound b = get_open_angle(subtree_toward(*t, parent, child));
        bound_cache.emplace(key, b);
        return b;
    }

    void put(int v, Vec2 p) {
        pos[v] = p;
        placed[v] = 1;
    }
};

// Interval of directions (relative to an axis) that a subtree's cone must
// tolerate: the world wedge plus sibling clusters.
struct Needs {
    double lo = 0, hi = 0;  // lo <= 0 <= hi in the usual orientation
    void include(double a) {
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
};

// Sample points representing the world the subtree must tolerate: the far
// wedge plus nearby clusters (each a center and radius).
struct WorldView {
    std::vector<std::pair<Vec2, double>> clusters;  // (center, radius)
    void add(Vec2 c, double r) { clusters.push_back({c, r}); }
};

Needs needs_from(Vec2 anchor, Vec2 axis, const WorldView& world) {
    Needs nd;
    nd.lo = 1e9;
    nd.hi = -1e9;
    for (auto& [c, r] : world.clusters) {
        Vec2 d = c - anchor;
        double dist = d.norm();
        double a = signed_angle(axis, d);
        double spread = dist > r ? std::asin(clampd(r / dist, 0.0, 1.0)) * 180.0 / kPi : 90.0;
        nd.lo = std::min(nd.lo, a - spread);
        nd.hi = std::max(nd.hi, a + spread);
    }
    return nd;
}

// Decaying straight chain for a path subtree (node sequence below `c`).
void place_path(Ctx& ctx, int c, int parent, Vec2 start, Vec2 dir, double first_len) {
    double len = first_len;
    Vec2 p = start;
    int prev = parent, cur = c;
    while (true) {
        ctx.put(cur, p);
        int nxt = -1;
        for (int u : ctx.t->neighbors(cur))
            if (u != prev) nxt = u;
        if (nxt < 0) break;
        len *= 0.35;
        p = p + dir * len;
        prev = cur;
        cur = nxt;
    }
}

double path_tail_radius(double first_len) { return first_len * 0.35 / (1.0 - 0.35) * 1.05; }

// Forward declaration of the recursive constructor.
void place_rooted(Ctx& ctx, int a, int parent, Vec2 A, Vec2 axis, Needs needs,
                  const WorldView& world, double scale, int depth);

// Conservative radius estimate of the blob a recursive call will produce.
double blob_radius_estimate(double scale) { return 3.2 * scale; }

struct ChildInfo {
    int node = -1;
    AngleBound bound;
};

// All-path children: fan the paths inside the free window.
void place_fan(Ctx& ctx, int a, Vec2 A, Vec2 axis, const Needs& nd,
               const std::vector<int>& paths, double scale) {
    int m = (int)paths.size();
    // Keep every fan direction >= 90 away from the world wedge and > 60
    // away from the root edge.
    double win_lo = std::max(nd.hi + 90, 61.0), win_hi = std::min(nd.lo + 270, 299.0);
    double g = std::min(6.0, (win_hi - win_lo - 60.0 * (m - 1)) / 6.0) * ctx.margin_scale;
    if (g <= 0) {
        ctx.failed = true;
        g = 0.01;
    }
    win_lo += g;
    win_hi -= g;
    for (int j = 0; j < m; ++j) {
        double d = m == 1 ? 0.5 * (win_lo + win_hi) : win_lo + (win_hi - win_lo) * j / (m - 1);
        Vec2 u = dir_from(axis, d);
        place_path(ctx, paths[j], a, A + u * scale, u, scale);
    }
}

// One non-trivial child, zero to two path children (combine cases I-III).
void place_chain(Ctx& ctx, int a, Vec2 A, Vec2 axis, Needs nd, const WorldView& world,
                 const ChildInfo& heavy, const std::vector<int>& paths, double scale, int depth) {
    double phi_child = to_double(heavy.bound.value);
    double phi_bar;
    int p = (int)paths.size();
    if (p == 0)
        phi_bar = phi_child;  // case I
    else if (p == 1)
        phi_bar = phi_child > 90 ? phi_child / 2 + 45 : phi_child;  // II.i / II.ii
    else
        phi_bar = phi_child / 2;  // case III
    double W = nd.hi - nd.lo;
    double M = phi_bar - W;
    if (M <= 0) {
        ctx.failed = true;
        M = 0.5;
    }
    double mm = std::min(2.0, M / 6) * ctx.margin_scale;

    double spine_dir;
    std::vector<double> leaf_dirs;
    double leaf_len = 0.6 * scale;
    double spine_len = scale;
    if (p == 0) {
        spine_dir = 180 + 0.5 * (nd.lo + nd.hi);
    } else if (p == 1) {
        // The leaf axis provides the high wedge boundary; tilt the spine no
        // more than that requires, and keep the leaf > 60 deg away from the
        // root edge.
        double leaf_dir = std::max(nd.hi + 90 + mm, 61.0 + mm);
        double tau = leaf_dir - phi_bar + mm;        // leaf sits at (180 - phi_bar + mm) off spine
        tau = std::max(tau, nd.hi - 89.0);           // keep the spine side usable
        tau = std::min(tau, nd.lo + 90 - mm);        // spine-axis cap on the low side
        spine_dir = 180 + tau;
        leaf_dirs.push_back(leaf_dir);
        double ang = std::abs((180 + tau) - leaf_dir);  // leaf vs spine
        double c = std::cos(ang * kPi / 180.0);
        if (c > 0.05) spine_len = std::min(spine_len, 0.8 * leaf_len / (2 * c));
    } else {
        double tau = 0.5 * (nd.lo + nd.hi);
        double eta_p = std::min(90 - W / 2 - mm, 89.0);
        double eta_m = eta_p;
        spine_dir = 180 + tau;
        leaf_dirs.push_back(180 + tau - eta_p);
        leaf_dirs.push_back(tau + eta_m - 180);
        double c = std::cos(eta_p * kPi / 180.0);
        if (c > 0.05) spine_len = std::min(spine_len, 0.8 * leaf_len / (2 * c));
    }
    spine_len = std::max(spine_len, 0.55 * leaf_len);

    Vec2 child_pos = A + dir_from(axis, spine_dir) * spine_len;
    std::vector<Vec2> leaf_pos;
    for (size_t j = 0; j < leaf_dirs.size(); ++j) {
        Vec2 u = dir_from(axis, leaf_dirs[j]);
        leaf_pos.push_back(A + u * leaf_len);
        place_path(ctx, paths[j], a, leaf_pos.back(), u, leaf_len);
    }

    // What the heavy child must tolerate: the old world plus the leaves.
    WorldView child_world = world;
    for (auto& lp : leaf_pos) child_world.add(lp, path_tail_radius(leaf_len));
    Vec2 child_axis = (A - child_pos).normalized();
    Needs child_needs = needs_from(child_pos, child_axis, child_world);
    child_needs.lo -= mm / 2;
    child_needs.hi += mm / 2;
    EMB_TRACE("chain %s: W=[%.2f,%.2f] phi'=%.2f phibar=%.2f spine=%.2f child needs [%.2f,%.2f]\n",
              ctx.t->id_of(a).c_str(), nd.lo, nd.hi, phi_child, phi_bar, spine_dir,
              child_needs.lo, child_needs.hi);
    if (child_needs.hi - child_needs.lo > phi_child - mm / 2) {
        ctx.failed = true;
        EMB_TRACE("chain %s: child needs too wide\n", ctx.t->id_of(a).c_str());
    }
    place_rooted(ctx, heavy.node, a, child_pos, child_axis, child_needs, child_world,
                 scale * 0.5, depth + 1);
}

// Two non-trivial children in (90,120] (case IV), optionally plus one path
// child (case V).
void place_cross(Ctx& ctx, int a, Vec2 A, Vec2 axis, Needs nd, const WorldView& world,
                 ChildInfo big, ChildInfo small, const std::vector<int>& paths, double scale,
                 int depth) {
    double phi1 = to_double(big.bound.value);
    double phi2 = to_double(small.bound.value);
    double W = nd.hi - nd.lo;
    bool with_leaf = !paths.empty();
    double phi_bar = with_leaf ? 0.75 * phi1 + 0.5 * phi2 - 112.5 : phi1 + phi2 - 180;
    double M = phi_bar - W;
    if (M <= 0) {
        ctx.failed = true;
        M = 0.25;
    }
    double mm = std::min(1.5, M / 5) * ctx.margin_scale;

    double d1 = std::max(nd.hi + 90 + mm, 61.0 + mm);
    double l1 = scale;
    Vec2 p1 = A + dir_from(axis, d1) * l1;
    double d2, l2;
    Vec2 p2;
    std::vector<Vec2> leaf_pos;
    double leaf_len = 0;

    if (!with_leaf) {
        // Spoke lengths tuned so each blob lies inside the other's cone:
        // the chord direction shift Delta solves sin(D)/sin(W-D) = ratio.
        // Balance the slack of the two children.
        d2 = std::min(nd.lo - 90 - mm, -61.0 - mm);
        double target_lo = std::max(0.0, W - (phi1 - 90)) + mm;
        double target_hi = phi2 - 90 - mm;
        double D = clampd(0.5 * (W + phi2 - phi1), target_lo, target_hi);
        D = clampd(D, 0.02, W - 0.02);
        double ratio = std::sin(D * kPi / 180.0) /
                       std::max(std::sin((W - D) * kPi / 180.0), 1e-9);
        ratio = clampd(ratio, 0.02, 50.0);
        l1 = scale * ratio;
        l2 = scale;
        p1 = A + dir_from(axis, d1) * l1;
        p2 = A + dir_from(axis, d2) * l2;
    } else {
        // Case V per the combine lemma: alpha = 135 - phi1/2; the second
        // blob sits past the first, the path child caps the low boundary.
        double alpha = 135 - phi1 / 2;
        double ev = clampd(M / 4, 0.1, 2.0) * ctx.margin_scale;
        d2 = d1 + alpha + ev;
        l2 = l1 * std::sin((2 * alpha + ev) * kPi / 180.0) / std::sin(alpha * kPi / 180.0);
        p2 = A + dir_from(axis, d2) * l2;
        leaf_len = 0.45 * l2;
        double dl = std::min(nd.lo - 90 - mm, -61.0 - mm);
        Vec2 u = dir_from(axis, dl);
        leaf_pos.push_back(A + u * leaf_len);
        place_path(ctx, paths[0], a, leaf_pos.back(), u, leaf_len);
    }

    // Both blobs are drawn essentially infinitesimally small relative to
    // their spokes, exactly as in the combine-case constructions.
    double child_scale = std::min(l1, l2) * ctx.shrink;
    double r1 = blob_radius_estimate(child_scale);
    double r2 = blob_radius_estimate(child_scale);

    WorldView w1 = world;
    w1.add(p2, r2);
    WorldView w2 = world;
    w2.add(p1, r1);
    for (auto& lp : leaf_pos) {
        w1.add(lp, path_tail_radius(leaf_len));
        w2.add(lp, path_tail_radius(leaf_len));
    }
    Vec2 ax1 = (A - p1).normalized();
    Vec2 ax2 = (A - p2).normalized();
    Needs n1 = needs_from(p1, ax1, w1);
    Needs n2 = needs_from(p2, ax2, w2);
    n1.lo -= mm / 2;
    n1.hi += mm / 2;
    n2.lo -= mm / 2;
    n2.hi += mm / 2;
    EMB_TRACE("cross %s: W=[%.2f,%.2f] phi=(%.2f,%.2f) leaf=%d n1=[%.2f,%.2f] n2=[%.2f,%.2f]\n",
              ctx.t->id_of(a).c_str(), nd.lo, nd.hi, phi1, phi2, (int)with_leaf, n1.lo, n1.hi,
              n2.lo, n2.hi);
    if (n1.hi - n1.lo > phi1 - mm / 2) {
        ctx.failed = true;
        EMB_TRACE("cross %s: child1 needs too wide\n", ctx.t->id_of(a).c_str());
    }
    if (n2.hi - n2.lo > phi2 - mm / 2) {
        ctx.failed = true;
        EMB_TRACE("cross %s: child2 needs too wide\n", ctx.t->id_of(a).c_str());
    }
    place_rooted(ctx, big.node, a, p1, ax1, n1, w1, child_scale, depth + 1);
    place_rooted(ctx, small.node, a, p2, ax2, n2, w2, child_scale, depth + 1);
}

void place_rooted(Ctx& ctx, int a, int parent, Vec2 A, Vec2 axis, Needs needs,
                  const WorldView& world, double scale, int depth) {
    ctx.put(a, A);
    if (depth > ctx.max_depth) {
        ctx.failed = true;
        return;
    }
    std::vector<int> paths;
    std::vector<ChildInfo> heavy;
    for (int u : ctx.t->neighbors(a)) {
        if (u == parent) continue;
        AngleBound b = ctx.bound(a, u);
        if (b.is_path())
            paths.push_back(u);
        else
            heavy.push_back({u, b});
    }
    if (heavy.empty()) {
        if (!paths.empty()) place_fan(ctx, a, A, axis, needs, paths, scale);
        return;
    }
    std::sort(heavy.begin(), heavy.end(),
              [](const ChildInfo& x, const ChildInfo& y) { return x.bound.value > y.bound.value; });
    if (heavy.size() == 1) {
        place_chain(ctx, a, A, axis, needs, world, heavy[0], paths, scale, depth);
        return;
    }
    if (heavy.size() == 2) {
        place_cross(ctx, a, A, axis, needs, world, heavy[0], heavy[1], paths, scale, depth);
        return;
    }
    ctx.failed = true;  // three non-trivial children never carry an open angle
}

Drawing straight_path_drawing(const Tree& t) {
    Drawing d;
    d.tree = t;
    d.pos.assign(t.node_count(), Vec2{});
    int end = -1;
    for (int v = 0; v < t.node_count() && end < 0; ++v)
        if (t.degree(v) <= 1) end = v;
    int prev = -1, cur = end, k = 0;
    while (cur >= 0) {
        d.pos[cur] = {double(k++), 0.0};
        int nxt = -1;
        for (int u : t.neighbors(cur))
            if (u != prev) nxt = u;
        prev = cur;
        cur = nxt;
    }
    return d;
}

// Map polygon corners to hub subtrees: sort both by bound value.
std::vector<int> corner_to_neighbor(const Decision& dec, const Tree& t, int hub) {
    const WheelAssignment& a = *dec.wheel->assignment;
    int n = a.n();
    std::vector<int> by_bound(n);
    std::iota(by_bound.begin(), by_bound.end(), 0);
    std::stable_sort(by_bound.begin(), by_bound.end(), [&](int x, int y) {
        return dec.hub_bounds[x].value > dec.hub_bounds[y].value;
    });
    // corner i holds sorted-phi index a.ordering[i]
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        int nb_slot = by_bound[a.ordering[i]];
        out[i] = t.index_of(dec.hub_neighbors[nb_slot]);
    }
    return out;
}

std::optional<Drawing> try_build(const Tree& t, const Decision& dec, double shrink,
                                 double margin_scale, const EmbedOptions& opt) {
    Ctx ctx;
    ctx.t = &t;
    ctx.pos.assign(t.node_count(), Vec2{});
    ctx.placed.assign(t.node_count(), 0);
    ctx.margin_scale = margin_scale;
    ctx.shrink = shrink;
    ctx.max_depth = opt.max_depth;

    int hub = t.index_of(dec.hub);
    if (hub < 0) return std::nullopt;
    int d = t.degree(hub);

    if (d == 1) return std::nullopt;
    if (d == 2) {
        ctx.put(hub, {0, 0});
        int u0 = t.neighbors(hub)[0], u1 = t.neighbors(hub)[1];
        Vec2 a0{0, 1}, a1{0, -1};
        double r = blob_radius_estimate(shrink);
        WorldView w0, w1;
        w0.add({0, 0}, 0.001);
        w0.add(a1, r + 0.01);
        w1.add({0, 0}, 0.001);
        w1.add(a0, r + 0.01);
        Needs n0 = needs_from(a0, {0, -1}, w0);  // axis points from the anchor at the hub
        Needs n1 = needs_from(a1, {0, 1}, w1);
        n0.include(0);
        n1.include(0);
        n0.lo -= 1;
        n0.hi += 1;
        n1.lo -= 1;
        n1.hi += 1;
        place_rooted(ctx, u0, hub, a0, {0, -1}, n0, w0, shrink, 0);
        place_rooted(ctx, u1, hub, a1, {0, 1}, n1, w1, shrink, 0);
    } else {
        if (!dec.wheel || !dec.wheel->assignment) return std::nullopt;
        const WheelAssignment& wa = *dec.wheel->assignment;
        int n = wa.n();
        // Corner positions from the certificate.
        std::vector<double> rho(n, 1.0), theta(n, 0.0);
        for (int i = 1; i < n; ++i) {
            rho[i] = rho[i - 1] * std::sin(wa.gamma[i] * kPi / 180.0) /
                     std::sin(wa.beta[i] * kPi / 180.0);
            theta[i] = theta[i - 1] + wa.alpha[i];
        }
        double rmin = *std::min_element(rho.begin(), rho.end());
        std::vector<Vec2> corner(n);
        for (int i = 0; i < n; ++i) {
            double rad = theta[i] * kPi / 180.0;
            corner[i] = Vec2{std::cos(rad), std::sin(rad)} * (rho[i] / rmin);
        }
        ctx.put(hub, {0, 0});
        std::vector<int> nb = corner_to_neighbor(dec, t, hub);
        std::vector<double> feature(n, 1e300);
        for (int i = 0; i < n; ++i) {
            int prev = (i + n - 1) % n;
            double e = (corner[i] - corner[prev]).norm();
            feature[i] = std::min(feature[i], e);
            feature[prev] = std::min(feature[prev], e);
        }
        for (int i = 0; i < n; ++i) {
            WorldView w;
            w.add({0, 0}, 1e-9);
            for (int j = 0; j < n; ++j)
                if (j != i) w.add(corner[j], shrink * feature[j] * 3.2 + 1e-9);
            Vec2 ax = (Vec2{0, 0} - corner[i]).normalized();
            Needs nd = needs_from(corner[i], ax, w);
            nd.include(0);
            // Spend a fraction of this corner's slack phi - psi on margin.
            double phi = 180.0;
            for (size_t s = 0; s < dec.hub_neighbors.size(); ++s)
                if (t.index_of(dec.hub_neighbors[s]) == nb[i])
                    phi = to_double(dec.hub_bounds[s].value);
            double slack = phi - (nd.hi - nd.lo);
            double pad = clampd(slack / 6, 0.002, 0.25) * margin_scale;
            nd.lo -= pad;
            nd.hi += pad;
            EMB_TRACE("corner %d (%s): needs [%.3f,%.3f] phi %.3f\n", i,
                      t.id_of(nb[i]).c_str(), nd.lo, nd.hi, phi);
            place_rooted(ctx, nb[i], hub, corner[i], ax, nd, w, shrink * feature[i], 0);
        }
    }
    for (int v = 0; v < t.node_count(); ++v)
        if (!ctx.placed[v]) return std::nullopt;
    Drawing dr;
    dr.tree = t;
    dr.pos = std::move(ctx.pos);
    VerifyReport rep = verify_drawing(dr);
    if (rep.ok()) return dr;
    if (trace_on()) {
        std::fprintf(stderr, "verify failed (margin %g, flagged=%d):\n", rep.worst_margin,
                     (int)ctx.failed);
        for (size_t i = 0; i < rep.bisector_violations.size() && i < 8; ++i) {
            auto& v = rep.bisector_violations[i];
            std::fprintf(stderr, "  edge (%s,%s) node %s slack %g\n", v.s.c_str(), v.t.c_str(),
                         v.u.c_str(), v.slack);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Drawing> embed(const Tree& t, const Decision& decision, const EmbedOptions& opt) {
    if (decision.verdict != Verdict::Yes) return std::nullopt;
    if (t.node_count() == 1) {
        Drawing d;
        d.tree = t;
        d.pos.assign(1, Vec2{0, 0});
        return d;
    }
    if (t.is_path()) {
        Drawing d = straight_path_drawing(t);
        if (verify_drawing(d).ok()) return d;
        return std::nullopt;
    }
    double shrink = opt.shrink;
    double margin_scale = 1.0;
    for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
        auto d = try_build(t, decision, shrink, margin_scale, opt);
        if (d) return d;
        shrink /= 4;
        margin_scale *= 0.6;
    }
    return std::nullopt;
}

std::optional<Drawing> embed_rooted(const RootedSubtree& sub, double target_degrees,
                                    const EmbedOptions& opt) {
    const Tree& t = sub.tree;
    double shrink = 1.0;
    double margin_scale = 1.0;
    for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
        Ctx ctx;
        ctx.t = &t;
        ctx.pos.assign(t.node_count(), Vec2{});
        ctx.placed.assign(t.node_count(), 0);
        ctx.margin_scale = margin_scale;
        ctx.max_depth = opt.max_depth;
        Vec2 R{0, 4.0};
        ctx.put(sub.root, R);
        // The far world samples the whole target wedge from an apex at the
        // root, so descendant recipes keep every edge compatible with it.
        WorldView w;
        w.add(R, 0.001);
        for (double side : {-target_degrees / 2, 0.0, target_degrees / 2})
            for (double radius : {8.0, 200.0, 2e5}) {
                Vec2 u = Vec2{0, 1}.rotated(side);
                w.add(R + u * radius, radius * 1e-6);
            }
        Needs nd;
        nd.lo = -target_degrees / 2;
        nd.hi = target_degrees / 2;
        place_rooted(ctx, sub.anchor, sub.root, {0, 0}, {0, 1}, nd, w, shrink, 0);
        bool all = true;
        for (int v = 0; v < t.node_count(); ++v) all = all && ctx.placed[v];
        if (all) {
            Drawing dr;
            dr.tree = t;
            dr.pos = std::move(ctx.pos);
            if (verify_drawing(dr).ok()) return dr;
        }
        margin_scale *= 0.6;
    }
    return std::nullopt;
}

}  // namespace greedy
