#include "greedy/drawing.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace greedy {

double signed_angle(Vec2 a, Vec2 b) {
    double ang = std::atan2(a.cross(b), a.dot(b)) * 180.0 / 3.14159265358979323846;
    if (ang <= -180.0) ang += 360.0;
    return ang;
}

std::string serialize_drawing(const Drawing& d) {
    std::ostringstream os;
    char buf[80];
    for (int v = 0; v < d.tree.node_count(); ++v) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g", d.pos[v].x, d.pos[v].y);
        os << d.tree.id_of(v) << " " << buf << "\n";
    }
    return os.str();
}

Drawing parse_drawing(const std::string& text, const Tree& t) {
    Drawing d;
    d.tree = t;
    d.pos.assign(t.node_count(), Vec2{});
    std::vector<char> seen(t.node_count(), 0);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string id;
        double x, y;
        if (!(ls >> id)) continue;
        if (!(ls >> x >> y)) throw ParseError(lineno, "expected 'id x y'");
        int v = t.index_of(id);
        if (v < 0) throw ParseError(lineno, "unknown node '" + id + "'");
        if (seen[v]) throw ParseError(lineno, "duplicate node '" + id + "'");
        seen[v] = 1;
        d.pos[v] = {x, y};
    }
    for (int v = 0; v < t.node_count(); ++v)
        if (!seen[v]) throw ParseError(lineno, "missing coordinates for '" + t.id_of(v) + "'");
    return d;
}

namespace {

// next_hop[t] = neighbor of s on the path from s to t.
void next_hops_from(const Tree& t, int s, std::vector<int>& hop) {
    hop.assign(t.node_count(), -1);
    std::deque<int> q;
    for (int u : t.neighbors(s)) {
        hop[u] = u;
        q.push_back(u);
    }
    std::vector<char> seen(t.node_count(), 0);
    seen[s] = 1;
    for (int u : t.neighbors(s)) seen[u] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : t.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                hop[u] = hop[v];
                q.push_back(u);
            }
    }
}

struct SourceResult {
    double worst = 1e300;
    bool ok = true;
    std::vector<Violation> viol;
};

SourceResult check_source(const Drawing& d, int s, const VerifyOptions& opt) {
    SourceResult r;
    const Tree& t = d.tree;
    std::vector<int> hop;
    next_hops_from(t, s, hop);
    for (int tgt = 0; tgt < t.node_count(); ++tgt) {
        if (tgt == s) continue;
        int u = hop[tgt];
        double slack = (d.at(tgt) - d.at(s)).norm() - (d.at(tgt) - d.at(u)).norm();
        double need = opt.relative_slack * (d.at(u) - d.at(s)).norm();
        r.worst = std::min(r.worst, slack);
        if (slack < need) {
            r.ok = false;
            if (r.viol.size() < opt.max_violations)
                r.viol.push_back({t.id_of(s), t.id_of(tgt), t.id_of(u), slack});
        }
    }
    return r;
}

SourceResult check_edge(const Drawing& d, int u, int v, const VerifyOptions& opt) {
    // Every node on u's side of edge uv must be strictly closer to u.
    SourceResult r;
    const Tree& t = d.tree;
    double need = opt.relative_slack * (d.at(u) - d.at(v)).norm();
    std::vector<char> side(t.node_count(), 0);
    std::deque<int> q{u};
    side[u] = 1;
    while (!q.empty()) {
        int w = q.front();
        q.pop_front();
        for (int x : t.neighbors(w))
            if (!side[x] && !(w == u && x == v)) {
                side[x] = 1;
                q.push_back(x);
            }
    }
    for (int w = 0; w < t.node_count(); ++w) {
        if (!side[w]) continue;
        double slack = (d.at(w) - d.at(v)).norm() - (d.at(w) - d.at(u)).norm();
        r.worst = std::min(r.worst, slack);
        if (slack < need) {
            r.ok = false;
            if (r.viol.size() < opt.max_violations)
                r.viol.push_back({t.id_of(u), t.id_of(v), t.id_of(w), slack});
        }
    }
    return r;
}

}  // namespace

VerifyReport verify_drawing(const Drawing& d, const VerifyOptions& opt) {
    VerifyReport rep;
    const int n = d.tree.node_count();
    if (n == 0) return rep;
    std::vector<SourceResult> per_source((size_t)n);
#pragma omp parallel for schedule(dynamic) if (opt.parallel && n > 16)
    for (int s = 0; s < n; ++s) per_source[s] = check_source(d, s, opt);

    auto edges = d.tree.edges();
    std::vector<SourceResult> per_half(edges.size() * 2);
#pragma omp parallel for schedule(dynamic) if (opt.parallel && n > 16)
    for (int i = 0; i < (int)edges.size(); ++i) {
        per_half[2 * i] = check_edge(d, edges[i].first, edges[i].second, opt);
        per_half[2 * i + 1] = check_edge(d, edges[i].second, edges[i].first, opt);
    }

    rep.greedy_pairwise = true;
    rep.greedy_bisector = true;
    rep.worst_margin = n > 1 ? 1e300 : 0;
    for (auto& r : per_source) {
        rep.greedy_pairwise = rep.greedy_pairwise && r.ok;
        rep.worst_margin = std::min(rep.worst_margin, r.worst);
        for (auto& v : r.viol)
            if (rep.pairwise_violations.size() < opt.max_violations)
                rep.pairwise_violations.push_back(v);
    }
    for (auto& r : per_half) {
        rep.greedy_bisector = rep.greedy_bisector && r.ok;
        rep.worst_margin = std::min(rep.worst_margin, r.worst);
        for (auto& v : r.viol)
            if (rep.bisector_violations.size() < opt.max_violations)
                rep.bisector_violations.push_back(v);
    }
    return rep;
}

double measured_opening_angle(const Drawing& d, int root, int anchor) {
    const Tree& t = d.tree;
    Vec2 up = (d.at(root) - d.at(anchor)).normalized();
    // Orientation of every non-root edge, pointing away from the root.
    std::vector<double> phis;  // ccw angle from `up`, normalized to [0, 360)
    std::deque<std::pair<int, int>> q{{anchor, root}};
    while (!q.empty()) {
        auto [v, parent] = q.front();
        q.pop_front();
        for (int u : t.neighbors(v)) {
            if (u == parent) continue;
            double a = signed_angle(up, d.at(u) - d.at(v));
            if (a < 0) a += 360.0;
            phis.push_back(a);
            q.push_back({u, v});
        }
    }
    if (phis.empty()) return 180.0;
    double lo = *std::min_element(phis.begin(), phis.end());
    double hi = *std::max_element(phis.begin(), phis.end());
    return 180.0 - (hi - lo);
}

std::string export_svg(const Drawing& d, const SvgOptions& opt) {
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (auto& p : d.pos) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    double span = std::max(std::max(maxx - minx, maxy - miny), 1e-12);
    double scale = 940.0 / span;
    auto tx = [&](Vec2 p) { return 30.0 + (p.x - minx) * scale; };
    auto ty = [&](Vec2 p) { return 970.0 - (p.y - miny) * scale; };  // y up
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    for (auto [u, v] : d.tree.edges()) {
        os << "<line x1=\"" << tx(d.at(u)) << "\" y1=\"" << ty(d.at(u)) << "\" x2=\""
           << tx(d.at(v)) << "\" y2=\"" << ty(d.at(v))
           << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    if (opt.bisectors) {
        for (auto [u, v] : d.tree.edges()) {
            Vec2 mid = (d.at(u) + d.at(v)) * 0.5;
            Vec2 dir = (d.at(v) - d.at(u)).rotated(90.0).normalized() * (span * 2.0);
            Vec2 a = mid - dir, b = mid + dir;
            os << "<line x1=\"" << tx(a) << "\" y1=\"" << ty(a) << "\" x2=\"" << tx(b)
               << "\" y2=\"" << ty(b)
               << "\" stroke=\"#cc4444\" stroke-width=\"0.5\" stroke-dasharray=\"4 3\"/>\n";
        }
    }
    for (int v = 0; v < d.tree.node_count(); ++v) {
        os << "<circle cx=\"" << tx(d.at(v)) << "\" cy=\"" << ty(d.at(v)) << "\" r=\""
           << opt.node_radius << "\" fill=\"#2266aa\"/>\n";
        if (opt.labels)
            os << "<text x=\"" << tx(d.at(v)) + 6 << "\" y=\"" << ty(d.at(v)) - 6
               << "\" font-size=\"12\">" << d.tree.id_of(v) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace greedy
