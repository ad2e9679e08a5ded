#include "greedy/wheel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "greedy/lp.hpp"

namespace greedy {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sind(double deg) { return std::sin(deg * kPi / 180.0); }

double omega_of(const std::vector<double>& beta, const std::vector<double>& gamma) {
    long double pb = 1.0L, pg = 1.0L;
    for (double b : beta) pb *= std::sin((long double)b * kPi / 180.0L);
    for (double g : gamma) pg *= std::sin((long double)g * kPi / 180.0L);
    return (double)(pb - pg);
}

// The combine table only ever produces (0,60] u (90,120] u {180}, but the
// boundary rows of the membership table are stated (and proved) for any
// value up to 120, so user-supplied instances in (60,90] are accepted.
bool in_valid_range(const Rat& phi) {
    if (phi == 180) return true;
    return phi > 0 && phi <= 120;
}

bool in_table_ranges(const WheelInstance& inst) {
    for (const auto& p : inst.phis) {
        if (p == 180) continue;
        if (p > 90 && p <= 120) continue;
        if (p > 0 && p <= 60) continue;
        return false;
    }
    return true;
}

}  // namespace

WheelInstance WheelInstance::make(std::vector<Rat> phis) {
    WheelInstance w;
    w.n = (int)phis.size();
    if (w.n < 3 || w.n > 5) throw std::invalid_argument("wheel instance needs 3..5 angles");
    for (const auto& p : phis)
        if (!in_valid_range(p))
            throw std::invalid_argument("angle bound outside (0,60] u (90,120] u {180}: " +
                                        rat_to_string(p));
    std::sort(phis.begin(), phis.end(), std::greater<Rat>());
    w.phis = std::move(phis);
    return w;
}

Rat WheelInstance::sum() const {
    Rat s = 0;
    for (const auto& p : phis) s += p;
    return s;
}

double WheelAssignment::interior_angle(int corner) const {
    return beta[corner] + gamma[(corner + 1) % n()];
}

double evaluate_omega(const std::vector<double>& beta, const std::vector<double>& gamma) {
    return omega_of(beta, gamma);
}

double evaluate_omega(const SimplexPoint& p) { return omega_of(p.beta, p.gamma); }

// ---------------------------------------------------------------------------
// assignment assembly and verification

namespace {

// eps = smallest margin over the strict constraints of the optimization
// problem; negative when some constraint is violated.
double min_margin(const WheelInstance& inst, const std::vector<int>& ord,
                  const std::vector<double>& beta, const std::vector<double>& gamma) {
    int n = (int)ord.size();
    double m = 1e300;
    for (int i = 0; i < n; ++i) {
        double alpha = 180.0 - beta[i] - gamma[i];
        m = std::min(m, alpha - beta[i]);
        m = std::min(m, alpha - gamma[i]);
        double phi = to_double(inst.phis[ord[i]]);
        m = std::min(m, phi - (beta[i] + gamma[(i + 1) % n]));
    }
    return m;
}

WheelAssignment assemble(const WheelInstance& inst, std::vector<int> ord,
                         std::vector<double> beta, std::vector<double> gamma) {
    WheelAssignment a;
    a.ordering = std::move(ord);
    a.beta = std::move(beta);
    a.gamma = std::move(gamma);
    a.alpha.resize(a.n());
    for (int i = 0; i < a.n(); ++i) a.alpha[i] = 180.0 - a.beta[i] - a.gamma[i];
    a.eps = min_margin(inst, a.ordering, a.beta, a.gamma);
    a.omega = omega_of(a.beta, a.gamma);
    return a;
}

WheelAssignment assemble_exact(const WheelInstance& inst, std::vector<int> ord,
                               const std::vector<Rat>& beta, const std::vector<Rat>& gamma) {
    std::vector<double> b, g;
    for (const auto& v : beta) b.push_back(to_double(v));
    for (const auto& v : gamma) g.push_back(to_double(v));
    return assemble(inst, std::move(ord), std::move(b), std::move(g));
}

}  // namespace

AssignmentReport verify_assignment(const WheelInstance& inst, const WheelAssignment& a) {
    AssignmentReport rep;
    int n = a.n();
    if (n != inst.n || (int)a.beta.size() != n || (int)a.gamma.size() != n ||
        (int)a.alpha.size() != n) {
        rep.failures.push_back("shape mismatch");
        return rep;
    }
    std::vector<char> used(n, 0);
    for (int i : a.ordering) {
        if (i < 0 || i >= n || used[i]) {
            rep.failures.push_back("ordering is not a permutation");
            return rep;
        }
        used[i] = 1;
    }

    rep.min_linear_margin = min_margin(inst, a.ordering, a.beta, a.gamma);
    rep.linear_ok = rep.min_linear_margin > 0;
    if (!rep.linear_ok) rep.failures.push_back("a linear constraint lacks positive margin");
    for (int i = 0; i < n; ++i)
        if (a.beta[i] < 0 || a.gamma[i] < 0 || a.beta[i] > 180 || a.gamma[i] > 180) {
            rep.linear_ok = false;
            rep.failures.push_back("angle outside [0,180]");
            break;
        }

    double sum_alpha = 0;
    bool sums = true;
    for (int i = 0; i < n; ++i) {
        sum_alpha += a.alpha[i];
        if (std::abs(a.alpha[i] + a.beta[i] + a.gamma[i] - 180.0) > 1e-9) sums = false;
    }
    if (std::abs(sum_alpha - 360.0) > 1e-9) sums = false;
    rep.sums_ok = sums;
    if (!sums) rep.failures.push_back("triangle or hub angle sum off by more than 1e-9 deg");

    rep.omega = omega_of(a.beta, a.gamma);
    rep.wheel_ok = std::abs(rep.omega) <= 1e-9;
    if (!rep.wheel_ok) rep.failures.push_back("wheel condition residual exceeds 1e-9");

    // Polygon reconstruction by the law of sines: triangle i joins corners
    // i-1 and i; the spoke ratio is sin(gamma_i)/sin(beta_i).
    bool degenerate = false;
    for (int i = 0; i < n; ++i)
        if (a.beta[i] <= 0 || a.gamma[i] <= 0 || a.alpha[i] <= 0) degenerate = true;
    rep.convex_ok = !degenerate;
    if (degenerate) {
        rep.failures.push_back("degenerate triangle");
        return rep;
    }
    std::vector<double> rho(n, 1.0);
    for (int i = 1; i < n; ++i) rho[i] = rho[i - 1] * sind(a.gamma[i]) / sind(a.beta[i]);
    double rho_return = rho[n - 1] * sind(a.gamma[0]) / sind(a.beta[0]);
    double theta = 0;
    double max_rho = *std::max_element(rho.begin(), rho.end());
    std::vector<std::pair<double, double>> pts(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0) theta += a.alpha[i];
        pts[i] = {rho[i] * std::cos(theta * kPi / 180.0), rho[i] * std::sin(theta * kPi / 180.0)};
    }
    double close_theta = theta + a.alpha[0];
    double rx = rho_return * std::cos(close_theta * kPi / 180.0);
    double ry = rho_return * std::sin(close_theta * kPi / 180.0);
    rep.closure_residual = std::hypot(rx - pts[0].first, ry - pts[0].second) / max_rho;
    rep.closure_ok = rep.closure_residual <= 1e-7;
    if (!rep.closure_ok) rep.failures.push_back("polygon fails to close within 1e-7");

    rep.min_star_margin = 1e300;
    for (int i = 0; i < n; ++i) {
        int prev = (i + n - 1) % n;
        double edge = std::hypot(pts[i].first - pts[prev].first, pts[i].second - pts[prev].second);
        rep.min_star_margin = std::min(rep.min_star_margin, edge - rho[i]);
        rep.min_star_margin = std::min(rep.min_star_margin, edge - rho[prev]);
    }
    rep.star_ok = rep.min_star_margin > 0;
    if (!rep.star_ok) rep.failures.push_back("hub-to-corner distance not below the polygon edge");

    for (int i = 0; i < n; ++i)
        if (a.interior_angle(i) >= 180.0) rep.convex_ok = false;
    if (!rep.convex_ok) rep.failures.push_back("interior angle at or above 180");

    rep.ok = rep.linear_ok && rep.sums_ok && rep.wheel_ok && rep.closure_ok && rep.star_ok &&
             rep.convex_ok;
    return rep;
}

// ---------------------------------------------------------------------------
// orderings and the LP relaxation

namespace {

// Distinct cyclic orderings of the phi multiset up to rotation and
// reflection, as corner->index permutations, lexicographically sorted.
std::vector<std::vector<int>> canonical_orderings(const WheelInstance& inst) {
    int n = inst.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::vector<Rat>, std::vector<int>> by_key;
    do {
        std::vector<Rat> best;
        for (int refl = 0; refl < 2; ++refl) {
            std::vector<int> p = perm;
            if (refl) std::reverse(p.begin(), p.end());
            for (int rot = 0; rot < n; ++rot) {
                std::vector<Rat> seq(n);
                for (int i = 0; i < n; ++i) seq[i] = inst.phis[p[(i + rot) % n]];
                if (best.empty() || seq < best) best = seq;
            }
        }
        auto it = by_key.find(best);
        if (it == by_key.end() || perm < it->second) by_key[best] = perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> out;
    for (auto& [k, v] : by_key) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

// LP for one ordering: variables beta_0..beta_{n-1}, gamma_0..gamma_{n-1},
// eps, all >= 0; maximize eps (or another objective); optional floor on eps.
struct RelaxationLp {
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    int n;

    RelaxationLp(const WheelInstance& inst, const std::vector<int>& ord) : n(inst.n) {
        int vars = 2 * n + 1;
        auto row = [&](std::initializer_list<std::pair<int, Rat>> terms, Rat rhs) {
            std::vector<Rat> r(vars, Rat(0));
            for (auto& [j, cc] : terms) r[j] += cc;
            A.push_back(std::move(r));
            b.push_back(std::move(rhs));
        };
        for (int i = 0; i < n; ++i) {
            row({{i, Rat(2)}, {n + i, Rat(1)}, {2 * n, Rat(1)}}, Rat(180));
            row({{i, Rat(1)}, {n + i, Rat(2)}, {2 * n, Rat(1)}}, Rat(180));
            row({{i, Rat(1)}, {n + (i + 1) % n, Rat(1)}, {2 * n, Rat(1)}}, inst.phis[ord[i]]);
        }
        std::vector<Rat> sum(vars, Rat(0));
        for (int i = 0; i < 2 * n; ++i) sum[i] = 1;
        Rat S((n - 2) * 180);
        A.push_back(sum);
        b.push_back(S);
        for (auto& v : sum) v = -v;
        A.push_back(sum);
        b.push_back(-S);
    }

    void add_eps_floor(const Rat& floor) {
        std::vector<Rat> r(2 * n + 1, Rat(0));
        r[2 * n] = -1;
        A.push_back(std::move(r));
        b.push_back(-floor);
    }

    LpResult maximize(const std::vector<Rat>& obj) const { return solve_lp(A, b, obj); }

    LpResult maximize_eps() const {
        std::vector<Rat> c(2 * n + 1, Rat(0));
        c[2 * n] = 1;
        return maximize(c);
    }
};

}  // namespace

LpRelaxationReport lp_relaxation_feasible(const WheelInstance& inst) {
    LpRelaxationReport rep;
    rep.orderings = canonical_orderings(inst);
    for (const auto& ord : rep.orderings) {
        RelaxationLp lp(inst, ord);
        LpResult r = lp.maximize_eps();
        bool ok = r.status == LpStatus::Optimal && r.objective > 0;
        rep.feasible.push_back(ok);
        rep.max_eps.push_back(r.status == LpStatus::Optimal ? r.objective : Rat(0));
        rep.any_feasible = rep.any_feasible || ok;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// numeric search

namespace {

std::vector<double> lp_point_to_doubles(const std::vector<Rat>& p, int upto) {
    std::vector<double> out;
    out.reserve(upto);
    for (int i = 0; i < upto; ++i) out.push_back(to_double(p[i]));
    return out;
}

std::optional<WheelAssignment> search_on_segment(const WheelInstance& inst,
                                                 const std::vector<int>& ord,
                                                 const std::vector<double>& lo,
                                                 const std::vector<double>& hi) {
    int n = inst.n;
    auto omega_at = [&](double t, std::vector<double>& beta, std::vector<double>& gamma) {
        beta.resize(n);
        gamma.resize(n);
        for (int i = 0; i < n; ++i) {
            beta[i] = (1 - t) * lo[i] + t * hi[i];
            gamma[i] = (1 - t) * lo[n + i] + t * hi[n + i];
        }
        return omega_of(beta, gamma);
    };
    std::vector<double> beta, gamma;
    double wa = omega_at(0.0, beta, gamma);
    double wb = omega_at(1.0, beta, gamma);
    if (wa == 0.0 && wb == 0.0) return std::nullopt;
    if (wa > wb) return search_on_segment(inst, ord, hi, lo);
    if (wa > 0 || wb < 0) return std::nullopt;
    double a = 0.0, b = 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (a + b);
        double w = omega_at(mid, beta, gamma);
        if (std::abs(w) <= 1e-13) break;
        (w < 0 ? a : b) = mid;
    }
    omega_at(0.5 * (a + b), beta, gamma);
    WheelAssignment cand = assemble(inst, ord, beta, gamma);
    AssignmentReport rep = verify_assignment(inst, cand);
    if (rep.ok && cand.eps >= 1e-6) return cand;
    return std::nullopt;
}

}  // namespace

std::optional<WheelAssignment> numeric_search(const WheelInstance& inst,
                                              const std::vector<int>& ordering) {
    int n = inst.n;
    RelaxationLp base(inst, ordering);
    LpResult best = base.maximize_eps();
    if (best.status != LpStatus::Optimal || best.objective <= 0) return std::nullopt;

    Rat floor = best.objective / 2;
    if (floor > Rat(1, 2)) floor = Rat(1, 2);
    RelaxationLp lp(inst, ordering);
    lp.add_eps_floor(floor);

    std::vector<std::vector<double>> points;
    points.push_back(lp_point_to_doubles(best.point, 2 * n));
    std::vector<std::vector<Rat>> objectives;
    {
        std::vector<Rat> c(2 * n + 1, Rat(0));
        for (int i = 0; i < n; ++i) {
            c[i] = 1;
            c[n + i] = -1;
        }
        objectives.push_back(c);
        for (auto& v : c) v = -v;
        objectives.push_back(c);
    }
    for (int j = 0; j < 2 * n; ++j) {
        std::vector<Rat> c(2 * n + 1, Rat(0));
        c[j] = 1;
        objectives.push_back(c);
        c[j] = -1;
        objectives.push_back(c);
    }
    for (const auto& obj : objectives) {
        LpResult r = lp.maximize(obj);
        if (r.status == LpStatus::Optimal) points.push_back(lp_point_to_doubles(r.point, 2 * n));
    }

    // Pick the most negative / most positive omega seeds and bisect between
    // them; all convex combinations keep eps >= floor.
    int neg = -1, pos = -1;
    double wneg = 0, wpos = 0;
    std::vector<double> beta(n), gamma(n);
    for (int k = 0; k < (int)points.size(); ++k) {
        for (int i = 0; i < n; ++i) {
            beta[i] = points[k][i];
            gamma[i] = points[k][n + i];
        }
        double w = omega_of(beta, gamma);
        if (w <= 0 && (neg < 0 || w < wneg)) {
            neg = k;
            wneg = w;
        }
        if (w >= 0 && (pos < 0 || w > wpos)) {
            pos = k;
            wpos = w;
        }
    }
    if (neg < 0 || pos < 0) return std::nullopt;
    return search_on_segment(inst, ordering, points[neg], points[pos]);
}

// ---------------------------------------------------------------------------
// closed-form certificate constructors

namespace {

// psi_i = phi_i * S / sum(phi); beta_i = gamma_{i+1} = psi_i / 2. Valid for
// n = 3 always, and for n = 4,5 when phi_0 <= 120.
WheelAssignment construct_scaled(const WheelInstance& inst) {
    int n = inst.n;
    Rat S((n - 2) * 180);
    Rat total = inst.sum();
    std::vector<Rat> beta(n), gamma(n);
    for (int i = 0; i < n; ++i) {
        Rat psi = inst.phis[i] * S / total;
        beta[i] = psi / 2;
        gamma[(i + 1) % n] = psi / 2;
    }
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    return assemble_exact(inst, ord, beta, gamma);
}

WheelAssignment construct_square(const WheelInstance& inst) {
    std::vector<Rat> beta(4, Rat(45)), gamma(4, Rat(45));
    return assemble_exact(inst, {0, 1, 2, 3}, beta, gamma);
}

WheelAssignment construct_4x180(const WheelInstance& inst) {
    Rat phi4 = inst.phis[4];
    Rat delta = (phi4 < 60 ? phi4 : Rat(60)) / 32;
    std::vector<Rat> beta(5), gamma(5);
    beta[0] = gamma[1] = 8 * delta;
    gamma[0] = beta[1] = Rat(90) - 5 * delta;
    for (int i = 2; i < 5; ++i) beta[i] = gamma[i] = Rat(60) - delta;
    return assemble_exact(inst, {4, 0, 1, 2, 3}, beta, gamma);
}

WheelAssignment construct_3x180(const WheelInstance& inst) {
    Rat s = inst.phis[3] + inst.phis[4] - 120;
    Rat psi3 = inst.phis[3] - s / 4;
    Rat psi4 = inst.phis[4] - s / 4;
    Rat delta = s / 64;
    std::vector<Rat> beta(5), gamma(5);
    beta[0] = gamma[0] = Rat(90) - (psi3 + psi4) / 4 + 2 * delta;
    beta[1] = psi3 / 2;
    gamma[1] = Rat(90) - psi3 / 4 - delta;
    beta[2] = Rat(90) - psi3 / 4 - delta;
    gamma[2] = psi3 / 2;
    beta[3] = psi4 / 2;
    gamma[3] = Rat(90) - psi4 / 4 - delta;
    beta[4] = Rat(90) - psi4 / 4 - delta;
    gamma[4] = psi4 / 2;
    // corners: 180, phi3, 180, phi4, 180
    return assemble_exact(inst, {0, 3, 1, 4, 2}, beta, gamma);
}

// Bisection helper for the one-parameter wheel templates.
template <class F>
double bisect_root(F f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (std::abs(fm) <= 1e-14) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// {180, 180, phi2, phi3, phi4} with phi2+phi3+phi4 > 240: x parametrizes
// the split of the phi4 corner, the root of f restores the wheel condition.
std::optional<WheelAssignment> construct_2x180(const WheelInstance& inst) {
    Rat s = inst.phis[2] + inst.phis[3] + inst.phis[4] - 240;
    Rat delta = s / 100;
    if (delta > 1) delta = 1;
    Rat t = (s - 8 * delta) / 3;
    double p2 = to_double(inst.phis[2] - t);
    double p3 = to_double(inst.phis[3] - t);
    double p4 = to_double(inst.phis[4] - t);
    double d = to_double(delta);
    auto assignment_at = [&](double x) {
        std::vector<double> beta(5), gamma(5);
        beta[0] = x;
        gamma[0] = 90 - x / 2 - d;
        beta[1] = 90 - p4 / 2 + x / 2 - d;
        gamma[1] = p4 - x;
        beta[2] = p3 - 60 + d;
        gamma[2] = 120 - p3 / 2 - d;
        beta[3] = 60 - d;
        gamma[3] = 60 - d;
        beta[4] = 120 - p2 / 2 - d;
        gamma[4] = p2 - 60 + d;
        return std::make_pair(beta, gamma);
    };
    auto f = [&](double x) {
        auto [beta, gamma] = assignment_at(x);
        return omega_of(beta, gamma);
    };
    if (!(f(0.0) < 0 && f(p4) > 0)) return std::nullopt;
    double x = bisect_root(f, 0.0, p4);
    auto [beta, gamma] = assignment_at(x);
    // corners: phi4, 180, phi3, phi2, 180
    WheelAssignment a = assemble(inst, {4, 0, 3, 2, 1}, beta, gamma);
    if (verify_assignment(inst, a).ok) return a;
    return std::nullopt;
}

// n = 4, phi0 = 180, phi1 in (90,120], phi2, phi3 <= 60: the all-right-
// angle template; x in (0, Delta) restores the wheel condition.
std::optional<WheelAssignment> construct_p4_right_angles(const WheelInstance& inst) {
    Rat s = inst.phis[1] + inst.phis[2] + inst.phis[3] - 180;
    Rat Delta = s / 8;
    Rat t = 7 * s / 24;
    double psi2 = to_double(inst.phis[2] - t);
    double psi3 = to_double(inst.phis[3] - t);
    double D = to_double(Delta);
    auto assignment_at = [&](double x) {
        std::vector<double> beta(4), gamma(4);
        beta[0] = psi2 - x;
        gamma[0] = 90 - psi2 + x;
        beta[1] = 90 - x;
        gamma[1] = x;
        beta[2] = D - x;
        gamma[2] = 90 - D + x;
        beta[3] = 90 - psi3 + D - x;
        gamma[3] = psi3 - D + x;
        return std::make_pair(beta, gamma);
    };
    auto f = [&](double x) {
        auto [beta, gamma] = assignment_at(x);
        return omega_of(beta, gamma);
    };
    if (!(f(0.0) > 0 && f(D) < 0)) return std::nullopt;
    double x = bisect_root(f, 0.0, D);
    auto [beta, gamma] = assignment_at(x);
    // corners: phi2, 180, phi3, phi1
    WheelAssignment a = assemble(inst, {2, 0, 3, 1}, beta, gamma);
    if (verify_assignment(inst, a).ok) return a;
    return std::nullopt;
}

// n = 4, one 180 and general remaining corners: corners (180, A, B, C) with
// half-split gadgets at A and C and free splits y (at the 180 corner) and
// x (at B). The wheel condition reduces to
//   sin(y) sin(x) = sin(xi - y) sin(B - x),  xi = 360 - A - B - C.
std::optional<WheelAssignment> construct_p4_template(const WheelInstance& inst) {
    Rat sr = inst.phis[1] + inst.phis[2] + inst.phis[3] - 180;
    Rat tr = sr / 8;
    double psi[3] = {to_double(inst.phis[1] - tr), to_double(inst.phis[2] - tr),
                     to_double(inst.phis[3] - tr)};
    // phi indices of (A, B, C) among 1..3 for each arrangement tried.
    const int arrangements[3][3] = {{1, 3, 2}, {1, 2, 3}, {2, 3, 1}};
    for (const auto& arr : arrangements) {
        double A = psi[arr[0] - 1], B = psi[arr[1] - 1], C = psi[arr[2] - 1];
        double xi = 360 - A - B - C;
        if (xi <= 0 || xi >= 180) continue;
        double ylo = std::max({0.0, xi + A / 4 - 90, A + xi - 180});
        double yhi = std::min({90 - C / 4, 180 - C, xi});
        double xlo = std::max({0.0, B + C / 4 - 90, B + C - 180});
        double xhi = std::min({90 - A / 4, 180 - A, B});
        if (ylo >= yhi || xlo >= xhi) continue;
        auto build = [&](double y, double x) {
            std::vector<double> beta(4), gamma(4);
            beta[0] = y;
            gamma[0] = C / 2;
            beta[1] = A / 2;
            gamma[1] = xi - y;
            beta[2] = x;
            gamma[2] = A / 2;
            beta[3] = C / 2;
            gamma[3] = B - x;
            return std::make_pair(beta, gamma);
        };
        for (int k = 1; k <= 15; ++k) {
            double y = ylo + (yhi - ylo) * k / 16.0;
            auto f = [&](double x) {
                auto [beta, gamma] = build(y, x);
                return omega_of(beta, gamma);
            };
            double margin = std::min(xhi - xlo, 1e-4) / 8;
            double flo = f(xlo + margin), fhi = f(xhi - margin);
            if ((flo < 0) == (fhi < 0)) continue;
            double x = bisect_root(f, xlo + margin, xhi - margin);
            auto [beta, gamma] = build(y, x);
            std::vector<int> ord = {0, arr[0], arr[1], arr[2]};
            WheelAssignment a = assemble(inst, ord, beta, gamma);
            if (verify_assignment(inst, a).ok && a.eps > 0) return a;
        }
    }
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// the 1x180 sufficient condition

Sufficient1x180Report sufficient_1x180(const Rat& phi1, const Rat& phi2, const Rat& phi3,
                                       const Rat& phi4) {
    if (!(phi3 > 90 && phi3 <= phi2 && phi2 <= phi1 && phi1 <= 120))
        throw std::invalid_argument("sufficient_1x180: need 90 < phi3 <= phi2 <= phi1 <= 120");
    if (!(phi4 >= 0 && phi4 <= 60))
        throw std::invalid_argument("sufficient_1x180: need 0 <= phi4 <= 60");
    Sufficient1x180Report rep;
    Rat lhs = 14 * phi1 + 12 * phi2 + 8 * phi3 + 15 * phi4;
    rep.condition_i = lhs > 4500;
    Rat x = (lhs - 4500) / 7;
    if (x > phi4) x = phi4;
    if (x < 0) x = 0;
    Rat r = phi4 - x;
    std::vector<Rat> beta(5), gamma(5);
    beta[0] = r;
    beta[1] = Rat(90) - x / 2;
    beta[2] = phi3 + phi2 / 2 + phi1 / 4 + r / 8 - Rat(315, 2);
    beta[3] = phi2 + phi1 / 2 + r / 4 - 135;
    beta[4] = phi1 - 90 + r / 2;
    gamma[0] = Rat(90) - r / 2;
    gamma[1] = x;
    gamma[2] = Rat(2700, 16) - phi3 / 2 - phi2 / 4 - phi1 / 8 - r / 16;
    gamma[3] = Rat(315, 2) - phi2 / 2 - phi1 / 4 - r / 8;
    gamma[4] = 135 - phi1 / 2 - r / 4;

    rep.p1.tau = {4, 0, 3, 2, 1};
    for (int i = 0; i < 5; ++i) {
        rep.p1.beta.push_back(to_double(beta[i]));
        rep.p1.gamma.push_back(to_double(gamma[i]));
    }
    rep.omega_p1 = evaluate_omega(rep.p1);
    rep.omega_negative = rep.omega_p1 < 0;

    // Exact S_tau membership check (diagnostic; the hyperplane equality
    // fails by design when the min in x picked phi4).
    std::vector<Rat> phis = {Rat(180), phi1, phi2, phi3, phi4};
    bool ok = true;
    Rat total = 0;
    for (int i = 0; i < 5; ++i) {
        if (beta[i] < 0 || gamma[i] < 0) ok = false;
        if (beta[i] + gamma[(i + 1) % 5] > phis[rep.p1.tau[i]]) ok = false;
        if (Rat(180) - beta[i] - gamma[i] < beta[i]) ok = false;
        if (Rat(180) - beta[i] - gamma[i] < gamma[i]) ok = false;
        total += beta[i] + gamma[i];
    }
    if (total != 540) ok = false;
    rep.p1_in_simplex = ok;
    return rep;
}

namespace {

// Segment seeds from the 1x180 lemma: p1 (omega < 0 when the condition
// holds) and p2 (omega > 0 by construction, gamma_1 = 0).
std::optional<WheelAssignment> construct_1x180(const WheelInstance& inst,
                                               const Sufficient1x180Report& suff) {
    const Rat& phi1 = inst.phis[1];
    const Rat& phi2 = inst.phis[2];
    const Rat& phi3 = inst.phis[3];
    const Rat& phi4 = inst.phis[4];
    Rat D = 14 * phi1 + 12 * phi2 + 8 * phi3 + 15 * phi4 - 4500;
    Rat epsr = D / 160;
    if (epsr > phi4 / 4) epsr = phi4 / 4;
    if (epsr > Rat(1, 2)) epsr = Rat(1, 2);
    // psi = B + (1-l)(phi - B) against base B = (90,90,90,0) so that
    // 14 psi1 + 12 psi2 + 8 psi3 + 15 psi4 = 4500 + 80 eps.
    Rat denom = Rat(1440) + D;
    Rat lam_keep = (Rat(1440) + 80 * epsr) / denom;  // = 1 - lambda
    Rat psi1 = 90 + lam_keep * (phi1 - 90);
    Rat psi2 = 90 + lam_keep * (phi2 - 90);
    Rat psi3 = 90 + lam_keep * (phi3 - 90);
    Rat psi4 = lam_keep * phi4;
    std::vector<double> p2(10);
    double e = to_double(epsr);
    double s1 = to_double(psi1), s2 = to_double(psi2), s3 = to_double(psi3), s4 = to_double(psi4);
    p2[0] = s4;
    p2[1] = 90 - e;
    p2[2] = s3 + s2 / 2 + s1 / 4 + s4 / 8 - 157.5;
    p2[3] = s2 + s1 / 2 + s4 / 4 - 135;
    p2[4] = s1 - 90 + s4 / 2;
    p2[5] = 90 - s4 / 2 - e;
    p2[6] = 168.75 - s3 / 2 - s2 / 4 - s1 / 8 - s4 / 16 - e;
    p2[7] = 157.5 - s2 / 2 - s1 / 4 - s4 / 8 - e;
    p2[8] = 0;
    p2[9] = 135 - s1 / 2 - s4 / 4 - e;
    std::vector<double> p1(10);
    for (int i = 0; i < 5; ++i) {
        p1[i] = suff.p1.beta[i];
        p1[5 + i] = suff.p1.gamma[i];
    }
    // p2 layout: beta then gamma in the same corner indexing; gamma_1 is
    // slot 8 in the paper's listing order (gamma0, gamma1, ...). Fix order:
    std::vector<double> q2(10);
    q2[0] = p2[0];
    q2[1] = p2[1];
    q2[2] = p2[2];
    q2[3] = p2[3];
    q2[4] = p2[4];
    q2[5] = p2[5];
    q2[6] = 0;        // gamma_1
    q2[7] = p2[6];    // gamma_2
    q2[8] = p2[7];    // gamma_3
    q2[9] = p2[9];    // gamma_4
    return search_on_segment(inst, suff.p1.tau, p1, q2);
}

}  // namespace

// ---------------------------------------------------------------------------
// the decision ladder

WheelDecision decide_membership(const WheelInstance& inst) {
    WheelDecision d;
    int n = inst.n;
    auto yes = [&](const char* lemma, std::optional<WheelAssignment> a) {
        d.verdict = WheelVerdict::Yes;
        d.lemma = lemma;
        if (a && verify_assignment(inst, *a).ok) d.assignment = std::move(a);
        return d;
    };
    auto no = [&](const std::string& lemma) {
        d.verdict = WheelVerdict::No;
        d.lemma = lemma;
        return d;
    };

    if (inst.sum() <= inst.angle_sum_threshold())
        return no("angle sum at most (n-2)*180");

    if (n == 3) return yes("P3: any three bounds with sum above 180", construct_scaled(inst));

    if (n == 4) {
        if (inst.phis[0] <= 120) return yes("P4: all bounds at most 120", construct_scaled(inst));
        std::optional<WheelAssignment> a;
        if (inst.phis[3] > 90) {
            a = construct_square(inst);
        } else if (inst.phis[1] > 90 && inst.phis[2] > 90) {
            a = construct_p4_template(inst);
        } else if (inst.phis[1] > 90 && inst.phis[2] <= 60) {
            a = construct_p4_right_angles(inst);
            if (!a) a = construct_p4_template(inst);
        }
        if (!a) {
            for (const auto& ord : canonical_orderings(inst)) {
                a = numeric_search(inst, ord);
                if (a) break;
            }
        }
        if (in_table_ranges(inst))
            return yes("P4: one 180 bound", std::move(a));  // always-yes row
        // Outside the table ranges the closed-form row is not available;
        // report what the search established.
        if (a) return yes("P4: numeric wheel solution", std::move(a));
        d.lp = lp_relaxation_feasible(inst);
        if (!d.lp.any_feasible) return no("LP infeasible for all orderings");
        d.verdict = WheelVerdict::Uncertain;
        d.attempts.push_back("bounds outside the membership-table ranges");
        d.attempts.push_back("numeric search found no verified assignment");
        return d;
    }

    // n == 5
    if (inst.phis[0] <= 120) return yes("P5: all bounds at most 120", construct_scaled(inst));
    if (inst.phis[3] == 180) return yes("P5: four 180 bounds", construct_4x180(inst));
    if (inst.phis[2] == 180) {
        if (inst.phis[3] + inst.phis[4] > 120)
            return yes("P5: three 180 bounds, phi3+phi4 > 120", construct_3x180(inst));
        return no("P5: three 180 bounds, phi3+phi4 <= 120");
    }
    if (inst.phis[1] == 180) {
        if (inst.phis[2] + inst.phis[3] + inst.phis[4] > 240)
            return yes("P5: two 180 bounds, phi2+phi3+phi4 > 240", construct_2x180(inst));
        return no("P5: two 180 bounds, phi2+phi3+phi4 <= 240");
    }

    // Exactly one 180 (the sum test rules out zero-180 instances that are
    // not already <= 120): phi1..phi3 in (90,120], phi4 in (0,60] or
    // (90,120].
    bool suff_applicable =
        inst.phis[0] == 180 && inst.phis[1] <= 120 && inst.phis[3] > 90 && inst.phis[4] <= 60;
    if (suff_applicable) {
        auto suff = sufficient_1x180(inst.phis[1], inst.phis[2], inst.phis[3], inst.phis[4]);
        if (suff.holds()) {
            // Prefer the generic search: its eps floor leaves the embedder
            // more room than a root found right at the simplex boundary.
            std::optional<WheelAssignment> a;
            for (const auto& ord : canonical_orderings(inst)) {
                a = numeric_search(inst, ord);
                if (a) break;
            }
            if (!a) a = construct_1x180(inst, suff);
            return yes("P5: 1x180 sufficient condition", std::move(a));
        }
        d.attempts.push_back("1x180 sufficient condition does not hold");
    }

    d.lp = lp_relaxation_feasible(inst);
    if (!d.lp.any_feasible) return no("LP infeasible for all orderings");

    int k = (int)d.lp.orderings.size();
    std::vector<std::optional<WheelAssignment>> found((size_t)k);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < k; ++i) {
        if (d.lp.feasible[i]) found[i] = numeric_search(inst, d.lp.orderings[i]);
    }
    for (int i = 0; i < k; ++i) {
        if (found[i]) {
            d.verdict = WheelVerdict::Yes;
            d.lemma = "numeric wheel solution";
            d.assignment = std::move(found[i]);
            return d;
        }
    }
    d.verdict = WheelVerdict::Uncertain;
    d.attempts.push_back("closed-form membership rows not applicable");
    d.attempts.push_back("LP relaxation feasible for at least one ordering");
    d.attempts.push_back("numeric search found no verified assignment");
    return d;
}

}  // namespace greedy
