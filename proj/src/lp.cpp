#include "greedy/lp.hpp"

#include <stdexcept>

namespace greedy {

namespace {

// Dense exact tableau over the rationals. Columns: n structural, m slack,
// then one artificial per initially-negative row. Bland's rule throughout,
// so both phases terminate.
struct Tableau {
    int cols = 0;
    int m = 0;
    std::vector<std::vector<Rat>> a;  // m x cols
    std::vector<Rat> rhs;             // m
    std::vector<int> basis;           // m
    std::vector<Rat> zrow;            // cols, phase-2 reduced costs (maximize)
    Rat zval = 0;
    std::vector<Rat> wrow;            // cols, phase-1 reduced costs
    Rat wval = 0;
    bool phase1 = false;

    void pivot(int row, int col) {
        Rat p = a[row][col];
        for (auto& v : a[row]) v /= p;
        rhs[row] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[row][j];
            rhs[i] -= f * rhs[row];
        }
        if (zrow[col] != 0) {
            Rat f = zrow[col];
            for (int j = 0; j < cols; ++j) zrow[j] -= f * a[row][j];
            zval += f * rhs[row];
        }
        if (phase1 && wrow[col] != 0) {
            Rat f = wrow[col];
            for (int j = 0; j < cols; ++j) wrow[j] -= f * a[row][j];
            wval += f * rhs[row];
        }
        basis[row] = col;
    }

    // Maximizes the selected objective; `allowed` masks usable columns.
    // Returns false on unboundedness.
    bool optimize(const std::vector<char>& allowed, bool use_w) {
        while (true) {
            std::vector<Rat>& obj = use_w ? wrow : zrow;
            int col = -1;
            for (int j = 0; j < cols; ++j)
                if (allowed[j] && obj[j] > 0) {
                    col = j;
                    break;
                }
            if (col < 0) return true;
            int row = -1;
            for (int i = 0; i < m; ++i) {
                if (a[i][col] <= 0) continue;
                if (row < 0) {
                    row = i;
                    continue;
                }
                Rat l = rhs[i] * a[row][col];
                Rat r = rhs[row] * a[i][col];
                if (l < r || (l == r && basis[i] < basis[row])) row = i;
            }
            if (row < 0) return false;
            pivot(row, col);
        }
    }
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                  const std::vector<Rat>& c) {
    int m = (int)A.size();
    int n = (int)c.size();
    for (const auto& row : A)
        if ((int)row.size() != n) throw std::invalid_argument("ragged constraint matrix");

    std::vector<int> art_of_row(m, -1);
    int n_art = 0;
    for (int i = 0; i < m; ++i)
        if (b[i] < 0) art_of_row[i] = n_art++;

    Tableau t;
    t.m = m;
    t.cols = n + m + n_art;
    t.a.assign(m, std::vector<Rat>(t.cols, Rat(0)));
    t.rhs = b;
    t.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.a[i][j] = A[i][j];
        t.a[i][n + i] = 1;  // slack
        if (art_of_row[i] >= 0) {
            // Negate the equation so the rhs is nonnegative, then add the
            // artificial as the basic variable.
            for (int j = 0; j < t.cols; ++j) t.a[i][j] = -t.a[i][j];
            t.rhs[i] = -t.rhs[i];
            int ac = n + m + art_of_row[i];
            t.a[i][ac] = 1;
            t.basis[i] = ac;
        } else {
            t.basis[i] = n + i;
        }
    }
    t.zrow.assign(t.cols, Rat(0));
    for (int j = 0; j < n; ++j) t.zrow[j] = c[j];
    t.zval = 0;

    if (n_art > 0) {
        // Phase 1: maximize -sum(artificials); its reduced-cost row is the
        // sum of the artificial rows over non-artificial columns.
        t.phase1 = true;
        t.wrow.assign(t.cols, Rat(0));
        t.wval = 0;
        for (int i = 0; i < m; ++i) {
            if (art_of_row[i] < 0) continue;
            for (int j = 0; j < t.cols; ++j) t.wrow[j] += t.a[i][j];
            t.wval -= t.rhs[i];
        }
        for (int i = 0; i < m; ++i)
            if (art_of_row[i] >= 0) t.wrow[n + m + art_of_row[i]] = 0;
        std::vector<char> allowed(t.cols, 1);
        for (int k = 0; k < n_art; ++k) allowed[n + m + k] = 0;
        t.optimize(allowed, true);  // bounded: objective <= 0
        if (t.wval != 0) {
            LpResult r;
            r.status = LpStatus::Infeasible;
            return r;
        }
        // Pivot any artificial still basic (necessarily at value 0) out.
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < n + m) continue;
            int col = -1;
            for (int j = 0; j < n + m; ++j)
                if (t.a[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col >= 0) t.pivot(i, col);
            // else: the row is all-zero (redundant constraint); leave it.
        }
        t.phase1 = false;
    }

    std::vector<char> allowed(t.cols, 1);
    for (int k = 0; k < n_art; ++k) allowed[n + m + k] = 0;
    if (!t.optimize(allowed, false)) {
        LpResult r;
        r.status = LpStatus::Unbounded;
        return r;
    }
    LpResult r;
    r.status = LpStatus::Optimal;
    r.point.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) r.point[t.basis[i]] = t.rhs[i];
    r.objective = 0;
    for (int j = 0; j < n; ++j) r.objective += c[j] * r.point[j];
    return r;
}

}  // namespace greedy
