// Compares the OpenMP drawing verifier against the serial reference and
// times the parallel wheel-ordering search. Not part of the test suite.

#include <chrono>
#include <cstdio>
#include <random>

#include "greedy/drawing.hpp"
#include "greedy/generators.hpp"
#include "greedy/wheel.hpp"

using namespace greedy;
using clk = std::chrono::steady_clock;

namespace {

double secs_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 1200;
    std::mt19937 rng(12345);
    Tree t = random_tree(n, 4, rng);
    Drawing d;
    d.tree = t;
    d.pos.resize(t.node_count());
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (auto& p : d.pos) p = {coord(rng), coord(rng)};

    VerifyOptions par, ser;
    ser.parallel = false;

    auto t0 = clk::now();
    auto a = verify_drawing(d, ser);
    double ts = secs_since(t0);
    t0 = clk::now();
    auto b = verify_drawing(d, par);
    double tp = secs_since(t0);
    std::printf("verify n=%d: serial %.3fs, openmp %.3fs, speedup %.2fx, agree=%s\n", n, ts, tp,
                ts / tp, (a.greedy_pairwise == b.greedy_pairwise &&
                          a.worst_margin == b.worst_margin)
                             ? "yes"
                             : "NO");

    // Wheel search: the ordering loop is the parallel kernel.
    std::vector<Rat> phis = {Rat(180), Rat(231, 2), Rat(231, 2), Rat(231, 2), Rat(100)};
    t0 = clk::now();
    auto w = decide_membership(WheelInstance::make(phis));
    std::printf("wheel {180,115.5,115.5,115.5,100}: verdict=%d in %.3fs\n", (int)w.verdict,
                secs_since(t0));
    return 0;
}
