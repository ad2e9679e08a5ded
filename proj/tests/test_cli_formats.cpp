// Serialization details the CLI relies on (exact decimal rendering, tree
// round trips, bound display): these pin the external text formats.
#include <doctest.h>

#include "greedy/angle.hpp"
#include "greedy/generators.hpp"
#include "greedy/opening_angle.hpp"

using namespace greedy;

TEST_CASE("Q2 rooted at b0 prints 97.5-, Q3 prints 93.75-") {
    Tree q2 = make_caterpillar(2);
    RootedSubtree s2{q2, q2.index_of("b0"), q2.neighbors(q2.index_of("b0"))[0]};
    CHECK(get_open_angle(s2).str() == "97.5⁻");
    Tree q3 = make_caterpillar(3);
    RootedSubtree s3{q3, q3.index_of("b0"), q3.neighbors(q3.index_of("b0"))[0]};
    CHECK(get_open_angle(s3).str() == "93.75⁻");
}

TEST_CASE("tree serialization is deterministic under node renaming order") {
    Tree a = parse_tree("b c\na b");
    Tree b = parse_tree("a b\nb c");
    CHECK(serialize_tree(a) == serialize_tree(b));
}

TEST_CASE("interesting thresholds stay exact") {
    CHECK(rat_to_string(Rat(75, 2)) == "37.5");
    CHECK(rat_to_string(Rat(961, 16)) == "60.0625");
    CHECK(rat_to_string(Rat(540)) == "540");
}
