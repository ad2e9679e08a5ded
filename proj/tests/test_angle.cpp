#include <doctest.h>

#include "greedy/angle.hpp"

using namespace greedy;

TEST_CASE("rationals: parsing and printing") {
    CHECK(rat_to_string(*rat_from_decimal("93.75")) == "93.75");
    CHECK(rat_to_string(Rat(225, 2)) == "112.5");
    CHECK(rat_to_string(Rat(1500, 16)) == "93.75");
    CHECK(*rat_from_decimal("60.0625") == Rat(961, 16));
    CHECK(rat_to_string(Rat(1, 3)) == "1/3");
    CHECK(is_dyadic(Rat(3, 8)));
    CHECK(!is_dyadic(Rat(1, 7)));
    CHECK(!rat_from_decimal("1.2.3").has_value());
    CHECK(*rat_from_decimal("90/7") == Rat(90, 7));
}

TEST_CASE("display forms") {
    CHECK(AngleBound::sup(Rat(1500, 16)).str() == "93.75⁻");
    CHECK(AngleBound::path().str() == "180");
    CHECK(AngleBound::closed().str() == "closed");
}

TEST_CASE("pure star bounds") {
    CHECK(pure_path_star_bound(2) == AngleBound::path());
    CHECK(pure_path_star_bound(3) == AngleBound::sup(Rat(120)));
    CHECK(pure_path_star_bound(4) == AngleBound::sup(Rat(60)));
    CHECK_THROWS(pure_path_star_bound(5));
}

TEST_CASE("classification of the combine rows") {
    auto s = [](int num, int den = 1) { return AngleBound::sup(Rat(num, den)); };
    CHECK(classify_case({s(120)}, 1).label == CaseLabel::II_i);
    CHECK(classify_case({s(105), s(100)}, 0).label == CaseLabel::IV);
    CHECK(classify_case({s(119), s(100), s(95)}, 0).label == CaseLabel::VII);
    CHECK(classify_case({s(110)}, 0).label == CaseLabel::I);
    CHECK(classify_case({s(50)}, 1).label == CaseLabel::II_ii);
    CHECK(classify_case({s(110)}, 2).label == CaseLabel::III);
    CHECK(classify_case({s(40)}, 2).label == CaseLabel::III);
    CHECK(classify_case({s(110), s(100)}, 1).label == CaseLabel::V);
    CHECK(classify_case({s(110), s(50)}, 0).label == CaseLabel::VI);
    CHECK(classify_case({s(110), s(50)}, 1).label == CaseLabel::VI);
    CHECK(classify_case({s(50), s(40)}, 0).label == CaseLabel::VI);
}

TEST_CASE("combine formulas match the table") {
    auto s = [](int num, int den = 1) { return AngleBound::sup(Rat(num, den)); };
    CHECK(combine(classify_case({s(120)}, 1)) == s(105));          // II.i
    CHECK(combine(classify_case({s(120), s(120)}, 0)) == s(60));   // IV
    CHECK(combine(classify_case({s(120), s(120)}, 1)) == s(75, 2));  // V -> 37.5
    CHECK(combine(classify_case({s(105), s(100)}, 0)) == s(25));   // IV
    CHECK(combine(classify_case({s(110)}, 2)) == s(55));           // III
    CHECK(combine(classify_case({s(50)}, 1)) == s(50));            // II.ii
    CHECK(combine(classify_case({s(97), s(93)}, 1)) ==
          AngleBound::sup(Rat(3) * 97 / 4 + Rat(93) / 2 - Rat(225, 2)));  // V
    CHECK(combine(classify_case({s(100), s(100), s(100)}, 0)).is_closed());
}

TEST_CASE("case I keeps the value but yields a supremum") {
    AngleBound in = AngleBound::sup(Rat(107));
    AngleBound out = combine(classify_case({in}, 0));
    CHECK(out.value == in.value);
    CHECK(out.kind == BoundKind::StrictSupremum);
}

TEST_CASE("closure: results never land in the gaps") {
    // exhaustive sweep over a fine dyadic grid of each row's domain
    auto in_valid = [](const AngleBound& b) {
        if (b.is_closed()) return true;
        return (b.value > 0 && b.value <= 60) || (b.value > 90 && b.value <= 120);
    };
    for (int n16 = 16 * 90 + 1; n16 <= 16 * 120; ++n16) {
        Rat phi(n16, 16);
        CHECK(in_valid(combine(classify_case({AngleBound::sup(phi)}, 1))));
        for (int m16 = 16 * 90 + 1; m16 <= n16; m16 += 7) {
            Rat psi(m16, 16);
            auto iv = combine(classify_case({AngleBound::sup(phi), AngleBound::sup(psi)}, 0));
            auto v = combine(classify_case({AngleBound::sup(phi), AngleBound::sup(psi)}, 1));
            CHECK(in_valid(iv));
            CHECK(in_valid(v));
        }
    }
    for (int n16 = 1; n16 <= 16 * 60; n16 += 3) {
        Rat phi(n16, 16);
        CHECK(in_valid(combine(classify_case({AngleBound::sup(phi)}, 1))));
        CHECK(in_valid(combine(classify_case({AngleBound::sup(phi)}, 2))));
    }
    for (int n16 = 1; n16 <= 16 * 120; n16 += 5) {
        Rat phi(n16, 16);
        if (phi > 60 && phi <= 90) continue;
        CHECK(in_valid(combine(classify_case({AngleBound::sup(phi)}, 2))));
    }
}

TEST_CASE("monotonicity within a fixed case") {
    auto s = [](const Rat& r) { return AngleBound::sup(r); };
    Rat prev = -1;
    for (int k = 16 * 90 + 1; k <= 16 * 120; k += 11) {
        auto out = combine(CombineCase{CaseLabel::II_i, {AngleBound::path(), s(Rat(k, 16))}});
        CHECK(out.value > prev);
        prev = out.value;
    }
    // case V monotone in both arguments
    auto v = [&](int a16, int b16) {
        return combine(CombineCase{CaseLabel::V,
                                   {AngleBound::path(), s(Rat(a16, 16)), s(Rat(b16, 16))}})
            .value;
    };
    CHECK(v(16 * 120, 16 * 100) > v(16 * 119, 16 * 100));
    CHECK(v(16 * 120, 16 * 100) > v(16 * 120, 16 * 99));
}

TEST_CASE("sum tests use exact strict comparison") {
    auto s = [](const Rat& r) { return AngleBound::sup(r); };
    std::vector<AngleBound> five = {s(Rat(120)), s(Rat(105)), s(Rat(105)), s(Rat(105)),
                                    s(Rat(105))};
    CHECK(!sum_exceeds(five, Rat(540)));  // sum is exactly 540
    std::vector<AngleBound> mixed = {s(Rat(120)), s(Rat(120)), s(Rat(120)), s(Rat(90)),
                                     s(Rat(105))};
    CHECK(sum_exceeds(mixed, Rat(540)));  // 555
    std::vector<AngleBound> paths = {AngleBound::path(), AngleBound::path()};
    CHECK(sum_exceeds(paths, Rat(0)));
    CHECK_THROWS(sum_exceeds({AngleBound::closed()}, Rat(0)));
}
