#include "greedy/angle.hpp"

#include <algorithm>
#include <stdexcept>

namespace greedy {

std::string AngleBound::str() const {
    switch (kind) {
        case BoundKind::ExactlyAchievable:
            return rat_to_string(value);
        case BoundKind::StrictSupremum:
            return rat_to_string(value) + "⁻";
        default:
            return "closed";
    }
}

const char* case_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::I: return "I";
        case CaseLabel::II_i: return "II.i";
        case CaseLabel::II_ii: return "II.ii";
        case CaseLabel::III: return "III";
        case CaseLabel::IV: return "IV";
        case CaseLabel::V: return "V";
        case CaseLabel::VI: return "VI";
        default: return "VII";
    }
}

CombineCase classify_case(std::vector<AngleBound> nontrivial, int path_children) {
    if (nontrivial.empty()) throw std::invalid_argument("pure star of paths handled elsewhere");
    std::sort(nontrivial.begin(), nontrivial.end(),
              [](const AngleBound& a, const AngleBound& b) { return a.value > b.value; });
    CombineCase c;
    c.inputs.assign((size_t)path_children, AngleBound::path());
    c.inputs.insert(c.inputs.end(), nontrivial.begin(), nontrivial.end());
    int nt = (int)nontrivial.size();
    if (nt + path_children > 3 || nt > 3) {
        c.label = CaseLabel::VII;
        return c;
    }
    const AngleBound& f0 = nontrivial[0];
    if (nt == 1) {
        if (path_children == 0) {
            c.label = CaseLabel::I;
        } else if (path_children == 1) {
            if (f0.in_90_120())
                c.label = CaseLabel::II_i;
            else if (f0.in_0_60())
                c.label = CaseLabel::II_ii;
            else
                c.label = CaseLabel::VI;  // the (60,90] gap never arises internally
        } else {
            c.label = f0.value <= 120 ? CaseLabel::III : CaseLabel::VI;
        }
    } else if (nt == 2) {
        bool both = f0.in_90_120() && nontrivial[1].in_90_120();
        if (path_children == 0)
            c.label = both ? CaseLabel::IV : CaseLabel::VI;
        else
            c.label = both ? CaseLabel::V : CaseLabel::VI;
    } else {
        c.label = CaseLabel::VII;
    }
    return c;
}

AngleBound combine(const CombineCase& c) {
    std::vector<Rat> nt;
    for (const auto& b : c.inputs)
        if (!b.is_path()) nt.push_back(b.value);
    std::sort(nt.begin(), nt.end(), std::greater<Rat>());
    switch (c.label) {
        case CaseLabel::I:
            return AngleBound::sup(nt.at(0));
        case CaseLabel::II_i:
            return AngleBound::sup(nt.at(0) / 2 + 45);
        case CaseLabel::II_ii:
            return AngleBound::sup(nt.at(0));
        case CaseLabel::III:
            return AngleBound::sup(nt.at(0) / 2);
        case CaseLabel::IV:
            return AngleBound::sup(nt.at(0) + nt.at(1) - 180);
        case CaseLabel::V:
            return AngleBound::sup(Rat(3) / 4 * nt.at(0) + nt.at(1) / 2 - Rat(225, 2));
        default:
            return AngleBound::closed();
    }
}

AngleBound pure_path_star_bound(int node_degree) {
    if (node_degree < 1 || node_degree > 4)
        throw std::invalid_argument("pure_path_star_bound: degree must be 1..4");
    if (node_degree <= 2) return AngleBound::path();
    return AngleBound::sup(Rat(180 - (node_degree - 2) * 60));
}

Rat bounds_sum(const std::vector<AngleBound>& bounds) {
    Rat s = 0;
    for (const auto& b : bounds) s += b.value;
    return s;
}

bool sum_exceeds(const std::vector<AngleBound>& bounds, const Rat& threshold_degrees) {
    for (const auto& b : bounds)
        if (b.is_closed()) throw std::invalid_argument("sum_exceeds: closed bound");
    return bounds_sum(bounds) > threshold_degrees;
}

}  // namespace greedy
