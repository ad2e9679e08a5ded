#include "greedy/rational.hpp"

#include <sstream>

namespace greedy {

std::optional<Rat> rat_from_decimal(const std::string& text) {
    std::string s = text;
    if (s.empty()) return std::nullopt;
    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    BigInt num = 0;
    BigInt den = 1;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) return std::nullopt;
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            num = num * 10 + (c - '0');
            if (seen_dot) den *= 10;
            seen_digit = true;
        } else if (c == '/') {
            // Allow "p/q" as well.
            if (seen_dot || !seen_digit) return std::nullopt;
            auto rhs = rat_from_decimal(s.substr(i + 1));
            if (!rhs || *rhs == 0) return std::nullopt;
            Rat lhs(num, 1);
            if (neg) lhs = -lhs;
            return lhs / *rhs;
        } else {
            return std::nullopt;
        }
    }
    if (!seen_digit) return std::nullopt;
    Rat r(num, den);
    if (neg) r = -r;
    return r;
}

std::string rat_to_string(const Rat& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    int twos = 0, fives = 0;
    BigInt d = den;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        std::ostringstream os;
        os << (neg ? "-" : "") << num << "/" << den;
        return os.str();
    }
    int digits = std::max(twos, fives);
    for (int i = twos; i < digits; ++i) num *= 2;
    for (int i = fives; i < digits; ++i) num *= 5;
    std::string ds = num.str();
    std::string out = neg ? "-" : "";
    if (digits == 0) return out + ds;
    if ((int)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string intpart = ds.substr(0, ds.size() - digits);
    std::string frac = ds.substr(ds.size() - digits);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out += intpart;
    if (!frac.empty()) out += "." + frac;
    return out;
}

}  // namespace greedy
