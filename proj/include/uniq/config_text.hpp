#pragma once

#include "order_calculus.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uniq {

// "F:3,1"  or  "Fc:2,1,1:2,-,-"  (pairing is 1-based, '-' for unpaired)
inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline oc::Configuration parse_configuration(const std::string& text) {
    auto parts = split_on(text, ':');
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("expected KIND:m1,m2,...[:tau]");
    oc::Configuration c;
    if (parts[0] == "F")
        c.kind = CurveKind::F;
    else if (parts[0] == "Fc" || parts[0] == "F_c")
        c.kind = CurveKind::Fc;
    else
        throw std::invalid_argument("unknown curve kind '" + parts[0] + "'");
    auto num = [](const std::string& s) {
        if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), ::isdigit))
            throw std::invalid_argument("bad integer '" + s + "'");
        return std::stoi(s);
    };
    for (auto& s : split_on(parts[1], ',')) c.m.push_back(num(s));
    if (parts.size() == 3) {
        if (c.kind == CurveKind::F) throw std::invalid_argument("kind F takes no pairing");
        for (auto& s : split_on(parts[2], ',')) {
            if (s == "-")
                c.tau.push_back(std::nullopt);
            else
                c.tau.push_back(num(s) - 1);
        }
    } else if (c.kind == CurveKind::Fc) {
        c.tau.assign(c.m.size(), std::nullopt);
    }
    c.validate();
    return c;
}

// kind F configuration read off a polynomial's critical points
inline oc::Configuration configuration_of(const RationalPoly& p) {
    auto cs = critical_structure(p);
    oc::Configuration c;
    c.kind = CurveKind::F;
    c.m = cs.multiplicities;
    std::sort(c.m.rbegin(), c.m.rend());
    c.validate();
    return c;
}

}  // namespace uniq
