#pragma once

#include "curve.hpp"

#include <compare>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace uniq::oc {

// Linear forms whose orders the engine tracks. Indices are zero-based
// positions in the multiplicity vector.
enum class AtomKind { XLine, YLine, XminusY, L, XVar, YVar, ZVar };

struct Atom {
    AtomKind kind = AtomKind::XVar;
    int i = -1;
    int j = -1;
    auto operator<=>(const Atom&) const = default;
};

inline Atom XL(int i) { return {AtomKind::XLine, i, -1}; }
inline Atom YL(int i) { return {AtomKind::YLine, i, -1}; }
inline Atom XMY() { return {AtomKind::XminusY, -1, -1}; }
inline Atom Lin(int i, int j) { return {AtomKind::L, std::min(i, j), std::max(i, j)}; }
inline Atom XV() { return {AtomKind::XVar, -1, -1}; }
inline Atom YV() { return {AtomKind::YVar, -1, -1}; }
inline Atom ZV() { return {AtomKind::ZVar, -1, -1}; }

inline std::string atom_text(const Atom& a) {
    switch (a.kind) {
        case AtomKind::XLine: return "(X-a" + std::to_string(a.i + 1) + "Z)";
        case AtomKind::YLine: return "(Y-a" + std::to_string(a.i + 1) + "Z)";
        case AtomKind::XminusY: return "(X-Y)";
        case AtomKind::L: return "L" + std::to_string(a.i + 1) + std::to_string(a.j + 1);
        case AtomKind::XVar: return "X";
        case AtomKind::YVar: return "Y";
        case AtomKind::ZVar: return "Z";
    }
    return "?";
}

// N / D * W(u, v) with N, D products of atoms; exponents may be negative.
struct Form {
    std::string name;
    std::map<Atom, int> exps;
    WPair w = WPair::YZ;

    Form& mul(const Atom& a, int e = 1) {
        if (e == 0) return *this;
        int& x = exps[a];
        x += e;
        if (x == 0) exps.erase(a);
        return *this;
    }
    int num_degree() const {
        int d = 0;
        for (auto& [a, e] : exps) d += std::max(e, 0);
        return d;
    }
    int den_degree() const {
        int d = 0;
        for (auto& [a, e] : exps) d += std::max(-e, 0);
        return d;
    }
    std::string text() const {
        std::string num, den;
        auto put = [](std::string& s, const Atom& a, int e) {
            if (!s.empty()) s += " ";
            s += atom_text(a);
            if (e > 1) s += "^" + std::to_string(e);
        };
        for (auto& [a, e] : exps) {
            if (e > 0) put(num, a, e);
            else put(den, a, -e);
        }
        std::string s = std::string(wpair_name(w));
        if (!num.empty()) s = num + " " + s;
        if (!den.empty()) s += " / (" + den + ")";
        return s;
    }
};

struct Configuration {
    CurveKind kind = CurveKind::F;
    std::vector<int> m;  // descending
    Pairing tau;         // kind F_c only

    int l() const { return static_cast<int>(m.size()); }
    int n() const { return 1 + std::accumulate(m.begin(), m.end(), 0); }
    int mult(int i) const { return m[static_cast<std::size_t>(i)]; }
    bool paired(int i) const { return kind == CurveKind::Fc && tau[static_cast<std::size_t>(i)].has_value(); }
    int tau_of(int i) const { return *tau[static_cast<std::size_t>(i)]; }

    void validate() const {
        if (m.empty()) throw std::invalid_argument("configuration needs at least one critical point");
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] < 1) throw std::invalid_argument("multiplicities must be positive");
            if (i && m[i] > m[i - 1]) throw std::invalid_argument("multiplicities must be sorted descending");
        }
        if (kind == CurveKind::F) {
            if (!tau.empty()) throw std::invalid_argument("kind F takes no pairing");
        } else {
            validate_pairing(tau, l());
        }
    }

    std::string text() const {
        std::string s = std::string(kind_name(kind)) + " m=(";
        for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
        s += ")";
        if (kind == CurveKind::Fc) {
            s += " tau=(";
            for (std::size_t i = 0; i < tau.size(); ++i)
                s += (i ? "," : "") + (tau[i] ? std::to_string(*tau[i] + 1) : std::string("-"));
            s += ")";
        }
        return s;
    }
};

// A point where some X-line meets some Y-line on the curve. Orders there are
// t = t_coef k and u = u_coef k for a free integer k >= 1: the relation
// (m_i + 1) t = (m_j + 1) u with its divisibility consequences built in.
struct MarkedPoint {
    std::string label;
    int x_index = 0;
    int y_index = 0;
    long t_coef = 1;
    long u_coef = 1;
    bool diagonal = false;
};

struct OrderLedger {
    std::vector<MarkedPoint> points;
    std::vector<std::string> relations;
};

inline OrderLedger build_ledger(const Configuration& c) {
    c.validate();
    OrderLedger led;
    for (int i = 0; i < c.l(); ++i) {
        std::string idx = std::to_string(i + 1);
        if (c.kind == CurveKind::F) {
            led.points.push_back({"p" + idx, i, i, 1, 1, true});
            led.relations.push_back("p" + idx + ": ord(X-a" + idx + ") = ord(Y-a" + idx + ") = t <= ord(X-Y)");
            continue;
        }
        if (!c.paired(i)) continue;
        int j = c.tau_of(i);
        long a = c.mult(i) + 1, b = c.mult(j) + 1, g = std::gcd(a, b);
        MarkedPoint p{"p" + idx, i, j, b / g, a / g, false};
        led.points.push_back(p);
        led.relations.push_back("p" + idx + ": " + std::to_string(a) + " t = " + std::to_string(b) + " u, so t = " +
                                std::to_string(p.t_coef) + "k, u = " + std::to_string(p.u_coef) + "k");
    }
    return led;
}

struct Contribution {
    long a = 0;  // coefficient of k
    long b = 0;
    bool exact = true;
};

inline std::optional<Contribution> atom_order(const Configuration& c, const MarkedPoint& p, const Atom& at) {
    long t = p.t_coef, u = p.u_coef;
    switch (at.kind) {
        case AtomKind::XLine: return Contribution{at.i == p.x_index ? t : 0, 0, true};
        case AtomKind::YLine: return Contribution{at.i == p.y_index ? u : 0, 0, true};
        case AtomKind::XminusY:
            if (p.diagonal) return Contribution{t, 0, false};
            return Contribution{0, 0, true};
        case AtomKind::L: {
            if (c.kind != CurveKind::Fc || !c.paired(at.i) || !c.paired(at.j)) return std::nullopt;
            if (at.i == p.x_index || at.j == p.x_index) return Contribution{std::min(t, u), 0, t != u};
            return Contribution{0, 0, false};
        }
        case AtomKind::XVar:
        case AtomKind::YVar: return Contribution{0, 0, false};
        case AtomKind::ZVar: return Contribution{0, 0, true};
    }
    return std::nullopt;
}

struct PointBound {
    std::string label;
    long a = 0;  // bound = a k + b, k >= 1
    long b = 0;
    bool nonnegative = false;
};

struct FormVerdict {
    Form form;
    bool regular = false;
    std::vector<PointBound> bounds;
    std::string reason;
};

inline FormVerdict check_form(const Configuration& c, const OrderLedger& led, const Form& f) {
    FormVerdict v{f, false, {}, ""};
    if (!wronskian_degree_ok(f.num_degree(), f.den_degree())) {
        v.reason = "not well defined: numerator degree " + std::to_string(f.num_degree()) + ", denominator degree " +
                   std::to_string(f.den_degree());
        return v;
    }
    if (f.w != WPair::YZ && f.w != WPair::XZ) {
        v.reason = "unsupported Wronskian";
        return v;
    }
    AtomKind pole_kind = f.w == WPair::YZ ? AtomKind::XLine : AtomKind::YLine;
    for (auto& [a, e] : f.exps) {
        bool in_range = a.i < c.l() && a.j < c.l();
        if (!in_range) {
            v.reason = "atom " + atom_text(a) + " out of range";
            return v;
        }
        if (e < 0 && a.kind != pole_kind) {
            v.reason = "pole along " + atom_text(a) + " is outside the supported pattern";
            return v;
        }
        // away from marked points the Wronskian vanishes to order (m_i+1)t - 1
        // along the i-th line, so poles of order <= m_i are harmless there
        if (e < 0 && -e > c.mult(a.i)) {
            v.reason = "pole order " + std::to_string(-e) + " along " + atom_text(a) + " exceeds m" +
                       std::to_string(a.i + 1) + " = " + std::to_string(c.mult(a.i));
            return v;
        }
    }
    bool ok = true;
    for (auto& p : led.points) {
        PointBound pb{p.label, 0, 0, false};
        if (f.w == WPair::YZ) {
            pb.a += p.u_coef;
        } else {
            pb.a += p.t_coef;
        }
        pb.b -= 1;
        for (auto& [a, e] : f.exps) {
            auto o = atom_order(c, p, a);
            if (!o) {
                v.reason = "atom " + atom_text(a) + " is not defined for this configuration";
                return v;
            }
            if (e < 0 && !o->exact && (o->a || o->b)) {
                v.reason = "only a lower bound is known for " + atom_text(a) + " in a denominator";
                return v;
            }
            pb.a += e * o->a;
            pb.b += e * o->b;
        }
        pb.nonnegative = pb.a >= 0 && pb.a + pb.b >= 0;
        ok = ok && pb.nonnegative;
        v.bounds.push_back(pb);
    }
    v.regular = ok;
    if (!ok) v.reason = "negative order bound at a marked point";
    return v;
}

// Samples admissible orders: random k, random extra order on every atom whose
// order is only bounded below. Returns the smallest order seen.
inline long replay_form(const Configuration& c, const OrderLedger& led, const Form& f, std::mt19937_64& rng,
                        int samples = 32) {
    std::uniform_int_distribution<long> kd(1, 40), slack(0, 5);
    long worst = std::numeric_limits<long>::max();
    for (auto& p : led.points) {
        for (int s = 0; s < samples; ++s) {
            long k = s == 0 ? 1 : kd(rng);
            long ord = (f.w == WPair::YZ ? p.u_coef : p.t_coef) * k - 1 + (s == 0 ? 0 : slack(rng));
            for (auto& [a, e] : f.exps) {
                auto o = atom_order(c, p, a);
                long val = o->a * k + o->b;
                if (!o->exact && s != 0) val += slack(rng);
                ord += e * val;
            }
            worst = std::min(worst, ord);
        }
    }
    return worst;
}

struct Independence {
    bool independent = false;
    std::string argument;
    std::vector<std::string> assumptions;
};

inline const char* kNoLinear = "no linear component";
inline const char* kNoQuadratic = "no quadratic component (a regular form exists, conics are rational)";
inline const char* kDistinctL = "the lines L_ij involved are pairwise distinct";

inline Independence independence(const Form& a, const Form& b, bool have_regular_form) {
    Independence r;
    if (a.w != b.w) {
        r.argument = "forms use different Wronskians";
        return r;
    }
    Form q;
    for (auto& [at, e] : a.exps) q.mul(at, e);
    for (auto& [at, e] : b.exps) q.mul(at, -e);
    int d = q.num_degree();
    if (d == 0) {
        r.argument = "ratio is constant";
        return r;
    }
    auto x_side = [](AtomKind k) { return k == AtomKind::XLine || k == AtomKind::XVar || k == AtomKind::ZVar; };
    auto y_side = [](AtomKind k) { return k == AtomKind::YLine || k == AtomKind::YVar || k == AtomKind::ZVar; };
    bool all_x = true, all_y = true, all_l = true;
    for (auto& [at, e] : q.exps) {
        all_x = all_x && x_side(at.kind);
        all_y = all_y && y_side(at.kind);
        all_l = all_l && at.kind == AtomKind::L;
    }
    std::string ratio = q.text();
    ratio = ratio.substr(0, ratio.find(wpair_name(q.w))) + "...";
    if (d == 1) {
        r.independent = true;
        if (all_x || all_y) {
            r.argument = "ratio depends on one of X/Z, Y/Z only; no component is a line X = const or Y = const";
            return r;
        }
        r.argument = "ratio of two linear forms is nonconstant on every component";
        r.assumptions.push_back(kNoLinear);
        if (all_l) r.assumptions.push_back(kDistinctL);
        return r;
    }
    if (d == 2 && have_regular_form) {
        r.independent = true;
        r.argument = "ratio of two quadrics is nonconstant on every component";
        r.assumptions.push_back(kNoLinear);
        r.assumptions.push_back(kNoQuadratic);
        if (all_l) r.assumptions.push_back(kDistinctL);
        return r;
    }
    r.argument = "no independence argument for a ratio of degree " + std::to_string(d);
    return r;
}

enum class Hyperbolicity { None, Algebraic, Brody };

inline const char* hyperbolicity_name(Hyperbolicity h) {
    switch (h) {
        case Hyperbolicity::None: return "none";
        case Hyperbolicity::Algebraic: return "algebraic";
        case Hyperbolicity::Brody: return "brody";
    }
    return "?";
}

struct CaseAttempt {
    std::string case_label;
    bool success = false;
    std::vector<FormVerdict> forms;
    std::optional<Independence> independence;
};

struct HyperbolicityVerdict {
    Configuration config;
    Hyperbolicity level = Hyperbolicity::None;
    std::vector<CaseAttempt> attempts;
    std::vector<std::string> trace;
    std::set<std::string> assumptions;
    std::string reason;
    OrderLedger ledger;
};

}  // namespace uniq::oc

#include "order_dispatch.hpp"
