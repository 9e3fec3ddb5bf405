#pragma once

#include "criteria.hpp"
#include "homog.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uniq {

struct CurveData {
    CurveKind kind = CurveKind::F;
    RationalPoly P;
    std::optional<Rational> c;
    HomogPoly F;
    HomogPoly FX, FY, FZ;
    int degree() const { return F.degree(); }
};

inline CurveData make_curve(CurveKind kind, const RationalPoly& p, std::optional<Rational> c, MPoly f) {
    CurveData cd;
    cd.kind = kind;
    cd.P = p;
    cd.c = std::move(c);
    cd.F = HomogPoly::from(std::move(f));
    cd.FX = cd.F.partial(0);
    cd.FY = cd.F.partial(1);
    cd.FZ = cd.F.partial(2);
    return cd;
}

// (P(X) - P(Y)) / (X - Y), homogenized to degree n - 1.
inline CurveData build_F(const RationalPoly& p) {
    int n = p.degree();
    if (n < 2) throw OutOfDomain("curve needs degree >= 2");
    MPoly diff = from_univariate(p, 0) - from_univariate(p, 1);
    MPoly q = mexact_divide(diff, MPoly::X() - MPoly::Y());
    return make_curve(CurveKind::F, p, std::nullopt, homogenize_xy(q, n - 1).poly());
}

inline CurveData build_Fc(const RationalPoly& p, const Rational& c) {
    int n = p.degree();
    if (n < 2) throw OutOfDomain("curve needs degree >= 2");
    if (sgn(c) == 0 || c == 1) throw OutOfDomain("c must be different from 0 and 1");
    MPoly f = from_univariate(p, 0) - c * from_univariate(p, 1);
    return make_curve(CurveKind::Fc, p, c, homogenize_xy(f, n).poly());
}

struct IdentityCheck {
    std::string name;
    bool ok = false;
};

struct IdentityReport {
    bool ok = true;
    std::vector<IdentityCheck> checks;
    void add(std::string name, bool v) {
        checks.push_back({std::move(name), v});
        ok = ok && v;
    }
};

// F(X, X, 1)
inline RationalPoly diagonal_restriction(const CurveData& cd) {
    RationalPoly r;
    for (auto& [e, c] : cd.F.poly().terms()) r += RationalPoly::monomial(c, e[0] + e[1]);
    return r;
}

inline IdentityReport verify_partial_identities(const CurveData& cd) {
    IdentityReport r;
    const MPoly& F = cd.F.poly();
    const MPoly X = MPoly::X(), Y = MPoly::Y(), Z = MPoly::Z();
    int n = cd.P.degree();
    int d = cd.degree();
    MPoly euler = X * cd.FX.poly() + Y * cd.FY.poly() + Z * cd.FZ.poly() - Rational(d) * F;
    r.add("euler", euler.is_zero());

    RationalPoly dp = derivative(cd.P);
    MPoly dPX = homogenize(dp, n - 1, 0).poly();
    MPoly dPY = homogenize(dp, n - 1, 1).poly();
    if (cd.kind == CurveKind::F) {
        r.add("F_X", ((X - Y) * cd.FX.poly() - (dPX - F)).is_zero());
        r.add("F_Y", ((X - Y) * cd.FY.poly() - (F - dPY)).is_zero());
    } else {
        r.add("F_X", (cd.FX.poly() - dPX).is_zero());
        r.add("F_Y", (cd.FY.poly() + *cd.c * dPY).is_zero());
    }

    // F_Z = (n - m) a_m Z^(n-m-1) (B(X, Y) + Z H), m = deg(P - a_n X^n)
    RationalPoly tail = cd.P - RationalPoly::monomial(cd.P.lead(), n);
    int m = std::max(tail.degree(), 0);
    Rational am = tail.coeff(m);
    MPoly zpow = mpow(Z, static_cast<unsigned>(n - m - 1));
    bool shape = false;
    if (cd.FZ.is_zero()) {
        shape = sgn(am) == 0 || (cd.kind == CurveKind::F && m == 0);
    } else if (mdivides(zpow, cd.FZ.poly())) {
        MPoly q = mexact_divide(cd.FZ.poly(), zpow).set_var(2, Rational(0));
        MPoly b;
        if (cd.kind == CurveKind::F) {
            for (int i = 0; i < m; ++i) b.add_term({m - 1 - i, i, 0}, Rational(1));
        } else {
            b.add_term({m, 0, 0}, Rational(1));
            b.add_term({0, m, 0}, Rational(-*cd.c));
        }
        shape = (q - Rational(am * (n - m)) * b).is_zero();
    }
    r.add("F_Z", shape);

    RationalPoly diag = diagonal_restriction(cd);
    if (cd.kind == CurveKind::F)
        r.add("diagonal", diag == dp && !diag.is_zero());
    else
        r.add("diagonal", diag == cd.P * Rational(1 - *cd.c));
    return r;
}

struct SingularPoint {
    std::string label;
    int multiplicity = 0;
    bool ordinary = true;
};

using Pairing = std::vector<std::optional<int>>;  // tau(i), zero-based

inline void validate_pairing(const Pairing& tau, int l) {
    if (static_cast<int>(tau.size()) != l) throw std::invalid_argument("pairing length differs from l");
    std::vector<bool> hit(static_cast<std::size_t>(l), false);
    for (int i = 0; i < l; ++i) {
        if (!tau[static_cast<std::size_t>(i)]) continue;
        int j = *tau[static_cast<std::size_t>(i)];
        if (j < 0 || j >= l) throw std::invalid_argument("pairing index out of range");
        if (j == i) throw std::invalid_argument("pairing has a fixed point");
        if (hit[static_cast<std::size_t>(j)]) throw std::invalid_argument("pairing is not injective");
        hit[static_cast<std::size_t>(j)] = true;
    }
}

// Multiple points of the projective curve, taken as known facts about
// separated polynomials: diagonal points (a_i, a_i) for kind F, paired
// points (a_i, a_tau(i)) for kind F_c.
inline std::vector<SingularPoint> singular_census(const std::vector<int>& m, bool separated, CurveKind kind,
                                                  const Pairing& tau = {}) {
    if (!separated) throw OutOfDomain("census needs a separated polynomial");
    std::vector<SingularPoint> out;
    int l = static_cast<int>(m.size());
    if (kind == CurveKind::F) {
        for (int i = 0; i < l; ++i)
            if (m[static_cast<std::size_t>(i)] >= 2)
                out.push_back({"diag(" + std::to_string(i + 1) + ")", m[static_cast<std::size_t>(i)], true});
        return out;
    }
    validate_pairing(tau, l);
    for (int i = 0; i < l; ++i) {
        if (!tau[static_cast<std::size_t>(i)]) continue;
        int j = *tau[static_cast<std::size_t>(i)];
        int mi = m[static_cast<std::size_t>(i)], mj = m[static_cast<std::size_t>(j)];
        out.push_back({"pair(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", std::min(mi, mj) + 1,
                       mi == mj});
    }
    return out;
}

inline long genus_ordinary(int d, const std::vector<SingularPoint>& census, bool irreducible) {
    if (!irreducible) throw OutOfDomain("genus formula needs an irreducible curve");
    long g = static_cast<long>(d - 1) * (d - 2) / 2;
    for (auto& s : census) {
        if (!s.ordinary) throw OutOfDomain("genus formula needs ordinary singularities");
        g -= static_cast<long>(s.multiplicity) * (s.multiplicity - 1) / 2;
    }
    if (g < 0) throw OutOfDomain("negative genus: census is inconsistent with irreducibility");
    return g;
}

enum class BezoutMode {
    Feasible,        // sum m^H m^G <= d_H d_G
    CompleteCensus,  // census lists every multiple point, all ordinary: equality
};

struct IrreducibilityCertificate {
    bool certified = false;
    std::string reason;
    std::vector<int> surviving_split;  // d_H, d_G of a split that could not be excluded
};

// Excludes every factorization H G of a degree-d curve with the given
// multiple points by intersection counting.
inline IrreducibilityCertificate bezout_irreducibility(int d, const std::vector<SingularPoint>& census,
                                                       bool no_linear_factors,
                                                       BezoutMode mode = BezoutMode::Feasible) {
    IrreducibilityCertificate cert;
    if (d <= 1) {
        cert.certified = d == 1;
        cert.reason = d == 1 ? "a line is irreducible" : "degree 0";
        return cert;
    }
    std::vector<int> mult;
    for (auto& s : census) mult.push_back(s.multiplicity);
    for (int dh = 1; dh <= d / 2; ++dh) {
        int dg = d - dh;
        if (no_linear_factors && dh == 1) continue;
        // components of degree e >= 2 have multiplicity <= e - 1 at any point
        int capH = no_linear_factors ? dh - 1 : dh;
        int capG = no_linear_factors ? dg - 1 : dg;
        long target = static_cast<long>(dh) * dg;
        bool found = false;
        // depth-first over points, accumulate sum m^H m^G
        auto dfs = [&](auto&& self, std::size_t k, long acc) -> void {
            if (found || acc > target) return;
            if (k == mult.size()) {
                found = mode == BezoutMode::Feasible ? acc <= target : acc == target;
                return;
            }
            for (int mh = 0; mh <= std::min(capH, mult[k]); ++mh) {
                int mg = mult[k] - mh;
                if (mg > capG || mg < 0) continue;
                self(self, k + 1, acc + static_cast<long>(mh) * mg);
            }
        };
        dfs(dfs, 0, 0);
        if (found) {
            cert.reason = "split " + std::to_string(dh) + "+" + std::to_string(dg) + " is not excluded";
            cert.surviving_split = {dh, dg};
            return cert;
        }
    }
    cert.certified = true;
    cert.reason = no_linear_factors ? "every split violates intersection counts or has a linear factor"
                                    : "every split violates intersection counts";
    return cert;
}

// ---- rational 2-forms (N / D) W(u, v) ----

enum class WPair { XY, YZ, ZX, XZ };

inline const char* wpair_name(WPair p) {
    switch (p) {
        case WPair::XY: return "W(X,Y)";
        case WPair::YZ: return "W(Y,Z)";
        case WPair::ZX: return "W(Z,X)";
        case WPair::XZ: return "W(X,Z)";
    }
    return "?";
}

struct FormRep {
    MPoly num;
    MPoly den;
    WPair pair = WPair::YZ;
};

// On the curve W(Y,Z) : W(Z,X) : W(X,Y) = F_X : F_Y : F_Z.
inline MPoly wronskian_partner(const CurveData& cd, WPair p, Rational& sign) {
    sign = 1;
    switch (p) {
        case WPair::YZ: return cd.FX.poly();
        case WPair::ZX: return cd.FY.poly();
        case WPair::XZ: sign = -1; return cd.FY.poly();
        case WPair::XY: return cd.FZ.poly();
    }
    return {};
}

// Do two representations define the same form on the curve?
inline bool agree_modulo_curve(const FormRep& a, const FormRep& b, const CurveData& cd) {
    Rational sa, sb;
    MPoly pa = wronskian_partner(cd, a.pair, sa);
    MPoly pb = wronskian_partner(cd, b.pair, sb);
    MPoly e = sa * a.num * b.den * pa - sb * b.num * a.den * pb;
    return mdivides(cd.F.poly(), e);
}

inline bool wronskian_degree_ok(int num_degree, int den_degree) { return den_degree == num_degree + 2; }

struct WronskianForm {
    FormRep rep;
    int num_degree = 0;
    int den_degree = 0;
};

inline WronskianForm make_wronskian_form(MPoly num, MPoly den, WPair pair) {
    int dn = num.homogeneous_degree(), dd = den.homogeneous_degree();
    if (num.is_zero() || den.is_zero()) throw std::invalid_argument("form with zero numerator or denominator");
    if (dn < 0 || dd < 0) throw std::invalid_argument("form numerator and denominator must be homogeneous");
    if (!wronskian_degree_ok(dn, dd))
        throw std::invalid_argument("deg denominator must equal deg numerator + 2, got " + std::to_string(dd) +
                                    " and " + std::to_string(dn));
    return WronskianForm{FormRep{std::move(num), std::move(den), pair}, dn, dd};
}

// Do the binary forms a(X,Y,0), b(X,Y,0) share a projective zero?
inline bool boundary_common_zero(const MPoly& a, const MPoly& b) {
    MPoly a0 = a.set_var(2, Rational(0)), b0 = b.set_var(2, Rational(0));
    if (a0.is_zero() || b0.is_zero()) return true;
    if (sgn(a0.evaluate(1, 0, 0)) == 0 && sgn(b0.evaluate(1, 0, 0)) == 0) return true;
    RationalPoly ua = to_univariate(a0.set_var(1, Rational(1)), 0);
    RationalPoly ub = to_univariate(b0.set_var(1, Rational(1)), 0);
    return gcd(ua, ub).degree() >= 1;
}

// The curve z0^n + z1^m z2^(n-m) + z2^n with the forms Q W(z2,z0) / (z1^(m-1) z2),
// Q a monomial of degree m - 2. Returns how many were certified.
struct TrinomialFormsResult {
    int count = 0;
    bool representations_agree = false;
    bool poles_off_curve = false;
};

inline TrinomialFormsResult trinomial_forms(int m, int n) {
    if (m < 2 || n - m < 2) throw OutOfDomain("family needs m >= 2 and n - m >= 2");
    const MPoly X = MPoly::X(), Y = MPoly::Y(), Z = MPoly::Z();
    MPoly f = mpow(X, static_cast<unsigned>(n)) + mpow(Y, static_cast<unsigned>(m)) * mpow(Z, static_cast<unsigned>(n - m)) +
              mpow(Z, static_cast<unsigned>(n));
    CurveData cd = make_curve(CurveKind::F, RationalPoly(), std::nullopt, f);
    TrinomialFormsResult r;
    MPoly den1 = mpow(Y, static_cast<unsigned>(m - 1)) * Z;
    MPoly den2 = Rational(n - m) * mpow(Y, static_cast<unsigned>(m)) + Rational(n) * mpow(Z, static_cast<unsigned>(m));
    FormRep a{MPoly(Rational(1)), den1, WPair::ZX};
    FormRep b{MPoly(Rational(m)), den2, WPair::XY};
    r.representations_agree = agree_modulo_curve(a, b, cd);
    // den1 = 0 forces Y = 0 or Z = 0; den2 then forces the other, leaving (1:0:0)
    bool y0 = den2.set_var(1, Rational(0)) == Rational(n) * mpow(Z, static_cast<unsigned>(m));
    bool z0 = den2.set_var(2, Rational(0)) == Rational(n - m) * mpow(Y, static_cast<unsigned>(m));
    r.poles_off_curve = y0 && z0 && sgn(f.evaluate(1, 0, 0)) != 0;
    if (!r.representations_agree || !r.poles_off_curve) return r;
    // monomials of degree m - 2; each Q eta is regular and they are independent
    // on the curve since deg Q < deg F
    for (int i = 0; i <= m - 2; ++i)
        for (int j = 0; i + j <= m - 2; ++j) {
            MPoly q = MPoly::term(Rational(1), i, j, m - 2 - i - j);
            make_wronskian_form(q, den1, WPair::ZX);
            ++r.count;
        }
    return r;
}

// Census of a concrete curve. For F_c the pairs (a_i, a_j) with
// P(a_i) = c P(a_j) are counted per multiplicity class without computing
// roots: class k has critical values the roots of Q_k = Res(S_k, T - P),
// and the pairs between classes k, k' are the common roots of Q_k(T) and
// Q_k'(T / c).
struct ConcreteCensus {
    bool available = false;
    std::string reason;
    std::vector<int> multiplicities;
    std::vector<SingularPoint> points;
};

inline RationalPoly class_values(const RationalPoly& p, const RationalPoly& s) {
    PolyQT S = CyclotomicField::lift(s);
    std::vector<RationalPoly> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(RationalPoly(Rational(-p.coeff(i))));
    c[0] += RationalPoly::x();
    return monic(resultant(S, PolyQT(std::move(c))));
}

inline ConcreteCensus concrete_census(const RationalPoly& P, std::optional<Rational> c) {
    ConcreteCensus out;
    auto cs = critical_structure(P);
    out.multiplicities = cs.multiplicities;
    if (!cs.separated) {
        out.reason = "critical values are not separated";
        return out;
    }
    out.available = true;
    if (!c) {
        out.points = singular_census(cs.multiplicities, true, CurveKind::F);
        return out;
    }
    std::vector<std::pair<int, RationalPoly>> classes;
    for (auto& f : cs.factors) classes.emplace_back(f.multiplicity, class_values(P, f.factor));
    Rational inv = 1 / *c;
    for (auto& [k, qk] : classes) {
        for (auto& [k2, qk2] : classes) {
            int count = gcd(qk, scale_arg(qk2, inv)).degree();
            std::string tag = "m=" + std::to_string(k) + ",m=" + std::to_string(k2);
            if (k == k2 && sgn(qk.coeff(0)) == 0) {
                // the critical point with value 0 meets itself on the diagonal
                --count;
                out.points.push_back({"fixed(m=" + std::to_string(k) + ")", k + 1, true});
            }
            for (int r = 1; r <= count; ++r)
                out.points.push_back({"pair(" + tag + ")#" + std::to_string(r), std::min(k, k2) + 1, k == k2});
        }
    }
    return out;
}

}  // namespace uniq
