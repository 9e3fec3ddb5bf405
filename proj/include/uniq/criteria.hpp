#pragma once

#include "cyclotomic.hpp"
#include "homog.hpp"
#include "poly.hpp"
#include "resultant.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace uniq {

struct OutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};

inline int gcd_of(const std::vector<int>& v) {
    int g = 0;
    for (int x : v) g = std::gcd(g, x);
    return g;
}

// Integers c_k with sum v_k c_k = gcd(v); empty when v is all zeros.
inline std::vector<long> bezout_coefficients(const std::vector<int>& v) {
    std::vector<long> c(v.size(), 0);
    long g = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        if (g == 0) {
            g = v[k];
            c[k] = 1;
            continue;
        }
        // extended Euclid on (g, v[k])
        long a = g, b = v[k], x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b != 0) {
            long q = a / b, t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
            t = y0 - q * y1;
            y0 = y1;
            y1 = t;
        }
        if (a < 0) {
            a = -a;
            x0 = -x0;
            y0 = -y0;
        }
        for (std::size_t j = 0; j < k; ++j) c[j] *= x0;
        c[k] = y0;
        g = a;
    }
    if (g == 0) return {};
    return c;
}

// Exponent data of P = a_n X^n + sum_{i<=m} a_i X^i.
//   I = support (n included), l_min = min I, J = {i - l_min}.
struct IndexData {
    int n = 0;
    int m = -1;  // -1 when P is a monomial
    std::vector<int> I;
    std::vector<int> J;
    int gcd_I = 0;
    int gcd_J = 0;  // 0 only for a monomial; 0 is divisible by everything
    int l_min = -1;
    std::vector<long> bezout_I;  // aligned with I, sum I_k b_k = gcd_I
    std::vector<long> bezout_J;
};

inline IndexData index_data(const RationalPoly& p) {
    if (p.degree() < 1) throw OutOfDomain("index data needs a nonconstant polynomial");
    IndexData d;
    d.n = p.degree();
    for (int i = 0; i <= d.n; ++i) {
        if (sgn(p.coeff(i)) == 0) continue;
        d.I.push_back(i);
        if (i < d.n) d.m = i;
    }
    d.l_min = d.I.front();
    for (int i : d.I) d.J.push_back(i - d.l_min);
    d.gcd_I = gcd_of(d.I);
    d.gcd_J = gcd_of(d.J);
    d.bezout_I = bezout_coefficients(d.I);
    d.bezout_J = bezout_coefficients(d.J);
    return d;
}

struct Normalized {
    RationalPoly p0;   // monic, X^(n-1) coefficient zero
    Rational shift;    // p0(X) = monic(P)(X + shift)
    bool condition_A = false;  // X^(n-2) coefficient of p0 vanishes
    bool condition_B = false;  // additionally X^(n-3)
};

inline Normalized normalize(const RationalPoly& p) {
    int n = p.degree();
    if (n < 3) throw OutOfDomain("normalization needs degree >= 3");
    RationalPoly q = monic(p);
    Rational a1 = q.coeff(n - 1), a2 = q.coeff(n - 2), a3 = q.coeff(n - 3);
    Normalized r;
    r.shift = -a1 / n;
    r.p0 = taylor_shift(q, r.shift);
    // closed forms in the original coefficients
    r.condition_A = (a2 == rat(n - 1, 2 * n) * a1 * a1);
    Rational kB = rat((n - 1) * (n - 2), 6 * n * n);
    r.condition_B = r.condition_A && (a3 == kB * a1 * a1 * a1);
    return r;
}

inline Rational centroid_shift(const RationalPoly& p) {
    int n = p.degree();
    return -p.coeff(n - 1) / (p.lead() * n);
}

// Critical points of P and their values.
struct CriticalStructure {
    std::vector<int> multiplicities;           // descending
    std::vector<SquarefreeFactor> factors;     // of P'
    RationalPoly critical_value_poly;          // monic Q(T), deg l
    bool separated = false;
    int l() const { return static_cast<int>(multiplicities.size()); }
    int m_min() const { return multiplicities.empty() ? 0 : multiplicities.back(); }
    int m_max() const { return multiplicities.empty() ? 0 : multiplicities.front(); }
};

// Q(T) = Res_X(rad P', T - P(X)): its roots are the critical values, once per
// distinct critical point. Separation is squarefreeness of Q.
inline RationalPoly critical_value_polynomial(const RationalPoly& p) {
    RationalPoly s = radical(derivative(p));
    PolyQT S = CyclotomicField::lift(s);
    std::vector<RationalPoly> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(RationalPoly(Rational(-p.coeff(i))));
    c[0] += RationalPoly::x();
    PolyQT TP(std::move(c));
    return monic(resultant(S, TP));
}

inline CriticalStructure critical_structure(const RationalPoly& p) {
    if (p.degree() < 2) throw OutOfDomain("critical structure needs degree >= 2");
    CriticalStructure cs;
    RationalPoly dp = derivative(p);
    cs.factors = squarefree_decomposition(dp);
    for (auto& f : cs.factors)
        for (int k = 0; k < f.factor.degree(); ++k) cs.multiplicities.push_back(f.multiplicity);
    std::sort(cs.multiplicities.rbegin(), cs.multiplicities.rend());
    cs.critical_value_poly = critical_value_polynomial(p);
    cs.separated = is_squarefree(cs.critical_value_poly);
    return cs;
}

struct AffineSymmetry {
    bool exists = false;
    bool degenerate = false;  // at most one zero: every scaling about it works
    int order = 0;            // largest r with zeta_r-rotation about the centroid
    Rational centroid;
};

// Nontrivial affine maps preserving the zero set of P are rotations about the
// centroid of the zeros; rad(P)(X + mu) must be a polynomial in X^r.
inline AffineSymmetry affine_symmetry(const RationalPoly& p) {
    if (p.degree() < 1) throw OutOfDomain("affine symmetry needs a nonconstant polynomial");
    RationalPoly r = radical(p);
    AffineSymmetry a;
    a.centroid = centroid_shift(r);
    if (r.degree() <= 1) {
        a.exists = true;
        a.degenerate = true;
        return a;
    }
    RationalPoly s = taylor_shift(r, a.centroid);
    int k = s.degree();
    std::vector<int> gaps;
    for (int i = 0; i < k; ++i)
        if (sgn(s.coeff(i)) != 0) gaps.push_back(k - i);
    a.order = gcd_of(gaps);
    a.exists = a.order >= 2;
    return a;
}

enum class CurveKind { F, Fc };

inline const char* kind_name(CurveKind k) { return k == CurveKind::F ? "F" : "F_c"; }

// X - b Y - (1-b) mu Z divides F (or F_c with c = b^c_exponent),
// b a primitive r-th root of unity.
struct LinearFactor {
    int order = 0;
    int c_exponent = 0;
    Rational center;
    bool verified = false;
};

struct LinearFactorScan {
    bool applicable = false;
    std::string reason;
    int gap = 0;  // n - m of the normalized polynomial
    IndexData data;
    std::optional<LinearFactor> factor;
};

// Substitutes X = zeta Y + (1 - zeta) mu into P(X) - zeta^e P(Y); for the
// kind-F curve the difference quotient vanishes with the difference.
inline bool verify_rotation_identity(const RationalPoly& p, int r, int c_exponent, const Rational& center) {
    CyclotomicField k(r);
    RationalPoly beta = k.zeta_pow(1);
    RationalPoly gamma = k.reduce(RationalPoly(center) - RationalPoly(center) * beta);
    PolyQT lhs = k.substitute_affine(p, beta, gamma);
    PolyQT rhs = k.reduce(CyclotomicField::lift(p) * k.zeta_pow(c_exponent));
    return (lhs - rhs).is_zero() && !(beta - RationalPoly(Rational(1))).is_zero();
}

inline LinearFactorScan linear_factor_scan(const RationalPoly& p, CurveKind kind) {
    LinearFactorScan s;
    if (p.degree() < 3) {
        s.reason = "degree below 3";
        return s;
    }
    Normalized nz = normalize(p);
    s.data = index_data(nz.p0);
    s.gap = s.data.n - std::max(s.data.m, 0);
    if (s.gap < 3) {
        s.reason = "normalized polynomial has gap n - m < 3";
        return s;
    }
    s.applicable = true;
    int g = kind == CurveKind::F ? s.data.gcd_I : s.data.gcd_J;
    if (g == 0) g = s.data.n;  // monomial
    if (g > 1) {
        LinearFactor f;
        f.order = g;
        f.c_exponent = kind == CurveKind::F ? 0 : std::max(s.data.l_min, 0);
        f.center = nz.shift;
        f.verified = verify_rotation_identity(monic(p), f.order, f.c_exponent, f.center);
        s.factor = f;
    }
    return s;
}

struct ExceptionalFlags {
    bool quartic_structural = false;  // n = 4, three simple critical points
    bool quartic_w_case = false;      // ... and Q(T) = T^3 - d
    bool quintic_case = false;        // n = 5, two double critical points
    bool degree_two_case = false;     // l = 2 and a simple critical point
};

inline ExceptionalFlags exceptional_flags(const CriticalStructure& cs, int n) {
    ExceptionalFlags f;
    const auto& m = cs.multiplicities;
    f.quartic_structural = (n == 4 && m == std::vector<int>{1, 1, 1});
    if (f.quartic_structural) {
        const RationalPoly& q = cs.critical_value_poly;
        f.quartic_w_case = q.degree() == 3 && sgn(q.coeff(2)) == 0 && sgn(q.coeff(1)) == 0 && sgn(q.coeff(0)) != 0;
    }
    f.quintic_case = (n == 5 && m == std::vector<int>{2, 2});
    f.degree_two_case = (cs.l() == 2 && cs.m_min() == 1);
    return f;
}

}  // namespace uniq
