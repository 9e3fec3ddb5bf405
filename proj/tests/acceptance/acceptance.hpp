#pragma once

// Acceptance criteria, shared by the ctest binary and `uniqpoly selftest`.

#include <uniq/classifier.hpp>
#include <uniq/curve.hpp>
#include <uniq/order_calculus.hpp>
#include <uniq/parser.hpp>

#include "../hand_table.hpp"

#include <chrono>
#include <complex>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace acceptance {

using namespace uniq;

struct Line {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct Tally {
    long checked = 0;
    long failed = 0;
    std::string first;
    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) first = what;
    }
    bool ok() const { return failed == 0 && checked > 0; }
    std::string detail() const {
        std::string s = std::to_string(checked) + " checks, " + std::to_string(failed) + " failed";
        if (failed) s += "; first: " + first;
        return s;
    }
};

inline RationalPoly two_term(int n, int m, long a, long b) {
    RationalPoly p = RationalPoly::monomial(Rational(1), n) + RationalPoly::monomial(Rational(a), m);
    return p + RationalPoly(Rational(b));
}

inline std::string row_text(int n, int m, long a, long b) {
    return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

inline double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline RationalPoly random_poly(std::mt19937_64& g, int dmin, int dmax, int cmax, bool monic = false) {
    std::uniform_int_distribution<int> deg(dmin, dmax), c(-cmax, cmax);
    int n = deg(g);
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (auto& x : v) x = c(g);
    while (sgn(v.back()) == 0) v.back() = c(g);
    if (monic) v.back() = 1;
    return RationalPoly(v);
}

// ---- 1, 2: two-term grid ----

struct GridRow {
    int n, m;
    long a, b;
    RationalPoly p;
    Verdict v;
};

inline const std::vector<GridRow>& grid() {
    static const std::vector<GridRow> rows = [] {
        std::vector<GridRow> out;
        for (int n = 2; n <= 10; ++n)
            for (int m = 1; m <= n - 1; ++m)
                for (long a = -2; a <= 2; ++a)
                    for (long b = -2; b <= 2; ++b) {
                        auto p = two_term(n, m, a, b);
                        out.push_back({n, m, a, b, p, classify(p)});
                    }
        return out;
    }();
    return rows;
}

inline Line corollary_grid() {
    Line L{1, "corollary grid", false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (auto& r : grid()) {
        auto row = corollary_classify(Rational(0), r.n, r.m, Rational(r.a), Rational(r.b));
        for (auto p : kProperties)
            t.check(r.v[p] == (row[p] ? Answer::Yes : Answer::No),
                    row_text(r.n, r.m, r.a, r.b) + " " + property_name(p));
        if (r.b == 0 && r.n - r.m >= 2) {
            // P(xi X) = xi^m P(X), xi of order n - m
            bool scaled = false;
            for (auto& w : r.v.witnesses)
                scaled = scaled || (w.verified && sgn(w.center) == 0 && replay_witness(r.p, w));
            bool quoted = verify_rotation_identity(r.p, r.n - r.m, r.m % (r.n - r.m), Rational(0));
            t.check(r.v[SupRational] == Answer::No && r.v[SupMeromorphic] == Answer::No && scaled && quoted,
                    row_text(r.n, r.m, r.a, r.b) + " b=0 scaling witness");
        }
    }
    auto spot = [&](int n, int m, long a, long b, std::array<Answer, 4> want) {
        Verdict v = classify(two_term(n, m, a, b));
        for (auto p : kProperties) t.check(v[p] == want[p], "spot " + row_text(n, m, a, b) + " " + property_name(p));
    };
    // order: up-rational, sup-rational, up-meromorphic, sup-meromorphic
    spot(4, 1, 1, 1, {Answer::Yes, Answer::Yes, Answer::No, Answer::No});
    spot(5, 2, 1, 1, {Answer::Yes, Answer::Yes, Answer::Yes, Answer::Yes});
    L.seconds = since(t0);
    L.pass = t.ok() && L.seconds < 30;
    L.detail = std::to_string(grid().size()) + " rows, " + t.detail();
    return L;
}

inline Line oracle_agreement() {
    Line L{2, "oracle agreement", false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    long found = 0;
    for (auto& r : grid()) {
        for (auto p : kProperties) {
            SearchMode mode = is_strong(p) ? SearchMode::AnyC : SearchMode::CEquals1;
            auto what = row_text(r.n, r.m, r.a, r.b) + " " + property_name(p);
            auto d = r.v.decisions[p];
            if (d.answer == Answer::Yes) {
                t.check(!witness_search(r.p, mode), what + " yes but a witness exists");
            } else if (d.answer == Answer::No && d.basis.rfind("exception:", 0) != 0) {
                auto w = witness_search(r.p, mode);
                t.check(w && replay_witness(r.p, *w), what + " no without a witness");
                found += w.has_value();
            }
        }
    }
    L.seconds = since(t0);
    L.pass = t.ok();
    L.detail = t.detail() + ", " + std::to_string(found) + " witnesses replayed";
    return L;
}

// ---- 3: pinned linear factors ----

inline Line pinned_factors() {
    Line L{3, "linear factors for rotation supports", false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto P = [](std::initializer_list<std::pair<int, long>> terms) {
        RationalPoly p;
        for (auto [e, c] : terms) p += RationalPoly::monomial(Rational(c), e);
        return p;
    };
    struct Pin {
        const char* text;
        RationalPoly p;
        CurveKind kind;
        int r;
    };
    std::vector<Pin> pins = {
        {"X^7+X^3+X", P({{7, 1}, {3, 1}, {1, 1}}), CurveKind::Fc, 2},
        {"X^6+X^3", P({{6, 1}, {3, 1}}), CurveKind::F, 3},
        {"X^6+X^3", P({{6, 1}, {3, 1}}), CurveKind::Fc, 3},
        {"X^8+X^4+X^2", P({{8, 1}, {4, 1}, {2, 1}}), CurveKind::F, 2},
        {"X^8+X^4+X^2", P({{8, 1}, {4, 1}, {2, 1}}), CurveKind::Fc, 2},
        {"X^6+X^3+1", P({{6, 1}, {3, 1}, {0, 1}}), CurveKind::F, 3},
        {"X^9+2X^5+X", P({{9, 1}, {5, 2}, {1, 1}}), CurveKind::Fc, 4},
        {"X^10+X^5+3", P({{10, 1}, {5, 1}, {0, 3}}), CurveKind::F, 5},
        {"(X-1)^6+(X-1)^3", taylor_shift(P({{6, 1}, {3, 1}}), Rational(-1)), CurveKind::F, 3},
    };
    for (auto& pin : pins) {
        auto s = linear_factor_scan(pin.p, pin.kind);
        int g = pin.kind == CurveKind::F ? s.data.gcd_I : s.data.gcd_J;
        std::string what = std::string(pin.text) + " " + kind_name(pin.kind);
        t.check(g == pin.r, what + " gcd " + std::to_string(g));
        t.check(s.factor && s.factor->order == pin.r && s.factor->verified, what + " factor");
        // independent replay through the cyclotomic identity
        if (s.factor)
            t.check(verify_rotation_identity(pin.p, s.factor->order, s.factor->c_exponent, s.factor->center),
                    what + " replay");
    }
    L.seconds = since(t0);
    L.pass = t.ok();
    L.detail = std::to_string(pins.size()) + " pins, " + t.detail();
    return L;
}

// ---- 4: identity suite ----

inline Line identity_suite(std::uint64_t seed) {
    Line L{4, "curve identities", false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    std::mt19937_64 g(seed ^ 0x4a);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    auto rnd = [&] { return rat(num(g), den(g)); };
    for (int it = 0; it < 100; ++it) {
        RationalPoly p = random_poly(g, 2, 10, 6);
        Rational c;
        do c = rnd();
        while (sgn(c) == 0 || c == 1);
        RationalPoly dp = derivative(p);
        for (bool fc : {false, true}) {
            CurveData cd = fc ? build_Fc(p, c) : build_F(p);
            auto ids = verify_partial_identities(cd);
            std::string what = to_string(p) + (fc ? " F_c c=" + to_pq(c) : " F");
            for (auto& ch : ids.checks) t.check(ch.ok, what + " " + ch.name);
            // pointwise, from the definitions
            for (int k = 0; k < 3; ++k) {
                Rational x = rnd(), y = rnd(), z = rnd();
                if (x == y) y += 1;
                const MPoly& F = cd.F.poly();
                Rational euler = x * cd.FX.poly().evaluate(x, y, z) + y * cd.FY.poly().evaluate(x, y, z) +
                                 z * cd.FZ.poly().evaluate(x, y, z) - Rational(cd.degree()) * F.evaluate(x, y, z);
                t.check(sgn(euler) == 0, what + " euler at a point");
                Rational f1 = F.evaluate(x, y, 1);
                if (fc) {
                    t.check(f1 == p.evaluate(x) - c * p.evaluate(y), what + " F_c(x,y,1)");
                    t.check(F.evaluate(x, x, 1) == (1 - c) * p.evaluate(x), what + " F_c(x,x,1)");
                    t.check(cd.FX.poly().evaluate(x, y, 1) == dp.evaluate(x), what + " F_X(x,y,1)");
                } else {
                    t.check((x - y) * f1 == p.evaluate(x) - p.evaluate(y), what + " F(x,y,1)");
                    t.check(F.evaluate(x, x, 1) == dp.evaluate(x), what + " F(x,x,1)");
                    t.check((x - y) * cd.FX.poly().evaluate(x, y, 1) == dp.evaluate(x) - f1, what + " F_X(x,y,1)");
                }
            }
        }
    }
    L.seconds = since(t0);
    L.pass = t.ok();
    L.detail = "100 polynomials, " + t.detail();
    return L;
}

// ---- 5: separation against floating point ----

using cld = std::complex<long double>;

inline std::vector<cld> numeric_roots(const std::vector<long double>& a) {
    // Durand-Kerner on the monic normalization
    int n = static_cast<int>(a.size()) - 1;
    std::vector<cld> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] / a.back();
    auto f = [&](cld z) {
        cld v = 0;
        for (int i = n; i >= 0; --i) v = v * z + c[static_cast<std::size_t>(i)];
        return v;
    };
    long double R = 1;
    for (int i = 0; i < n; ++i) R = std::max(R, 1 + std::abs(c[static_cast<std::size_t>(i)]));
    std::vector<cld> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(R * 0.9L, 0.4L + 2 * 3.14159265358979L * k / n);
    for (int it = 0; it < 3000; ++it) {
        long double move = 0;
        for (int k = 0; k < n; ++k) {
            cld den = 1;
            for (int j = 0; j < n; ++j)
                if (j != k) den *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
            if (std::abs(den) == 0) den = 1e-30L;
            cld d = f(z[static_cast<std::size_t>(k)]) / den;
            z[static_cast<std::size_t>(k)] -= d;
            move = std::max(move, std::abs(d));
        }
        if (move < 1e-30L) break;
    }
    return z;
}

struct FloatCritical {
    std::vector<int> multiplicities;  // descending
    bool separated = true;
};

inline FloatCritical float_oracle(const RationalPoly& p) {
    RationalPoly dp = derivative(p);
    std::vector<long double> a;
    for (int i = 0; i <= dp.degree(); ++i) a.push_back(static_cast<long double>(dp.coeff(i).get_d()));
    auto roots = numeric_roots(a);
    // cluster roots that belong to one multiple critical point
    std::vector<std::pair<cld, int>> pts;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        cld sum = roots[i];
        int k = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (!used[j] && std::abs(roots[j] - roots[i]) < 1e-3L) {
                used[j] = true;
                sum += roots[j];
                ++k;
            }
        pts.push_back({sum / static_cast<long double>(k), k});
    }
    auto P = [&](cld z) {
        cld v = 0;
        for (int i = p.degree(); i >= 0; --i) v = v * z + static_cast<long double>(p.coeff(i).get_d());
        return v;
    };
    FloatCritical out;
    std::vector<cld> vals;
    for (auto& [z, k] : pts) {
        out.multiplicities.push_back(k);
        vals.push_back(P(z));
    }
    std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            long double scale = std::max<long double>(1, std::max(std::abs(vals[i]), std::abs(vals[j])));
            if (std::abs(vals[i] - vals[j]) <= 1e-9L * scale) out.separated = false;
        }
    return out;
}

// Integer-coefficient P with P' = k * prod (X - r_i)^{e_i}, small integer r_i, e_i <= 3;
// with `even` the critical points come in +-r pairs around 0 so values collide.
inline RationalPoly constructed_poly(std::mt19937_64& g, bool even) {
    std::uniform_int_distribution<int> cnt(1, 4), root(-4, 4), ex(1, 3), pos(1, 4);
    RationalPoly dp(Rational(1));
    int deg = 0;
    std::vector<int> seen;
    int k = cnt(g);
    for (int i = 0; i < k && deg < 8; ++i) {
        int e = std::min(ex(g), 9 - deg - (even ? deg + 2 > 9 : 0));
        if (e < 1) break;
        if (even) {
            int r = pos(g);
            if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
            if (deg + 2 * e > 8) break;
            seen.push_back(r);
            dp = dp * pow(RationalPoly({Rational(-r * r), Rational(0), Rational(1)}), static_cast<unsigned>(e));
            deg += 2 * e;
        } else {
            int r = root(g);
            if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
            if (deg + e > 9) break;
            seen.push_back(r);
            dp = dp * pow(RationalPoly({Rational(-r), Rational(1)}), static_cast<unsigned>(e));
            deg += e;
        }
    }
    if (even) dp = dp * RationalPoly::x();
    // integrate, then clear denominators
    std::vector<Rational> v(static_cast<std::size_t>(dp.degree()) + 2);
    for (int i = 0; i <= dp.degree(); ++i) v[static_cast<std::size_t>(i) + 1] = dp.coeff(i) / (i + 1);
    v[0] = root(g);
    mpz_class l = 1;
    for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) x *= l;
    return RationalPoly(v);
}

inline Line separation_oracle(std::uint64_t seed) {
    Line L{5, "separation vs floating point", false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    std::mt19937_64 g(seed ^ 0x5e);
    int not_separated = 0;
    for (int it = 0; it < 200; ++it) {
        RationalPoly p;
        switch (it % 4) {
            case 0: p = random_poly(g, 2, 10, 5); break;
            case 1: p = constructed_poly(g, false); break;
            case 2: p = constructed_poly(g, true); break;
            default: p = random_poly(g, 2, 6, 2); break;
        }
        if (p.degree() < 2) p = p + RationalPoly::monomial(Rational(1), 3);
        auto cs = critical_structure(p);
        auto fo = float_oracle(p);
        not_separated += !cs.separated;
        t.check(cs.separated == fo.separated && cs.multiplicities == fo.multiplicities, to_string(p));
    }
    L.seconds = since(t0);
    L.pass = t.ok();
    L.detail = "200 polynomials (" + std::to_string(not_separated) + " not separated), " + t.detail();
    return L;
}

// ---- 6: genus pins ----

inline long plain_genus(int d, const std::vector<int>& mult) {
    long g = static_cast<long>(d - 1) * (d - 2) / 2;
    for (int r : mult) g -= static_cast<long>(r) * (r - 1) / 2;
    return g;
}

inline Line genus_pins() {
    Line L{6, "genus pins", false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto pin = [&](const std::string& what, int d, const std::vector<SingularPoint>& cen, long want) {
        std::vector<int> mult;
        for (auto& s : cen) mult.push_back(s.multiplicity);
        auto irr = bezout_irreducibility(d, cen, true,
                                         cen.size() >= 2 ? BezoutMode::CompleteCensus : BezoutMode::Feasible);
        t.check(irr.certified, what + " irreducible");
        long got = genus_ordinary(d, cen, irr.certified);
        t.check(got == want && plain_genus(d, mult) == want, what + " genus " + std::to_string(got));
    };
    pin("smooth cubic", 3, singular_census({1, 1, 1}, true, CurveKind::F), 1);
    for (int m1 = 1; m1 <= 7; ++m1)
        pin("l=2 m=(" + std::to_string(m1) + ",1)", m1 + 1, singular_census({m1, 1}, true, CurveKind::F), 0);
    pin("n=5 m=(2,2)", 4, singular_census({2, 2}, true, CurveKind::F), 1);
    pin("cyclic quartic", 4, singular_census({1, 1, 1}, true, CurveKind::Fc, Pairing{1, 2, 0}), 0);

    auto c35 = trinomial_forms(3, 5);
    t.check(c35.count >= 3 && c35.representations_agree && c35.poles_off_curve, "C_{3,5} bound 3");
    for (int m = 2; m <= 5; ++m)
        for (int k = 2; k <= 4; ++k) {
            auto r = trinomial_forms(m, m + k);
            t.check(r.count == m * (m - 1) / 2 && r.representations_agree && r.poles_off_curve,
                    "C_{" + std::to_string(m) + "," + std::to_string(m + k) + "} count " + std::to_string(r.count));
        }
    L.seconds = since(t0);
    L.pass = t.ok();
    L.detail = t.detail();
    return L;
}

// ---- 7: order-calculus table ----

inline Line order_table() {
    Line L{7, "order-calculus table n <= 12", false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (auto kind : {CurveKind::F, CurveKind::Fc})
        for (auto& c : oc::enumerate_configurations(kind, 12)) {
            auto v = oc::hyperbolicity_verdict(c);
            auto want = hand_table::expected(c);
            t.check(v.level == want, c.text() + " got " + oc::hyperbolicity_name(v.level) + ", table says " +
                                         oc::hyperbolicity_name(want));
        }
    L.seconds = since(t0);
    L.pass = t.ok() && L.seconds < 60;
    L.detail = std::to_string(t.checked) + " configurations, " + std::to_string(t.failed) + " mismatches" +
               (t.failed ? "; first: " + t.first : "");
    return L;
}

// ---- 8: exceptional quartic ----

inline Line quartic_flags() {
    Line L{8, "exceptional quartic", false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    RationalPoly w = two_term(4, 1, -4, 0);
    auto cs = critical_structure(w);
    const auto& q = cs.critical_value_poly;
    t.check(q.degree() == 3 && q.coeff(3) == 1 && sgn(q.coeff(2)) == 0 && sgn(q.coeff(1)) == 0 && q.coeff(0) == 27,
            "Q(T) for X^4-4X is " + to_string(q, "T"));
    t.check(exceptional_flags(cs, 4).quartic_w_case, "X^4-4X w-case");
    for (long a : {-3, -2, -1, 1, 2, 3})
        for (long b : {-3, -2, -1, 1, 2, 3}) {
            auto p = two_term(4, 1, a, b);
            t.check(!exceptional_flags(critical_structure(p), 4).quartic_w_case, to_string(p) + " flagged");
        }
    L.seconds = since(t0);
    L.pass = t.ok();
    L.detail = t.detail();
    return L;
}

// ---- 9: property suites ----

inline void poly_suite(std::mt19937_64& g, Tally& t, int cases) {
    std::uniform_int_distribution<int> s(-5, 5), d(1, 4);
    for (int i = 0; i < cases; ++i) {
        RationalPoly a = random_poly(g, 0, 6, 6), b = random_poly(g, 1, 4, 6), c = random_poly(g, 0, 3, 4);
        std::string what = to_string(a) + " | " + to_string(b);
        t.check(a * b == b * a && (a + b) - b == a, what + " ring");
        t.check(a * (b + c) == a * b + a * c, what + " distributive");
        auto [qq, r] = divrem(a, b);
        t.check(qq * b + r == a && r.degree() < b.degree(), what + " divrem");
        auto gg = gcd(a, b);
        t.check(divides(gg, a) && divides(gg, b), what + " gcd");
        Rational sh = rat(s(g), d(g));
        t.check(taylor_shift(taylor_shift(a, sh), -sh) == a, what + " shift");
        if (a.degree() >= 1) {
            RationalPoly prod(a.lead());
            for (auto& f : squarefree_decomposition(a)) prod = prod * pow(f.factor, static_cast<unsigned>(f.multiplicity));
            t.check(prod == a, what + " squarefree product");
        }
    }
}

inline void lattice_suite(std::mt19937_64& g, Tally& t, int cases) {
    for (int i = 0; i < cases; ++i) {
        RationalPoly p = random_poly(g, 2, 7, 3);
        Verdict v = classify(p);
        std::string what = to_string(p);
        auto yes = [&](Property q) { return v[q] == Answer::Yes; };
        auto no = [&](Property q) { return v[q] == Answer::No; };
        t.check(v.conflicts.empty(), what + " conflicts");
        t.check((!yes(SupRational) || yes(UpRational)) && (!yes(SupMeromorphic) || yes(UpMeromorphic)) &&
                    (!yes(UpMeromorphic) || yes(UpRational)) && (!yes(SupMeromorphic) || yes(SupRational)),
                what + " lattice");
        t.check((!no(UpRational) || no(SupRational)) && (!no(UpRational) || no(UpMeromorphic)), what + " lattice no");
    }
}

inline void invariance_suite(std::mt19937_64& g, Tally& t, int cases) {
    std::uniform_int_distribution<int> s(-4, 4), d(1, 3);
    for (int i = 0; i < cases; ++i) {
        RationalPoly p = random_poly(g, 2, 6, 3);
        Rational lam = rat(s(g), d(g)), mu = rat(s(g), d(g)), nu = rat(s(g), d(g));
        if (sgn(lam) == 0) lam = 1;
        if (sgn(mu) == 0) mu = -1;
        RationalPoly q = taylor_shift(scale_arg(p, mu), nu / mu) * lam;  // lam * P(mu X + nu)
        Verdict a = classify(p), b = classify(q);
        for (auto pr : kProperties)
            t.check(a[pr] == b[pr], to_string(p) + " vs " + to_string(q) + " " + property_name(pr));
    }
}

inline void parser_suite(std::mt19937_64& g, Tally& t, int cases) {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 9), deg(0, 12), sp(0, 3);
    for (int i = 0; i < cases; ++i) {
        int n = deg(g);
        std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
        for (auto& x : v) x = rat(num(g), den(g));
        RationalPoly p(v);
        std::string s = to_string(p);
        t.check(parse_poly(s) == p, s);
        std::string spaced;
        for (char ch : s) spaced += ch == ' ' ? std::string(static_cast<std::size_t>(sp(g)), ' ') : std::string(1, ch);
        t.check(parse_poly(spaced) == p, spaced);
    }
}

inline Line property_suites(std::uint64_t seed, int cases = 10000) {
    Line L{9, "property suites", false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream os;
    bool all = true;
    auto run = [&](const char* name, void (*suite)(std::mt19937_64&, Tally&, int), std::uint64_t salt) {
        std::mt19937_64 g(seed ^ salt);
        Tally t;
        suite(g, t, cases);
        all = all && t.ok();
        os << (os.tellp() > 0 ? "; " : "") << name << ": " << t.detail();
    };
    run("poly", poly_suite, 0x91);
    run("lattice", lattice_suite, 0x92);
    run("invariance", invariance_suite, 0x93);
    run("parser", parser_suite, 0x94);
    L.seconds = since(t0);
    L.pass = all && L.seconds < 120;
    L.detail = std::to_string(cases) + " cases per suite; " + os.str();
    return L;
}

inline std::vector<Line> run_all(std::uint64_t seed, const std::function<void(const Line&)>& each = {}) {
    std::vector<Line> out;
    auto add = [&](Line l) {
        if (each) each(l);
        out.push_back(std::move(l));
    };
    add(corollary_grid());
    add(oracle_agreement());
    add(pinned_factors());
    add(identity_suite(seed));
    add(separation_oracle(seed));
    add(genus_pins());
    add(order_table());
    add(quartic_flags());
    add(property_suites(seed));
    return out;
}

}  // namespace acceptance
