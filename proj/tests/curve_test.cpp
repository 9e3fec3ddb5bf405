#include <uniq/curve.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace uniq;

namespace {

RationalPoly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.push_back(Rational(x));
    return RationalPoly(v);
}

// sum_k a_k sum_{j<k} X^(k-1-j) Y^j Z^(n-k), written out directly
MPoly difference_quotient_oracle(const RationalPoly& p) {
    int n = p.degree();
    MPoly r;
    for (int k = 1; k <= n; ++k)
        for (int j = 0; j < k; ++j) r.add_term({k - 1 - j, j, n - k}, p.coeff(k));
    return r;
}

}  // namespace

TEST(Curve, BuildFMatchesClosedForm) {
    std::mt19937_64 g(3);
    std::uniform_int_distribution<int> c(-5, 5), deg(2, 9);
    for (int it = 0; it < 200; ++it) {
        int n = deg(g);
        std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
        for (auto& x : v) x = c(g);
        v.back() = c(g) == 0 ? 1 : 2;
        auto p = RationalPoly(v);
        auto cd = build_F(p);
        ASSERT_EQ(cd.F.poly(), difference_quotient_oracle(p));
        auto rep = verify_partial_identities(cd);
        for (auto& ch : rep.checks) EXPECT_TRUE(ch.ok) << ch.name << " " << to_string(p);
        auto cc = build_Fc(p, rat(-2, 3));
        auto rc = verify_partial_identities(cc);
        for (auto& ch : rc.checks) EXPECT_TRUE(ch.ok) << ch.name << " " << to_string(p);
    }
}

TEST(Curve, IdentityCheckCatchesCorruption) {
    auto cd = build_F(P({0, -3, 0, 1}));
    cd.FX = HomogPoly(cd.FX.poly() + MPoly::term(Rational(1), 0, 0, 1), 1);
    EXPECT_FALSE(verify_partial_identities(cd).ok);
}

TEST(Curve, BuildFcRejectsTrivialC) {
    EXPECT_THROW(build_Fc(P({0, 0, 1, 1}), Rational(1)), OutOfDomain);
    EXPECT_THROW(build_Fc(P({0, 0, 1, 1}), Rational(0)), OutOfDomain);
}

TEST(Census, KindsAndPairings) {
    auto a = singular_census({3, 1}, true, CurveKind::F);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].multiplicity, 3);
    auto b = singular_census({1, 1, 1}, true, CurveKind::Fc, Pairing{1, 2, 0});
    ASSERT_EQ(b.size(), 3u);
    for (auto& s : b) {
        EXPECT_EQ(s.multiplicity, 2);
        EXPECT_TRUE(s.ordinary);
    }
    auto c = singular_census({3, 1}, true, CurveKind::Fc, Pairing{1, std::nullopt});
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].multiplicity, 2);
    EXPECT_FALSE(c[0].ordinary);
    EXPECT_THROW(singular_census({1, 1}, false, CurveKind::F), OutOfDomain);
    EXPECT_THROW(singular_census({1, 1}, true, CurveKind::Fc, Pairing{0, std::nullopt}), std::invalid_argument);
}

TEST(Genus, KnownCurves) {
    // l = 2, m = (m1, 1): degree m1 + 1 with one point of multiplicity m1
    for (int m1 = 1; m1 <= 6; ++m1) {
        auto cen = singular_census({m1, 1}, true, CurveKind::F);
        auto cert = bezout_irreducibility(m1 + 1, cen, true);
        EXPECT_TRUE(cert.certified) << m1;
        EXPECT_EQ(genus_ordinary(m1 + 1, cen, cert.certified), 0);
    }
    auto q = singular_census({2, 2}, true, CurveKind::F);
    EXPECT_TRUE(bezout_irreducibility(4, q, true, BezoutMode::CompleteCensus).certified);
    EXPECT_FALSE(bezout_irreducibility(4, q, true, BezoutMode::Feasible).certified);
    EXPECT_EQ(genus_ordinary(4, q, true), 1);
    auto cubic = singular_census({1, 1, 1}, true, CurveKind::F);
    EXPECT_TRUE(bezout_irreducibility(3, cubic, true).certified);
    EXPECT_EQ(genus_ordinary(3, cubic, true), 1);
    auto w = singular_census({1, 1, 1}, true, CurveKind::Fc, Pairing{1, 2, 0});
    EXPECT_TRUE(bezout_irreducibility(4, w, true, BezoutMode::CompleteCensus).certified);
    EXPECT_EQ(genus_ordinary(4, w, true), 0);
}

TEST(Bezout, UnknownWhenConicsPossible) {
    EXPECT_FALSE(bezout_irreducibility(4, {}, false).certified);
    EXPECT_TRUE(bezout_irreducibility(3, {}, true).certified);
    EXPECT_THROW(genus_ordinary(4, {{"p", 2, false}}, true), OutOfDomain);
    EXPECT_THROW(genus_ordinary(4, {}, false), OutOfDomain);
}

TEST(Forms, RepresentationsAgreeOnCurve) {
    // P = X^3 - 3X, P' = 3(X - 1)(X + 1)
    auto cd = build_F(P({0, -3, 0, 1}));
    MPoly X = MPoly::X(), Y = MPoly::Y(), Z = MPoly::Z();
    MPoly dx = (X - Z) * (X + Z), dy = (Y - Z) * (Y + Z);
    // W(Y,Z)/prod(X - a_i Z) = W(X,Z)/prod(Y - a_i Z)
    FormRep a{MPoly(Rational(1)), dx, WPair::YZ};
    FormRep b{MPoly(Rational(1)), dy, WPair::XZ};
    EXPECT_TRUE(agree_modulo_curve(a, b, cd));
    FormRep wrong{MPoly(Rational(1)), dy, WPair::ZX};
    EXPECT_FALSE(agree_modulo_curve(a, wrong, cd));
    // (X - Y) W(Y,Z) / P'(X,Z) = W(X,Y) / F_Z
    FormRep g1{X - Y, Rational(3) * dx, WPair::YZ};
    FormRep g2{MPoly(Rational(1)), cd.FZ.poly(), WPair::XY};
    EXPECT_TRUE(agree_modulo_curve(g1, g2, cd));
    EXPECT_FALSE(boundary_common_zero(dx, dy));
    EXPECT_TRUE(boundary_common_zero(dx, X * Y));
}

TEST(Forms, DegreeBookkeeping) {
    MPoly X = MPoly::X(), Y = MPoly::Y(), Z = MPoly::Z();
    EXPECT_NO_THROW(make_wronskian_form(MPoly(Rational(1)), Z * Z, WPair::XY));
    EXPECT_NO_THROW(make_wronskian_form(X - Y, mpow(X - Z, 2) * (X + Z), WPair::YZ));
    EXPECT_THROW(make_wronskian_form(X, Z * Z, WPair::XY), std::invalid_argument);
}

TEST(TrinomialForms, FamilyDimensions) {
    auto a = trinomial_forms(2, 4);
    EXPECT_TRUE(a.representations_agree);
    EXPECT_TRUE(a.poles_off_curve);
    EXPECT_EQ(a.count, 1);
    EXPECT_EQ(trinomial_forms(3, 5).count, 3);
    EXPECT_EQ(trinomial_forms(5, 9).count, 10);
    EXPECT_THROW(trinomial_forms(4, 5), OutOfDomain);
}

TEST(ConcreteCensus, PairsCountedPerClass) {
    // X^4 - 4X: critical values -3 zeta^k, smooth C
    RationalPoly p({Rational(0), Rational(-4), Rational(0), Rational(0), Rational(1)});
    auto f = concrete_census(p, std::nullopt);
    ASSERT_TRUE(f.available);
    EXPECT_TRUE(f.points.empty());
    // no two values differ by the factor 2
    auto c2 = concrete_census(p, Rational(2));
    EXPECT_TRUE(c2.points.empty());
    // c = -1 on X^3 - 3X: values -/+2 swap
    RationalPoly q({Rational(0), Rational(-3), Rational(0), Rational(1)});
    auto m1 = concrete_census(q, Rational(-1));
    ASSERT_EQ(m1.points.size(), 2u);
    EXPECT_EQ(m1.points[0].multiplicity, 2);
    EXPECT_TRUE(m1.points[0].ordinary);
    // kind F with a double critical point
    RationalPoly r({Rational(1), Rational(0), Rational(0), Rational(1), Rational(1)});  // X^4 + X^3 + 1
    auto fr = concrete_census(r, std::nullopt);
    ASSERT_EQ(fr.points.size(), 1u);
    EXPECT_EQ(fr.points[0].multiplicity, 2);
}
