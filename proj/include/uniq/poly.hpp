#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uniq {

template <class R>
class Poly;

template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational exact_quotient(const Rational& a, const Rational& b) {
        if (sgn(b) == 0) throw std::domain_error("division by zero");
        return a / b;
    }
};

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
// The zero polynomial has degree -1.
template <class R>
class Poly {
public:
    using coeff_type = R;
    using T = ring_traits<R>;

    Poly() = default;
    explicit Poly(R c) {
        if (!T::is_zero(c)) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }
    Poly(std::initializer_list<R> c) : c_(c) { trim(); }

    static Poly monomial(R c, int k) {
        if (T::is_zero(c)) return Poly();
        std::vector<R> v(static_cast<std::size_t>(k) + 1, T::zero());
        v[static_cast<std::size_t>(k)] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(T::one(), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }

    R coeff(int k) const {
        if (k < 0 || k > degree()) return T::zero();
        return c_[static_cast<std::size_t>(k)];
    }
    const R& lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    void set_coeff(int k, R v) {
        if (k < 0) throw std::out_of_range("negative exponent");
        if (k > degree()) c_.resize(static_cast<std::size_t>(k) + 1, T::zero());
        c_[static_cast<std::size_t>(k)] = std::move(v);
        trim();
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T::zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T::zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const R& s) {
        for (auto& a : c_) a *= s;
        trim();
        return *this;
    }
    Poly operator-() const {
        Poly r(*this);
        for (auto& a : r.c_) a = -a;
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const R& s) { return a *= s; }
    friend Poly operator*(const R& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, T::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (T::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Strict total order so polynomials can key maps.
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    template <class V>
    V evaluate(const V& x) const {
        V acc = V(T::zero());
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }
    R operator()(const R& x) const {
        R acc = T::zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && T::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

using RationalPoly = Poly<Rational>;
// Polynomials with coefficients in Q[T].
using PolyQT = Poly<RationalPoly>;

template <>
struct ring_traits<RationalPoly> {
    static RationalPoly zero() { return RationalPoly(); }
    static RationalPoly one() { return RationalPoly(Rational(1)); }
    static bool is_zero(const RationalPoly& a) { return a.is_zero(); }
    static RationalPoly exact_quotient(const RationalPoly& a, const RationalPoly& b);
};

// ---- field algorithms over Q ----

template <class R>
Poly<R> derivative(const Poly<R>& p) {
    std::vector<R> d;
    for (int k = 1; k <= p.degree(); ++k) d.push_back(p.coeff(k) * R(k));
    return Poly<R>(std::move(d));
}

inline std::pair<RationalPoly, RationalPoly> divrem(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {RationalPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
    Rational inv = 1 / b.lead();
    for (int k = dq; k >= 0; --k) {
        Rational f = r[static_cast<std::size_t>(k + db)] * inv;
        q[static_cast<std::size_t>(k)] = f;
        if (sgn(f) == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.coeff(j);
    }
    r.resize(static_cast<std::size_t>(db));
    return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

inline RationalPoly monic(const RationalPoly& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.lead();
    return p * inv;
}

// Monic gcd; gcd(0,0) = 0.
inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
        RationalPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

struct DivisionError : std::domain_error {
    using std::domain_error::domain_error;
};

// Quotient a/b, throwing DivisionError when b does not divide a.
inline RationalPoly exact_divide(const RationalPoly& a, const RationalPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw DivisionError("polynomial division is not exact");
    return q;
}

inline bool divides(const RationalPoly& b, const RationalPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divrem(a, b).second.is_zero();
}

inline RationalPoly ring_traits<RationalPoly>::exact_quotient(const RationalPoly& a,
                                                              const RationalPoly& b) {
    return exact_divide(a, b);
}

template <class R>
Poly<R> pow(const Poly<R>& p, unsigned e) {
    Poly<R> out(ring_traits<R>::one()), base(p);
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

// p(q(X)) by Horner.
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
    Poly<R> acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * q + Poly<R>(p.coeff(i));
    return acc;
}

// p(X + s), synthetic-division style, O(n^2).
inline RationalPoly taylor_shift(const RationalPoly& p, const Rational& s) {
    std::vector<Rational> a = p.coeffs();
    int n = p.degree();
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) a[static_cast<std::size_t>(j)] += s * a[static_cast<std::size_t>(j) + 1];
    return RationalPoly(std::move(a));
}

// p(s X)
inline RationalPoly scale_arg(const RationalPoly& p, const Rational& s) {
    std::vector<Rational> a = p.coeffs();
    Rational f(1);
    for (auto& c : a) {
        c *= f;
        f *= s;
    }
    return RationalPoly(std::move(a));
}

struct SquarefreeFactor {
    RationalPoly factor;  // monic, squarefree
    int multiplicity;
};

// Yun. Factors with multiplicity k, monic, pairwise coprime; constants skipped.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const RationalPoly& f) {
    std::vector<SquarefreeFactor> out;
    if (f.degree() < 1) return out;
    RationalPoly fp = derivative(f);
    RationalPoly a = gcd(f, fp);
    RationalPoly b = exact_divide(f, a);
    RationalPoly c = exact_divide(fp, a);
    RationalPoly d = c - derivative(b);
    for (int k = 1; b.degree() >= 1; ++k) {
        RationalPoly g = gcd(b, d);
        if (g.degree() >= 1) out.push_back({g, k});
        b = exact_divide(b, g);
        c = exact_divide(d, g);
        d = c - derivative(b);
    }
    return out;
}

// Radical: product of the distinct monic irreducible factors.
inline RationalPoly radical(const RationalPoly& f) {
    if (f.degree() < 1) return RationalPoly(Rational(1));
    return monic(exact_divide(f, gcd(f, derivative(f))));
}

inline bool is_squarefree(const RationalPoly& f) { return gcd(f, derivative(f)).degree() < 1; }

// Canonical text, descending powers of the given variable: "X^3 - 3*X + 1/2".
inline std::string to_string(const RationalPoly& p, const std::string& var = "X") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool one = (c == 1);
        if (k == 0 || !one) s += to_text(c);
        if (k > 0) {
            if (!one) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace uniq
