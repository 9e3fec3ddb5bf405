#pragma once

#include "poly.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace uniq {

using Exps = std::array<int, 3>;  // powers of X, Y, Z

// Sparse polynomial in X, Y, Z. Ordered map keeps iteration deterministic.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(const Rational& c) {
        if (sgn(c) != 0) t_[{0, 0, 0}] = c;
    }
    static MPoly term(const Rational& c, int i, int j, int k) {
        MPoly p;
        if (sgn(c) != 0) p.t_[{i, j, k}] = c;
        return p;
    }
    static MPoly X() { return term(Rational(1), 1, 0, 0); }
    static MPoly Y() { return term(Rational(1), 0, 1, 0); }
    static MPoly Z() { return term(Rational(1), 0, 0, 1); }

    const std::map<Exps, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    Rational coeff(const Exps& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, e[0] + e[1] + e[2]);
        return d;
    }
    // -1 for zero, -2 for non-homogeneous.
    int homogeneous_degree() const {
        int d = -1;
        for (auto& [e, c] : t_) {
            int s = e[0] + e[1] + e[2];
            if (d == -1) d = s;
            else if (d != s) return -2;
        }
        return d;
    }
    int degree_in(int v) const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, e[static_cast<std::size_t>(v)]);
        return d;
    }

    void add_term(const Exps& e, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, fresh] = t_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) t_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        for (auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (auto& [e, c] : o.t_) add_term(e, Rational(-c));
        return *this;
    }
    MPoly& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            t_.clear();
            return *this;
        }
        for (auto& [e, c] : t_) c *= s;
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
    friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
    MPoly operator-() const { return *this * Rational(-1); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, Rational(ca * cb));
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly partial(int v) const {
        MPoly r;
        for (auto& [e, c] : t_) {
            int k = e[static_cast<std::size_t>(v)];
            if (k == 0) continue;
            Exps f = e;
            f[static_cast<std::size_t>(v)] -= 1;
            r.add_term(f, Rational(c * k));
        }
        return r;
    }

    Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const {
        Rational s(0);
        for (auto& [e, c] : t_)
            s += c * rpow(x, static_cast<unsigned>(e[0])) * rpow(y, static_cast<unsigned>(e[1])) *
                 rpow(z, static_cast<unsigned>(e[2]));
        return s;
    }

    // Substitute a value for one variable.
    MPoly set_var(int v, const Rational& val) const {
        MPoly r;
        for (auto& [e, c] : t_) {
            Exps f = e;
            unsigned k = static_cast<unsigned>(f[static_cast<std::size_t>(v)]);
            f[static_cast<std::size_t>(v)] = 0;
            r.add_term(f, Rational(c * rpow(val, k)));
        }
        return r;
    }

    // Leading term under lex X > Y > Z.
    std::pair<Exps, Rational> lex_lead() const {
        if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
        auto it = t_.rbegin();
        return {it->first, it->second};
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string s;
        static const char* names[3] = {"X", "Y", "Z"};
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            Rational c = it->second;
            bool neg = sgn(c) < 0;
            if (neg) c = -c;
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            bool mono = it->first[0] + it->first[1] + it->first[2] > 0;
            std::string m;
            for (int v = 0; v < 3; ++v) {
                int k = it->first[static_cast<std::size_t>(v)];
                if (!k) continue;
                if (!m.empty()) m += "*";
                m += names[v];
                if (k > 1) m += "^" + std::to_string(k);
            }
            if (!mono) s += to_text(c);
            else if (c == 1) s += m;
            else s += to_text(c) + "*" + m;
        }
        return s;
    }

private:
    std::map<Exps, Rational> t_;
};

inline MPoly mpow(const MPoly& p, unsigned e) {
    MPoly out(Rational(1)), base(p);
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

// Multivariate division by lex leading terms. Returns the quotient when the
// remainder vanishes; with one divisor the remainder is canonical, so a
// nonzero remainder really means b does not divide a.
inline std::pair<MPoly, MPoly> mdivrem(MPoly a, const MPoly& b) {
    auto [lb, cb] = b.lex_lead();
    MPoly q, r;
    while (!a.is_zero()) {
        auto [la, ca] = a.lex_lead();
        if (la[0] >= lb[0] && la[1] >= lb[1] && la[2] >= lb[2]) {
            MPoly t = MPoly::term(Rational(ca / cb), la[0] - lb[0], la[1] - lb[1], la[2] - lb[2]);
            q += t;
            a -= t * b;
        } else {
            MPoly t = MPoly::term(ca, la[0], la[1], la[2]);
            r += t;
            a -= t;
        }
    }
    return {q, r};
}

inline MPoly mexact_divide(const MPoly& a, const MPoly& b) {
    auto [q, r] = mdivrem(a, b);
    if (!r.is_zero()) throw DivisionError("multivariate division is not exact");
    return q;
}

inline bool mdivides(const MPoly& b, const MPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return mdivrem(a, b).second.is_zero();
}

// A homogeneous form with its degree pinned.
class HomogPoly {
public:
    HomogPoly() = default;
    HomogPoly(MPoly p, int degree) : p_(std::move(p)), d_(degree) {
        int h = p_.homogeneous_degree();
        if (h == -2 || (h >= 0 && h != d_))
            throw std::domain_error("polynomial is not homogeneous of degree " + std::to_string(d_));
    }
    static HomogPoly from(MPoly p) {
        int h = p.homogeneous_degree();
        if (h == -2) throw std::domain_error("polynomial is not homogeneous");
        return HomogPoly(std::move(p), std::max(h, 0));
    }
    const MPoly& poly() const { return p_; }
    int degree() const { return d_; }
    bool is_zero() const { return p_.is_zero(); }
    HomogPoly partial(int v) const { return HomogPoly(p_.partial(v), std::max(d_ - 1, 0)); }
    friend bool operator==(const HomogPoly& a, const HomogPoly& b) { return a.d_ == b.d_ && a.p_ == b.p_; }

private:
    MPoly p_;
    int d_ = 0;
};

// p(X) of degree <= d as sum p_i X^i Z^(d-i); var selects X (0) or Y (1).
inline HomogPoly homogenize(const RationalPoly& p, int d, int var = 0) {
    if (p.degree() > d) throw std::domain_error("homogenizing degree below polynomial degree");
    MPoly r;
    for (int i = 0; i <= p.degree(); ++i) {
        Exps e{0, 0, d - i};
        e[static_cast<std::size_t>(var)] = i;
        r.add_term(e, p.coeff(i));
    }
    return HomogPoly(r, d);
}

// Homogenize a polynomial in X, Y (Z exponents must be zero) to degree d.
inline HomogPoly homogenize_xy(const MPoly& p, int d) {
    MPoly r;
    for (auto& [e, c] : p.terms()) {
        if (e[2] != 0) throw std::domain_error("expected a polynomial in X, Y");
        int s = e[0] + e[1];
        if (s > d) throw std::domain_error("homogenizing degree below polynomial degree");
        r.add_term({e[0], e[1], d - s}, c);
    }
    return HomogPoly(r, d);
}

inline MPoly dehomogenize(const HomogPoly& h) { return h.poly().set_var(2, Rational(1)); }

// Univariate view of a polynomial that only involves variable v.
inline RationalPoly to_univariate(const MPoly& p, int v) {
    RationalPoly r;
    for (auto& [e, c] : p.terms()) {
        for (int w = 0; w < 3; ++w)
            if (w != v && e[static_cast<std::size_t>(w)] != 0)
                throw std::domain_error("polynomial involves another variable");
        r += RationalPoly::monomial(c, e[static_cast<std::size_t>(v)]);
    }
    return r;
}

inline MPoly from_univariate(const RationalPoly& p, int v) {
    MPoly r;
    for (int i = 0; i <= p.degree(); ++i) {
        Exps e{0, 0, 0};
        e[static_cast<std::size_t>(v)] = i;
        r.add_term(e, p.coeff(i));
    }
    return r;
}

}  // namespace uniq
