#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace uniq {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long p, long q = 1) {
    if (q == 0) throw std::domain_error("rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view s) {
    std::string t(s);
    auto slash = t.find('/');
    auto is_int = [](const std::string& u) {
        std::size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
        if (i >= u.size()) return false;
        for (; i < u.size(); ++i)
            if (u[i] < '0' || u[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string u) { return (!u.empty() && u[0] == '+') ? u.substr(1) : u; };
    if (slash == std::string::npos) {
        if (!is_int(t)) throw std::invalid_argument("not a rational: " + t);
        return Rational(Integer(strip_plus(t)));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational: " + t);
    Integer d(den);
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rational r{Integer(strip_plus(num)), d};
    r.canonicalize();
    return r;
}

// Always "p/q", also for integers ("3/1"), so report consumers never branch.
inline std::string to_pq(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Human form: "3", "-1/2".
inline std::string to_text(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_str();
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational rpow(const Rational& b, unsigned e) {
    Rational out(1), base(b);
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

inline Integer igcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline long lgcd(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace uniq
