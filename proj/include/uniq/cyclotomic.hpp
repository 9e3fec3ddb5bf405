#pragma once

#include "poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace uniq {

inline RationalPoly cyclotomic(int r) {
    if (r < 1) throw std::domain_error("cyclotomic index must be positive");
    static std::mutex mu;
    static std::map<int, RationalPoly> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(r);
        if (it != cache.end()) return it->second;
    }
    RationalPoly p = RationalPoly::monomial(Rational(1), r) - RationalPoly(Rational(1));
    for (int d = 1; d < r; ++d)
        if (r % d == 0) p = exact_divide(p, cyclotomic(d));
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(r, p);
    return p;
}

inline int euler_phi(int r) {
    int out = r;
    for (int p = 2; p * p <= r; ++p) {
        if (r % p) continue;
        while (r % p == 0) r /= p;
        out -= out / p;
    }
    if (r > 1) out -= out / r;
    return out;
}

// Q(zeta_r) as Q[z]/Phi_r. Elements are reduced RationalPolys in z.
class CyclotomicField {
public:
    explicit CyclotomicField(int r) : r_(r), phi_(cyclotomic(r)) {}

    int order() const { return r_; }
    const RationalPoly& modulus() const { return phi_; }

    RationalPoly reduce(const RationalPoly& a) const { return divrem(a, phi_).second; }
    RationalPoly mul(const RationalPoly& a, const RationalPoly& b) const { return reduce(a * b); }
    RationalPoly zeta_pow(long e) const {
        long k = ((e % r_) + r_) % r_;
        return reduce(RationalPoly::monomial(Rational(1), static_cast<int>(k)));
    }
    RationalPoly constant(const Rational& c) const { return RationalPoly(c); }

    // Reduce every coefficient of a polynomial over Q[z].
    PolyQT reduce(const PolyQT& p) const {
        std::vector<RationalPoly> c;
        for (const auto& a : p.coeffs()) c.push_back(reduce(a));
        return PolyQT(std::move(c));
    }

    // p(beta X + gamma) with beta, gamma in the field.
    PolyQT substitute_affine(const RationalPoly& p, const RationalPoly& beta, const RationalPoly& gamma) const {
        PolyQT lin({reduce(gamma), reduce(beta)});
        PolyQT acc;
        for (int i = p.degree(); i >= 0; --i) acc = reduce(acc * lin + PolyQT(RationalPoly(p.coeff(i))));
        return acc;
    }

    static PolyQT lift(const RationalPoly& p) {
        std::vector<RationalPoly> c;
        for (const auto& a : p.coeffs()) c.push_back(RationalPoly(a));
        return PolyQT(std::move(c));
    }

private:
    int r_;
    RationalPoly phi_;
};

}  // namespace uniq
