#pragma once

#include "poly.hpp"

#include <algorithm>
#include <vector>

namespace uniq {

namespace detail {

template <class R>
R ring_pow(const R& b, int e) {
    R out = ring_traits<R>::one(), base = b;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

// lc(b)^(da-db+1) a = q b + r
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
    using T = ring_traits<R>;
    std::vector<R> r = a.coeffs();
    int db = b.degree();
    const R& lb = b.lead();
    int da = a.degree();
    for (int k = da; k >= db; --k) {
        R f = r[static_cast<std::size_t>(k)];
        for (auto& x : r) x = x * lb;
        if (!T::is_zero(f))
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(j);
    }
    r.resize(static_cast<std::size_t>(std::max(db, 0)));
    return Poly<R>(std::move(r));
}

template <class R>
Poly<R> exact_scalar_div(const Poly<R>& p, const R& s) {
    std::vector<R> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(ring_traits<R>::exact_quotient(c, s));
    return Poly<R>(std::move(v));
}

}  // namespace detail

// Sylvester matrix, rows of a first, coefficients from the top degree down.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Poly<R>& a, const Poly<R>& b) {
    int m = a.degree(), n = b.degree();
    int N = m + n;
    std::vector<std::vector<R>> M(static_cast<std::size_t>(N),
                                  std::vector<R>(static_cast<std::size_t>(N), ring_traits<R>::zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            M[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = b.coeff(n - j);
    return M;
}

// Fraction-free Gaussian elimination over an integral domain.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> M) {
    using T = ring_traits<R>;
    std::size_t N = M.size();
    if (N == 0) return T::one();
    R prev = T::one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (T::is_zero(M[k][k])) {
            std::size_t p = k + 1;
            while (p < N && T::is_zero(M[p][k])) ++p;
            if (p == N) return T::zero();
            std::swap(M[k], M[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                R num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                M[i][j] = T::exact_quotient(num, prev);
            }
            M[i][k] = T::zero();
        }
        prev = M[k][k];
    }
    R d = M[N - 1][N - 1];
    return negate ? R(T::zero() - d) : d;
}

template <class R>
R resultant_sylvester(const Poly<R>& a, const Poly<R>& b) {
    using T = ring_traits<R>;
    if (a.is_zero() || b.is_zero()) return T::zero();
    if (a.degree() == 0) return detail::ring_pow(a.lead(), b.degree());
    if (b.degree() == 0) return detail::ring_pow(b.lead(), a.degree());
    return bareiss_determinant(sylvester_matrix(a, b));
}

// Subresultant pseudo-remainder sequence, no content removal.
template <class R>
R resultant_subresultant(Poly<R> A, Poly<R> B) {
    using T = ring_traits<R>;
    if (A.is_zero() || B.is_zero()) return T::zero();
    bool neg = false;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) neg = true;
    }
    if (B.degree() == 0) {
        R r = detail::ring_pow(B.lead(), A.degree());
        return neg ? R(T::zero() - r) : r;
    }
    R g = T::one(), h = T::one();
    for (;;) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) neg = !neg;
        Poly<R> Rm = detail::pseudo_remainder(A, B);
        A = std::move(B);
        if (Rm.is_zero()) return T::zero();
        B = detail::exact_scalar_div(Rm, R(g * detail::ring_pow(h, delta)));
        g = A.lead();
        if (delta == 0) {
            // h unchanged
        } else {
            h = T::exact_quotient(detail::ring_pow(g, delta), detail::ring_pow(h, delta - 1));
        }
        if (B.degree() <= 0) break;
    }
    int da = A.degree();
    R res = T::exact_quotient(detail::ring_pow(B.lead(), da), detail::ring_pow(h, da - 1));
    return neg ? R(T::zero() - res) : res;
}

inline constexpr int kSylvesterMaxDegree = 8;

template <class R>
R resultant(const Poly<R>& a, const Poly<R>& b) {
    if (std::max(a.degree(), b.degree()) <= kSylvesterMaxDegree) return resultant_sylvester(a, b);
    return resultant_subresultant(a, b);
}

}  // namespace uniq
