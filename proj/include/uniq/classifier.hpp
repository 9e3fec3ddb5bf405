#pragma once

#include "criteria.hpp"
#include "curve.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uniq {

struct DegreeCapExceeded : std::length_error {
    using std::length_error::length_error;
};

inline constexpr int kDefaultDegreeCap = 64;

enum class Answer { Yes, No, OutOfScope };

inline const char* answer_name(Answer a) {
    switch (a) {
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
        default: return "out_of_scope";
    }
}

enum Property : int { UpRational = 0, SupRational = 1, UpMeromorphic = 2, SupMeromorphic = 3 };

inline constexpr std::array<Property, 4> kProperties{UpRational, SupRational, UpMeromorphic, SupMeromorphic};

inline const char* property_name(Property p) {
    static const char* names[] = {"up_rational", "sup_rational", "up_meromorphic", "sup_meromorphic"};
    return names[p];
}

inline bool is_strong(Property p) { return p == SupRational || p == SupMeromorphic; }
inline bool is_meromorphic(Property p) { return p == UpMeromorphic || p == SupMeromorphic; }

// ---- affine witnesses P(beta (X - mu) + mu) = c P(X) ----

struct Witness {
    int order = 0;          // beta a primitive root of unity of this order; 0 = rational beta
    Rational beta;          // meaningful when order == 0
    Rational center;        // mu
    int c_exponent = 0;     // c = beta^c_exponent
    bool verified = false;
    std::string kind() const {
        if (c_is_one()) return sgn(center) == 0 ? "scaling" : "affine";
        return "scaling_with_c";
    }
    bool c_is_one() const {
        if (order == 0) return c_exponent == 0 || beta == 1;
        return c_exponent % order == 0;
    }
    std::string beta_text() const { return order == 0 ? to_text(beta) : "zeta_" + std::to_string(order); }
    std::string c_text() const {
        if (c_is_one()) return "1";
        if (order == 0) return to_text(rpow(beta, static_cast<unsigned>(c_exponent)));
        if (order == 2) return "-1";
        int e = c_exponent % order;
        return e == 1 ? beta_text() : beta_text() + "^" + std::to_string(e);
    }
    std::string identity() const {
        std::string arg = beta_text() + "*X";
        if (sgn(center) > 0) arg = beta_text() + "*(X - " + to_text(center) + ") + " + to_text(center);
        if (sgn(center) < 0) arg = beta_text() + "*(X + " + to_text(-center) + ") - " + to_text(-center);
        std::string s = "P(" + arg + ") - " + (c_is_one() ? "" : c_text() + "*") + "P(X) = 0";
        if (order > 2) s += " mod Phi_" + std::to_string(order) + "(zeta_" + std::to_string(order) + ")";
        return s;
    }
};

inline bool replay_witness(const RationalPoly& p, const Witness& w) {
    if (w.order == 0) {
        RationalPoly arg({Rational(w.center - w.beta * w.center), w.beta});
        RationalPoly lhs = compose(p, arg);
        return (lhs - p * rpow(w.beta, static_cast<unsigned>(w.c_exponent))).is_zero() && w.beta != 1;
    }
    return verify_rotation_identity(p, w.order, w.c_exponent, w.center);
}

enum class SearchMode { CEquals1, AnyC };

inline const char* search_mode_name(SearchMode m) { return m == SearchMode::CEquals1 ? "c_equals_1" : "any_c"; }

// Independent oracle: comparing coefficients of P(beta X + gamma) = c P(X)
// forces c = beta^n and gamma = mu (1 - beta), mu the centroid. With
// P(X + mu) = sum b_i X^i the rest reads b_i (beta^i - c) = 0.
inline std::optional<Witness> witness_search(const RationalPoly& p, SearchMode mode) {
    int n = p.degree();
    if (n < 1) return std::nullopt;
    Rational mu = centroid_shift(p);
    RationalPoly s = taylor_shift(monic(p), mu);
    RationalPoly beta = RationalPoly::x();
    RationalPoly c = mode == SearchMode::AnyC ? pow(beta, static_cast<unsigned>(n)) : RationalPoly(Rational(1));
    RationalPoly g;
    int last = mode == SearchMode::AnyC ? n - 1 : n;
    for (int i = 0; i <= last; ++i) {
        if (sgn(s.coeff(i)) == 0) continue;
        g = gcd(g, pow(beta, static_cast<unsigned>(i)) - c);
    }
    if (g.is_zero()) {
        // (X - mu)^n: every scaling about mu works
        Witness w;
        w.beta = 2;
        w.center = mu;
        w.c_exponent = n;
        w.verified = replay_witness(p, w);
        return w;
    }
    while (g.degree() >= 1 && sgn(g.coeff(0)) == 0) g = exact_divide(g, beta);
    RationalPoly one_less = beta - RationalPoly(Rational(1));
    while (g.degree() >= 1 && divides(one_less, g)) g = exact_divide(g, one_less);
    if (g.degree() < 1) return std::nullopt;
    std::optional<Witness> best;
    for (int r = 2; r <= n; ++r) {
        if (!divides(cyclotomic(r), g)) continue;
        Witness w;
        w.order = r;
        w.center = mu;
        w.c_exponent = mode == SearchMode::AnyC ? n % r : 0;
        w.verified = replay_witness(p, w);
        if (!best || (mode == SearchMode::AnyC && best->c_is_one() && !w.c_is_one())) best = w;
    }
    return best;
}

// ---- certificates for the negative cases without affine witnesses ----

struct ExceptionCertificate {
    std::string id;
    CurveKind kind = CurveKind::F;
    int degree = 0;
    std::vector<SingularPoint> census;
    IrreducibilityCertificate irreducibility;
    long genus = -1;
    bool rational_refuted = false;  // genus 0
    std::vector<std::string> assumptions;
};

inline ExceptionCertificate exception_certificate(const std::string& id, CurveKind kind, const std::vector<int>& m,
                                                  const Pairing& tau = {}) {
    ExceptionCertificate e;
    e.id = id;
    e.kind = kind;
    int n = 1;
    for (int x : m) n += x;
    e.degree = kind == CurveKind::F ? n - 1 : n;
    e.census = singular_census(m, true, kind, tau);
    bool complete = e.census.size() >= 2;
    e.irreducibility = bezout_irreducibility(e.degree, e.census, true,
                                             complete ? BezoutMode::CompleteCensus : BezoutMode::Feasible);
    e.assumptions.push_back("curve has no linear component");
    if (complete) e.assumptions.push_back("census lists every multiple point");
    if (e.irreducibility.certified) e.genus = genus_ordinary(e.degree, e.census, true);
    e.rational_refuted = e.genus == 0;
    return e;
}

// ---- verdict ----

struct Decision {
    Answer answer = Answer::OutOfScope;
    std::string basis;  // "rule:...", "witness:k", "exception:id", "open:..."
};

struct TraceEntry {
    std::string rule;
    std::string inputs;
    std::string conclusion;
};

struct Verdict {
    RationalPoly input;
    std::array<Decision, 4> decisions;
    std::vector<TraceEntry> trace;
    std::vector<Witness> witnesses;
    std::vector<ExceptionCertificate> exceptions;
    std::vector<std::string> assumptions;
    std::vector<std::string> conflicts;

    std::optional<Normalized> normalized;
    std::optional<IndexData> index;
    CriticalStructure critical;
    AffineSymmetry symmetry;
    ExceptionalFlags flags;

    Answer operator[](Property p) const { return decisions[p].answer; }
    bool any_out_of_scope() const {
        for (auto& d : decisions)
            if (d.answer == Answer::OutOfScope) return true;
        return false;
    }
};

namespace detail {

inline std::string mtext(const std::vector<int>& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
}

class Builder {
public:
    explicit Builder(Verdict& v) : v_(v) {}

    void set(Property p, Answer a, const std::string& basis) {
        auto& d = v_.decisions[p];
        if (d.answer == Answer::OutOfScope) {
            d = {a, basis};
        } else if (d.answer != a) {
            v_.conflicts.push_back(std::string(property_name(p)) + ": " + d.basis + " says " + answer_name(d.answer) +
                                   ", " + basis + " says " + answer_name(a));
        }
    }
    void open(Property p, const std::string& why) {
        auto& d = v_.decisions[p];
        if (d.answer == Answer::OutOfScope && d.basis.empty()) d.basis = "open:" + why;
    }
    std::string add_witness(const Witness& w) {
        for (std::size_t k = 0; k < v_.witnesses.size(); ++k) {
            auto& o = v_.witnesses[k];
            if (o.order == w.order && o.beta == w.beta && o.center == w.center && o.c_exponent == w.c_exponent)
                return "witness:" + std::to_string(k);
        }
        v_.witnesses.push_back(w);
        if (!w.verified) v_.conflicts.push_back("witness " + w.identity() + " does not replay");
        return "witness:" + std::to_string(v_.witnesses.size() - 1);
    }
    std::string add_exception(ExceptionCertificate e) {
        if (!e.irreducibility.certified)
            v_.conflicts.push_back("exception " + e.id + " lacks an irreducibility certificate");
        std::string id = "exception:" + e.id;
        for (auto& a : e.assumptions)
            if (std::find(v_.assumptions.begin(), v_.assumptions.end(), a) == v_.assumptions.end())
                v_.assumptions.push_back(a);
        v_.exceptions.push_back(std::move(e));
        return id;
    }
    void trace(std::string rule, std::string inputs, std::string conclusion) {
        v_.trace.push_back({std::move(rule), std::move(inputs), std::move(conclusion)});
    }

    // sup => up, meromorphic yes => rational yes, and contrapositives.
    void close_lattice() {
        struct Edge {
            Property strong, weak;
        };
        static const Edge edges[] = {{SupRational, UpRational},
                                     {SupMeromorphic, UpMeromorphic},
                                     {UpMeromorphic, UpRational},
                                     {SupMeromorphic, SupRational}};
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto e : edges) {
                auto& s = v_.decisions[e.strong];
                auto& w = v_.decisions[e.weak];
                if (s.answer == Answer::Yes && w.answer != Answer::Yes) {
                    if (w.answer == Answer::No) {
                        v_.conflicts.push_back(std::string(property_name(e.strong)) + " yes but " +
                                               property_name(e.weak) + " no");
                        continue;
                    }
                    w = {Answer::Yes, s.basis};
                    changed = true;
                }
                if (w.answer == Answer::No && s.answer != Answer::No) {
                    if (s.answer == Answer::Yes) continue;  // reported above
                    s = {Answer::No, w.basis};
                    changed = true;
                }
            }
        }
    }

private:
    Verdict& v_;
};

inline Witness rotation_witness(const RationalPoly& p, int order, int c_exponent, const Rational& center) {
    Witness w;
    w.order = order;
    w.center = center;
    w.c_exponent = c_exponent;
    w.verified = replay_witness(p, w);
    return w;
}

// Largest d | g, d >= 2, such that the rotation lifts: P(zeta_d (X - mu) + mu) = zeta_d^e P(X).
inline std::optional<Witness> lift_symmetry(const RationalPoly& p, const AffineSymmetry& a) {
    for (int d = a.order; d >= 2; --d) {
        if (a.order % d) continue;
        for (int e = 0; e < d; ++e)
            if (verify_rotation_identity(p, d, e, a.centroid)) return rotation_witness(p, d, e, a.centroid);
    }
    return std::nullopt;
}

}  // namespace detail

struct ClassifyOptions {
    int degree_cap = kDefaultDegreeCap;
};

inline Verdict classify(const RationalPoly& P, const ClassifyOptions& opt = {}) {
    int n = P.degree();
    if (n < 2) throw OutOfDomain("classification needs degree >= 2");
    if (n > opt.degree_cap)
        throw DegreeCapExceeded("degree " + std::to_string(n) + " exceeds cap " + std::to_string(opt.degree_cap));
    Verdict v;
    v.input = P;
    detail::Builder b(v);
    RationalPoly p = monic(P);

    v.critical = critical_structure(p);
    const auto& cs = v.critical;
    const auto& m = cs.multiplicities;
    std::string mt = "l=" + std::to_string(cs.l()) + " m=" + detail::mtext(m);

    // single critical point: P = (X - a)^n + b
    if (cs.l() == 1) {
        Rational mu = centroid_shift(p);
        std::string w = b.add_witness(detail::rotation_witness(p, n, 0, mu));
        for (auto q : kProperties) b.set(q, Answer::No, w);
        b.trace("single-critical-point", mt, "rotation of order n about the critical point preserves P");
        b.close_lattice();
        return v;
    }

    v.normalized = normalize(p);
    const auto& nz = *v.normalized;
    v.index = index_data(nz.p0);
    const auto& id = *v.index;
    int gap = id.n - std::max(id.m, 0);
    std::string it = "gcd_I=" + std::to_string(id.gcd_I) + " gcd_J=" + std::to_string(id.gcd_J) +
                     " gap=" + std::to_string(gap);

    // rotation witnesses read off the normalized support
    std::optional<std::string> up_witness, sup_witness;
    if (id.gcd_I > 1) {
        up_witness = b.add_witness(detail::rotation_witness(p, id.gcd_I, 0, nz.shift));
        b.set(UpRational, Answer::No, *up_witness);
        b.set(UpMeromorphic, Answer::No, *up_witness);
        b.trace("support-rotation", it, "P0(zeta X) = P0(X) for zeta of order gcd_I");
    }
    if (id.gcd_J > 1) {
        sup_witness = b.add_witness(detail::rotation_witness(p, id.gcd_J, id.l_min % id.gcd_J, nz.shift));
        b.set(SupRational, Answer::No, *sup_witness);
        b.set(SupMeromorphic, Answer::No, *sup_witness);
        b.trace("support-rotation-c", it, "P0(zeta X) = zeta^l_min P0(X) for zeta of order gcd_J");
    }

    // gap shape
    if (id.m >= 0 && gap >= 3) {
        if (id.gcd_J == 1 && id.I.size() < 3) v.conflicts.push_back("gap >= 3 with gcd_J = 1 but #I < 3");
        bool yes = id.gcd_I == 1 && id.gcd_J == 1;
        std::string basis = yes ? "rule:gap-gcd" : (id.gcd_I > 1 ? *up_witness : *sup_witness);
        b.set(SupRational, yes ? Answer::Yes : Answer::No, basis);
        if (gap >= 4) b.set(SupMeromorphic, yes ? Answer::Yes : Answer::No, basis);
        b.trace("gap-gcd", it,
                std::string("strong uniqueness for rational") + (gap >= 4 ? " and meromorphic" : "") +
                    " functions: " + (yes ? "yes" : "no"));
    }

    // separated table
    v.flags = exceptional_flags(cs, n);
    v.symmetry = affine_symmetry(p);
    if (cs.separated) {
        int l = cs.l(), mn = cs.m_min();
        bool up_rat = l >= 3 || (l == 2 && mn >= 2);
        bool smooth_cubic = n == 4 && m == std::vector<int>{1, 1, 1};
        bool quintic = v.flags.quintic_case;
        bool up_mer = (l >= 3 && !smooth_cubic) || (l == 2 && mn >= 2 && !quintic);

        std::optional<std::string> pencil;
        if (!up_rat) {
            pencil = b.add_exception(exception_certificate("genus-zero-two-critical", CurveKind::F, m));
            b.set(UpRational, Answer::No, *pencil);
        } else {
            b.set(UpRational, Answer::Yes, "rule:separated-table");
        }
        if (up_mer) {
            b.set(UpMeromorphic, Answer::Yes, "rule:separated-table");
        } else if (pencil) {
            b.set(UpMeromorphic, Answer::No, *pencil);
        } else {
            std::string eid = smooth_cubic ? "genus-one-smooth-cubic" : "genus-one-two-double-points";
            b.set(UpMeromorphic, Answer::No, b.add_exception(exception_certificate(eid, CurveKind::F, m)));
        }
        b.trace("separated-table", mt,
                std::string("uniqueness: rational ") + (up_rat ? "yes" : "no") + ", meromorphic " +
                    (up_mer ? "yes" : "no"));

        if (!v.symmetry.exists) {
            bool sup_rat = (l == 2 && mn >= 2) || (l >= 3 && !v.flags.quartic_w_case);
            if (sup_rat) {
                b.set(SupRational, Answer::Yes, "rule:separated-rigid");
            } else if (v.flags.quartic_w_case) {
                Pairing cycle{1, 2, 0};
                b.set(SupRational, Answer::No,
                      b.add_exception(exception_certificate("genus-zero-cyclic-quartic", CurveKind::Fc, m, cycle)));
            }
            if (up_mer) b.set(SupMeromorphic, Answer::Yes, "rule:separated-rigid");
            b.trace("separated-rigid", mt + (v.flags.quartic_w_case ? " cyclic critical values" : ""),
                    std::string("strong uniqueness: rational ") + (sup_rat ? "yes" : "no") + ", meromorphic " +
                        (up_mer ? "yes" : "no"));
        } else {
            auto lift = detail::lift_symmetry(p, v.symmetry);
            if (lift) {
                std::string w = b.add_witness(*lift);
                b.set(SupRational, Answer::No, w);
                b.set(SupMeromorphic, Answer::No, w);
                if (lift->c_is_one()) {
                    b.set(UpRational, Answer::No, w);
                    b.set(UpMeromorphic, Answer::No, w);
                }
                b.trace("zero-set-symmetry", "order=" + std::to_string(v.symmetry.order),
                        "the symmetry lifts: " + lift->identity());
            } else {
                b.open(SupRational, "zero set is not rigid and its symmetry does not lift to P");
                b.open(SupMeromorphic, "zero set is not rigid and its symmetry does not lift to P");
                b.trace("zero-set-symmetry", "order=" + std::to_string(v.symmetry.order),
                        "no lift to P; strong uniqueness left open");
            }
        }
    } else {
        for (auto q : kProperties) b.open(q, "critical values are not separated and no other rule applies");
    }

    b.close_lattice();
    return v;
}

// ---- the two-term family (X - a)^n + a (X - a)^m + b ----

struct TwoTermShape {
    Rational alpha;
    int n = 0, m = 0;
    Rational a, b;
};

inline std::array<bool, 4> corollary_classify(const Rational& /*alpha*/, int n, int m, const Rational& a,
                                              const Rational& b) {
    if (m < 1 || m > n - 1) throw std::invalid_argument("need 1 <= m <= n - 1");
    bool base = n - m >= 2 && std::gcd(n, m) == 1 && sgn(a) != 0;
    bool b_ok = sgn(b) != 0;
    return {base && n >= 4, base && n >= 4 && b_ok, base && n >= 5, base && n >= 5 && b_ok};
}

// Recognizes monic(P) = (X - alpha)^n + a (X - alpha)^m + b.
inline std::optional<TwoTermShape> two_term_shape(const RationalPoly& P) {
    int n = P.degree();
    if (n < 2) return std::nullopt;
    RationalPoly p = monic(P);
    std::vector<Rational> centers;
    centers.push_back(centroid_shift(p));
    if (n >= 3) {
        for (auto& f : squarefree_decomposition(derivative(p)))
            if (f.multiplicity == n - 2 && f.factor.degree() == 1) centers.push_back(-f.factor.coeff(0));
    } else {
        centers.push_back(Rational(0));
    }
    for (auto& alpha : centers) {
        RationalPoly s = taylor_shift(p, alpha);
        std::vector<int> mid;
        for (int i = 1; i < n; ++i)
            if (sgn(s.coeff(i)) != 0) mid.push_back(i);
        if (mid.size() > 1) continue;
        TwoTermShape t;
        t.alpha = alpha;
        t.n = n;
        t.m = mid.empty() ? 1 : mid.front();
        t.a = mid.empty() ? Rational(0) : s.coeff(t.m);
        t.b = s.coeff(0);
        return t;
    }
    return std::nullopt;
}

// ---- audit ----

struct AuditItem {
    std::string check;
    bool ok = true;
    std::string detail;
};

struct AuditReport {
    bool passed = true;
    std::vector<AuditItem> items;
    void add(std::string check, bool ok, std::string detail) {
        passed = passed && ok;
        items.push_back({std::move(check), ok, std::move(detail)});
    }
};

inline AuditReport consistency_audit(const RationalPoly& P, const Verdict& v) {
    AuditReport r;
    r.add("route-agreement", v.conflicts.empty(), v.conflicts.empty() ? "" : v.conflicts.front());
    for (auto& w : v.witnesses) r.add("witness-replay", replay_witness(P, w), w.identity());

    std::optional<Witness> search[2];
    bool searched[2] = {false, false};
    auto oracle = [&](SearchMode mode) -> const std::optional<Witness>& {
        int k = mode == SearchMode::CEquals1 ? 0 : 1;
        if (!searched[k]) {
            search[k] = witness_search(P, mode);
            searched[k] = true;
        }
        return search[k];
    };
    for (auto q : kProperties) {
        const auto& d = v.decisions[q];
        SearchMode mode = is_strong(q) ? SearchMode::AnyC : SearchMode::CEquals1;
        std::string name = property_name(q);
        if (d.answer == Answer::Yes) {
            auto& w = oracle(mode);
            r.add("oracle-yes", !w, name + (w ? ": oracle found " + w->identity() : ""));
        } else if (d.answer == Answer::No) {
            if (d.basis.rfind("exception:", 0) == 0) {
                r.add("oracle-no", true, name + ": " + d.basis);
                continue;
            }
            auto& w = oracle(mode);
            r.add("oracle-no", w && w->verified, name + (w ? ": " + w->identity() : ": oracle found nothing"));
        }
    }
    if (auto t = two_term_shape(P)) {
        auto expect = corollary_classify(t->alpha, t->n, t->m, t->a, t->b);
        bool ok = true;
        for (auto q : kProperties) ok = ok && v[q] == (expect[q] ? Answer::Yes : Answer::No);
        r.add("two-term-family", ok, "n=" + std::to_string(t->n) + " m=" + std::to_string(t->m));
    }
    return r;
}

}  // namespace uniq
