#pragma once

// Case dispatch for the hyperbolicity engine. Included from order_calculus.hpp.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace uniq::oc {

namespace forms {

inline Form w_over_x(std::string name, std::initializer_list<std::pair<int, int>> den) {
    Form f;
    f.name = std::move(name);
    for (auto [i, e] : den) f.mul(XL(i), -e);
    return f;
}

}  // namespace forms

struct Candidate {
    std::string case_label;
    std::vector<Form> forms;  // one form: algebraic; two: Brody
};

namespace detail {

inline std::vector<int> unpaired_with(const Configuration& c, std::function<bool(int)> pred) {
    std::vector<int> r;
    for (int i = 0; i < c.l(); ++i)
        if (!c.paired(i) && pred(c.mult(i))) r.push_back(i);
    return r;
}

inline bool all_paired(const Configuration& c) {
    for (int i = 0; i < c.l(); ++i)
        if (!c.paired(i)) return false;
    return true;
}

inline int argmax_except(const Configuration& c, std::initializer_list<int> skip) {
    int best = -1;
    for (int i = 0; i < c.l(); ++i) {
        if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
        if (best < 0 || c.mult(i) > c.mult(best)) best = i;
    }
    return best;
}

// ---- kind F ----

inline Form omega0(const Configuration& c) {
    Form f;
    f.name = "omega0";
    f.mul(XMY(), c.n() - 3);
    for (int i = 0; i < c.l(); ++i) f.mul(XL(i), -c.mult(i));
    return f;
}

inline Form omega1(const Configuration& c, int a) {
    Form f;
    f.name = "omega1(" + std::to_string(a + 1) + ")";
    f.mul(XL(a), 1);
    f.mul(XMY(), c.n() - 4);
    for (int i = 0; i < c.l(); ++i) f.mul(XL(i), -c.mult(i));
    return f;
}

inline void kind_f_candidates(const Configuration& c, std::vector<Candidate>& alg, std::vector<Candidate>& brody) {
    int l = c.l();
    int mx = c.mult(0), mn = c.mult(l - 1);
    if (l >= 3 || (l == 2 && mn >= 2)) alg.push_back({"F:i", {omega0(c)}});
    bool b = l >= 4 || (l == 3 && mx > 1) || (l == 2 && mn >= 2 && mx >= 3);
    if (!b) return;
    for (int a = 0; a < l; ++a)
        for (int bb = a + 1; bb < l; ++bb) brody.push_back({"F:ii", {omega1(c, a), omega1(c, bb)}});
    for (int a = 0; a < l; ++a) brody.push_back({"F:ii", {omega0(c), omega1(c, a)}});
}

// ---- kind F_c ----

inline Form T1(int i) { return forms::w_over_x("W/(X-a" + std::to_string(i + 1) + ")^2", {{i, 2}}); }
inline Form T2(int i, int j) { return forms::w_over_x("W/((X-ai)(X-aj))", {{i, 1}, {j, 1}}); }

inline Form T7(const Configuration& c, int i) {
    Form f;
    f.name = "gap form";
    f.mul(YL(c.tau_of(i)), c.mult(i) - 2).mul(XL(i), -c.mult(i));
    return f;
}
inline Form T7r(const Configuration& c, int i) {
    int j = c.tau_of(i);
    Form f;
    f.name = "gap form (reversed)";
    f.w = WPair::XZ;
    f.mul(XL(i), c.mult(j) - 2).mul(YL(j), -c.mult(j));
    return f;
}
inline Form T8(const Configuration& c, int i, const Atom& mult) {
    Form f;
    f.name = "gap-3 form";
    f.mul(mult).mul(YL(c.tau_of(i)), c.mult(i) - 3).mul(XL(i), -c.mult(i));
    return f;
}
inline Form T8r(const Configuration& c, int i, const Atom& mult) {
    int j = c.tau_of(i);
    Form f;
    f.name = "gap-3 form (reversed)";
    f.w = WPair::XZ;
    f.mul(mult).mul(XL(i), c.mult(j) - 3).mul(YL(j), -c.mult(j));
    return f;
}

inline void pairing_gap_candidates(const Configuration& c, int i, const std::string& label, bool need_alg,
                                   bool need_brody, std::vector<Candidate>& alg, std::vector<Candidate>& brody) {
    if (!c.paired(i)) return;
    int d = c.mult(i) - c.mult(c.tau_of(i));
    if (need_alg && d >= 2) alg.push_back({label, {T7(c, i)}});
    if (need_alg && d <= -2) alg.push_back({label, {T7r(c, i)}});
    if (need_brody && d >= 3) brody.push_back({label, {T8(c, i, XV()), T8(c, i, YV())}});
    if (need_brody && d <= -3) brody.push_back({label, {T8r(c, i, XV()), T8r(c, i, YV())}});
}

inline void unpaired_candidates(const Configuration& c, std::vector<Candidate>& alg,
                                      std::vector<Candidate>& brody) {
    int l = c.l();
    if (l < 2) return;
    auto ge2 = unpaired_with(c, [](int m) { return m >= 2; });
    auto one = unpaired_with(c, [](int m) { return m == 1; });
    for (int i0 : ge2) alg.push_back({"Fc:unpaired-ia", {T1(i0)}});
    for (std::size_t a = 0; a < one.size(); ++a)
        for (std::size_t b = a + 1; b < one.size(); ++b) alg.push_back({"Fc:unpaired-ib", {T2(one[a], one[b])}});

    for (int i0 : unpaired_with(c, [](int m) { return m >= 3; })) {
        Form a = forms::w_over_x("", {{i0, 3}}), b = a;
        a.mul(XV());
        b.mul(YV());
        brody.push_back({"Fc:unpaired-iia", {a, b}});
    }
    for (int i0 : unpaired_with(c, [](int m) { return m == 2; })) {
        bool other = false;
        for (int i = 0; i < l; ++i) other = other || (i != i0 && c.mult(i) >= 2);
        if (!other) continue;
        int k = argmax_except(c, {i0});
        Form e2;
        if (!c.paired(k)) {
            e2 = T2(i0, k);
        } else {
            e2 = forms::w_over_x("", {{i0, 2}, {k, 1}});
            e2.mul(YL(c.tau_of(k)));
        }
        brody.push_back({"Fc:unpaired-iib", {T1(i0), e2}});
    }
    for (int a : unpaired_with(c, [](int m) { return m == 2; }))
        for (int b : one) brody.push_back({"Fc:unpaired-iic", {T1(a), T2(a, b)}});
    if (l >= 3) {
        for (std::size_t x = 0; x < one.size(); ++x)
            for (std::size_t y = x + 1; y < one.size(); ++y) {
                int i1 = one[x], i2 = one[y];
                int k = argmax_except(c, {i1, i2});
                Form e2;
                if (!c.paired(k)) {
                    e2 = T2(i1, k);
                } else {
                    e2 = forms::w_over_x("", {{i1, 1}, {i2, 1}, {k, 1}});
                    e2.mul(YL(c.tau_of(k)));
                }
                brody.push_back({"Fc:unpaired-iid", {T2(i1, i2), e2}});
            }
    }
}

inline Form l_form(std::initializer_list<std::pair<int, int>> lines, std::initializer_list<std::pair<int, int>> den) {
    Form f = forms::w_over_x("", den);
    for (auto [i, j] : lines) f.mul(Lin(i, j));
    return f;
}

inline void prop_candidates(const Configuration& c, std::vector<Candidate>& alg, std::vector<Candidate>& brody) {
    int l = c.l();
    if (l < 2 || c.n() < 4) return;
    int m1 = c.mult(0), m2 = c.mult(1);
    bool p1 = c.paired(0), p2 = c.paired(1);

    if (m2 >= 2) {
        // (ia) and (iia); unpaired leading indices fall under the unpaired-index cases
        Form w1 = l_form({}, {{0, m1}, {1, m2}});
        if (p1 && p2) {
            w1.mul(Lin(0, 1), m1 + m2 - 2);
            alg.push_back({"Fc:prop-ia", {w1}});
        }
        bool excluded = (l == 2 && m1 == 2 && m2 == 2);
        if (!excluded && p1 && p2) {
            if (m2 >= 3) {
                Form w2 = l_form({}, {{0, m1 - 1}, {1, m2}});
                w2.mul(Lin(0, 1), m1 + m2 - 3);
                brody.push_back({"Fc:prop-iia", {w1, w2}});
            } else if (m1 >= 5) {
                pairing_gap_candidates(c, 0, "Fc:prop-iia", false, true, alg, brody);
            } else if (m1 >= 3) {
                Form w2 = l_form({}, {{0, m1}, {1, 1}});
                w2.mul(Lin(0, 1), m1 - 1);
                brody.push_back({"Fc:prop-iia", {w1, w2}});
            } else if (l >= 3) {
                // m1 = m2 = 2
                if (c.paired(2)) {
                    Form w2 = l_form({{0, 1}, {1, 2}, {0, 2}}, {{0, 2}, {1, 2}, {2, 1}});
                    brody.push_back({"Fc:prop-iia", {w1, w2}});
                } else {
                    Form w2 = l_form({{0, 1}, {0, 1}}, {{0, 2}, {1, 1}, {2, 1}});
                    brody.push_back({"Fc:prop-iia", {w1, w2}});
                }
            }
        }
        return;
    }

    // m2 = 1, so m_i = 1 for i >= 2
    if (l < 3) return;
    bool three_ones = (l == 3 && m1 == 1);
    if (m1 >= 2) {
        if (!p1) {
            // m1 >= 3 and the (2, 1) pattern are covered by the unpaired-index cases
            alg.push_back({"Fc:prop-ib", {T1(0)}});
            for (int a = 1; a < l; ++a) {
                if (!c.paired(a) || c.tau_of(a) == 0) continue;
                Form w2 = forms::w_over_x("", {{0, 2}, {a, 1}});
                w2.mul(YL(c.tau_of(a)));
                brody.push_back({"Fc:prop-iib", {T1(0), w2}});
            }
            return;
        }
        if (m1 >= 4) pairing_gap_candidates(c, 0, "Fc:prop-iib", false, true, alg, brody);
        std::vector<int> free_idx;
        for (int i = 1; i < l; ++i)
            if (!c.paired(i)) free_idx.push_back(i);
        for (int i0 : free_idx) {
            Form w1 = forms::w_over_x("", {{0, 1}, {i0, 1}});
            Form w2 = forms::w_over_x("", {{0, 2}, {i0, 1}});
            w2.mul(YL(c.tau_of(0)));
            alg.push_back({"Fc:prop-ib", {w1}});
            if (m1 <= 3) brody.push_back({"Fc:prop-iib", {w1, w2}});
        }
        for (int a = 1; a < l; ++a) {
            if (!c.paired(a) || c.tau_of(a) == 0) continue;
            Form w1 = l_form({{0, a}}, {{0, 2}, {a, 1}});
            alg.push_back({"Fc:prop-ib", {w1}});
            if (!free_idx.empty() || m1 > 3) continue;
            for (int b = 1; b < l; ++b) {
                if (b == a || !c.paired(b)) continue;
                Form w2 = l_form({{0, b}, {a, b}}, {{0, 2}, {a, 1}, {b, 1}});
                brody.push_back({"Fc:prop-iib", {w1, w2}});
            }
        }
        return;
    }

    // all multiplicities one
    std::vector<int> paired_idx, free_idx;
    for (int i = 0; i < l; ++i) (c.paired(i) ? paired_idx : free_idx).push_back(i);
    if (free_idx.size() == 1) {
        int i0 = free_idx[0];
        for (std::size_t x = 0; x < paired_idx.size(); ++x)
            for (std::size_t y = x + 1; y < paired_idx.size(); ++y) {
                int a = paired_idx[x], b = paired_idx[y];
                Form w1 = l_form({{a, b}}, {{a, 1}, {b, 1}, {i0, 1}});
                alg.push_back({"Fc:prop-ib", {w1}});
                if (three_ones) continue;
                for (std::size_t z = 0; z < paired_idx.size(); ++z) {
                    int cc = paired_idx[z];
                    if (cc == a || cc == b) continue;
                    Form w2 = l_form({{a, cc}}, {{a, 1}, {cc, 1}, {i0, 1}});
                    brody.push_back({"Fc:prop-iib", {w1, w2}});
                }
            }
    }
    if (free_idx.empty() && l >= 4) {
        Form w1 = l_form({{0, 1}, {2, 3}}, {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
        Form w2 = l_form({{0, 2}, {1, 3}}, {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
        alg.push_back({"Fc:prop-ib", {w1}});
        brody.push_back({"Fc:prop-iib", {w1, w2}});
    }
}

inline void kind_fc_candidates(const Configuration& c, std::vector<Candidate>& alg, std::vector<Candidate>& brody) {
    unpaired_candidates(c, alg, brody);
    if (all_paired(c))
        for (int i = 0; i < c.l(); ++i) pairing_gap_candidates(c, i, "Fc:all-paired-gap", true, true, alg, brody);
    prop_candidates(c, alg, brody);
}

}  // namespace detail

inline HyperbolicityVerdict hyperbolicity_verdict(const Configuration& c) {
    HyperbolicityVerdict v;
    v.config = c;
    v.ledger = build_ledger(c);
    std::vector<Candidate> alg, brody;
    if (c.kind == CurveKind::F)
        detail::kind_f_candidates(c, alg, brody);
    else
        detail::kind_fc_candidates(c, alg, brody);

    for (auto& r : v.ledger.relations) v.trace.push_back("ledger " + r);

    auto run = [&](const Candidate& cand, bool have_regular) {
        CaseAttempt at{cand.case_label, false, {}, std::nullopt};
        bool ok = true;
        for (auto& f : cand.forms) {
            at.forms.push_back(check_form(c, v.ledger, f));
            ok = ok && at.forms.back().regular;
        }
        if (ok && cand.forms.size() == 2) {
            at.independence = independence(cand.forms[0], cand.forms[1], have_regular || ok);
            ok = at.independence->independent;
        }
        at.success = ok;
        return at;
    };

    bool algebraic = false;
    for (auto& cand : alg) {
        auto at = run(cand, false);
        v.attempts.push_back(at);
        if (at.success) {
            algebraic = true;
            v.trace.push_back(cand.case_label + ": " + cand.forms[0].text() + " is regular");
            break;
        }
    }
    bool is_brody = false;
    for (auto& cand : brody) {
        auto at = run(cand, algebraic);
        v.attempts.push_back(at);
        if (at.success) {
            is_brody = true;
            v.trace.push_back(cand.case_label + ": " + cand.forms[0].text() + " and " + cand.forms[1].text() +
                              " are regular and independent (" + at.independence->argument + ")");
            for (auto& s : at.independence->assumptions) v.assumptions.insert(s);
            break;
        }
    }
    if (is_brody || algebraic) {
        if (c.kind == CurveKind::Fc) v.assumptions.insert(kNoLinear);
    }
    v.level = is_brody ? Hyperbolicity::Brody : algebraic ? Hyperbolicity::Algebraic : Hyperbolicity::None;
    if (is_brody && !algebraic) {
        v.trace.push_back("a Brody certificate contains a regular form, so the curve is also algebraically hyperbolic");
    }
    if (v.level == Hyperbolicity::None) {
        v.reason = alg.empty() ? "configuration is outside every case table" : "no candidate form is regular";
        if (c.kind == CurveKind::Fc && c.l() == 3 && c.m == std::vector<int>{1, 1, 1} && detail::all_paired(c))
            v.reason = "three simple critical points permuted cyclically by the pairing";
    } else if (!is_brody) {
        v.reason = brody.empty() ? "no Brody case applies" : "no Brody candidate pair is certified";
    }
    return v;
}

// ---- configuration enumeration ----

namespace detail {

inline void partitions(int total, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(total, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions(total - p, p, cur, out);
        cur.pop_back();
    }
}

// component: cycle flag, label sequence (cycles rotated to their minimum)
using Component = std::pair<bool, std::vector<int>>;

inline bool component_less(const Component& a, const Component& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second < b.second;
}

inline bool canonical_cycle(const std::vector<int>& s) {
    for (std::size_t r = 1; r < s.size(); ++r) {
        std::vector<int> rot(s.begin() + static_cast<long>(r), s.end());
        rot.insert(rot.end(), s.begin(), s.begin() + static_cast<long>(r));
        if (rot < s) return false;
    }
    return true;
}

inline void sequences(std::map<int, int>& left, std::size_t len, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (auto& [v, cnt] : left) {
        if (!cnt) continue;
        --cnt;
        cur.push_back(v);
        sequences(left, len, cur, out);
        cur.pop_back();
        ++cnt;
    }
}

inline void component_sets(std::map<int, int>& left, int remaining, const std::optional<Component>& floor,
                           std::vector<Component>& cur, std::vector<std::vector<Component>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int cyc = 0; cyc <= 1; ++cyc) {
        for (int len = cyc ? 2 : 1; len <= remaining; ++len) {
            std::vector<std::vector<int>> seqs;
            std::vector<int> tmp;
            sequences(left, static_cast<std::size_t>(len), tmp, seqs);
            for (auto& s : seqs) {
                if (cyc && !canonical_cycle(s)) continue;
                Component comp{cyc == 1, s};
                if (floor && component_less(comp, *floor)) continue;
                for (int v : s) --left[v];
                cur.push_back(comp);
                component_sets(left, remaining - len, comp, cur, out);
                cur.pop_back();
                for (int v : s) ++left[v];
            }
        }
    }
}

inline Configuration to_configuration(const std::vector<Component>& comps) {
    struct Node {
        int m;
        int comp;
        int pos;
    };
    std::vector<Node> nodes;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
        for (int p = 0; p < static_cast<int>(comps[static_cast<std::size_t>(ci)].second.size()); ++p)
            nodes.push_back({comps[static_cast<std::size_t>(ci)].second[static_cast<std::size_t>(p)], ci, p});
    std::vector<int> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return nodes[static_cast<std::size_t>(a)].m > nodes[static_cast<std::size_t>(b)].m;
    });
    std::map<std::pair<int, int>, int> where;
    Configuration c;
    c.kind = CurveKind::Fc;
    for (std::size_t k = 0; k < order.size(); ++k) {
        auto& nd = nodes[static_cast<std::size_t>(order[k])];
        where[{nd.comp, nd.pos}] = static_cast<int>(k);
        c.m.push_back(nd.m);
    }
    c.tau.assign(nodes.size(), std::nullopt);
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        auto& [cyc, seq] = comps[static_cast<std::size_t>(ci)];
        int len = static_cast<int>(seq.size());
        for (int p = 0; p < len; ++p) {
            int nxt = p + 1;
            if (nxt == len) {
                if (!cyc) continue;
                nxt = 0;
            }
            c.tau[static_cast<std::size_t>(where[{ci, p}])] = where[{ci, nxt}];
        }
    }
    return c;
}

}  // namespace detail

// Every configuration with 3 <= n <= max_n up to relabelling.
inline std::vector<Configuration> enumerate_configurations(CurveKind kind, int max_n, int min_n = 3) {
    std::vector<Configuration> out;
    for (int n = min_n; n <= max_n; ++n) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        detail::partitions(n - 1, n - 1, cur, parts);
        for (auto& m : parts) {
            if (kind == CurveKind::F) {
                out.push_back(Configuration{CurveKind::F, m, {}});
                continue;
            }
            std::map<int, int> left;
            for (int v : m) ++left[v];
            std::vector<std::vector<detail::Component>> sets;
            std::vector<detail::Component> cc;
            detail::component_sets(left, static_cast<int>(m.size()), std::nullopt, cc, sets);
            for (auto& s : sets) out.push_back(detail::to_configuration(s));
        }
    }
    return out;
}

// Configurations l = 3, m = (m1,1,1) and l = 2, m = (m1,2) on C: the two
// forms share every pole, and whether (b+1)X - Y can be a component depends
// on P itself. With a1 = 0, P = P(0) + b0 X^(m1+1) + b1 X^(m1+2) + X^(m1+3),
// and P(bX) = P(X) needs b^i = 1 for every exponent in the support.
struct CoefficientCheck {
    bool applicable = false;
    std::string reason;
    int m1 = 0;
    Rational alpha1;
    Rational b0, b1;
    bool shape_ok = false;
    int support_gcd = 0;
    bool independent = false;
};

inline CoefficientCheck coefficient_check(const RationalPoly& P) {
    CoefficientCheck r;
    auto cs = critical_structure(P);
    const auto& m = cs.multiplicities;
    int l = cs.l();
    r.applicable = (l == 3 && m[0] >= 2 && m[1] == 1 && m[2] == 1) || (l == 2 && m[0] >= 3 && m[1] == 2);
    if (!r.applicable) {
        r.reason = "needs l = 3, m = (m1,1,1) with m1 >= 2, or l = 2, m = (m1,2) with m1 >= 3";
        return r;
    }
    if (!cs.separated) {
        r.applicable = false;
        r.reason = "critical values are not separated";
        return r;
    }
    r.m1 = m[0];
    for (auto& f : cs.factors)
        if (f.multiplicity == r.m1) r.alpha1 = -f.factor.coeff(0) / f.factor.coeff(1);
    RationalPoly q = taylor_shift(monic(P), r.alpha1);
    int n = q.degree();
    r.shape_ok = n == r.m1 + 3;
    for (int i = 1; i < n && r.shape_ok; ++i)
        if (i != r.m1 + 1 && i != r.m1 + 2 && sgn(q.coeff(i)) != 0) r.shape_ok = false;
    r.b0 = q.coeff(r.m1 + 1);
    r.b1 = q.coeff(r.m1 + 2);
    r.shape_ok = r.shape_ok && sgn(r.b0) != 0;
    if (!r.shape_ok) {
        r.reason = "P does not recenter to P(0) + b0 X^(m1+1) + b1 X^(m1+2) + X^(m1+3)";
        return r;
    }
    std::vector<int> support;
    for (int i = 1; i <= n; ++i)
        if (sgn(q.coeff(i)) != 0) support.push_back(i);
    r.support_gcd = gcd_of(support);
    r.independent = r.support_gcd == 1;
    r.reason = r.independent ? "b = 0 is the only solution, so the two forms are independent"
                             : "P(zeta X) = P(X) for zeta of order " + std::to_string(r.support_gcd);
    return r;
}

}  // namespace uniq::oc
