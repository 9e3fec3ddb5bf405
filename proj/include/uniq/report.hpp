#pragma once

#include "classifier.hpp"
#include "order_calculus.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>

#ifndef UNIQ_VERSION
#define UNIQ_VERSION "0.0.0"
#endif

namespace uniq::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

inline Json header(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = {{"name", "uniqpoly"}, {"version", UNIQ_VERSION}};
    j["command"] = command;
    return j;
}

inline Json q(const Rational& r) { return to_pq(r); }

inline Json poly(const RationalPoly& p) {
    Json coeffs = Json::object();
    for (int i = p.degree(); i >= 0; --i)
        if (sgn(p.coeff(i)) != 0) coeffs[std::to_string(i)] = to_pq(p.coeff(i));
    return {{"text", to_string(p)}, {"degree", p.degree()}, {"coefficients", coeffs}};
}

inline Json input(const std::string& source, const RationalPoly& p) {
    return {{"source", source}, {"canonical", to_string(p)}, {"degree", p.degree()}};
}

inline Json ints(const std::vector<int>& v) { return Json(v); }

inline Json witness(const Witness& w) {
    Json j;
    j["kind"] = w.kind();
    if (w.order == 0) {
        j["beta"] = q(w.beta);
        j["root_of_unity_order"] = nullptr;
    } else {
        j["beta"] = w.beta_text();
        j["root_of_unity_order"] = w.order;
    }
    j["center"] = q(w.center);
    j["gamma"] = w.order == 0 ? Json(q(w.center - w.beta * w.center)) : Json("(1 - beta)*center");
    j["c"] = w.c_text();
    j["c_exponent"] = w.c_exponent;
    j["identity"] = w.identity();
    j["verified"] = w.verified;
    return j;
}

inline Json census(const std::vector<SingularPoint>& pts) {
    Json a = Json::array();
    for (auto& s : pts) a.push_back({{"label", s.label}, {"multiplicity", s.multiplicity}, {"ordinary", s.ordinary}});
    return a;
}

inline Json irreducibility(const IrreducibilityCertificate& c) {
    Json j{{"certified", c.certified}, {"reason", c.reason}};
    if (!c.surviving_split.empty()) j["surviving_split"] = ints(c.surviving_split);
    return j;
}

inline Json exception(const ExceptionCertificate& e) {
    return {{"id", e.id},
            {"curve", kind_name(e.kind)},
            {"degree", e.degree},
            {"census", census(e.census)},
            {"irreducibility", irreducibility(e.irreducibility)},
            {"genus", e.genus >= 0 ? Json(e.genus) : Json(nullptr)},
            {"refutes", e.rational_refuted ? "rational and meromorphic" : "meromorphic"},
            {"assumptions", e.assumptions}};
}

inline Json index_block(const IndexData& d) {
    return {{"I", ints(d.I)},
            {"J", ints(d.J)},
            {"l_min", d.l_min},
            {"m", d.m},
            {"gap", d.n - std::max(d.m, 0)},
            {"gcd_I", d.gcd_I},
            {"gcd_J", d.gcd_J},
            {"bezout_I", Json(d.bezout_I)},
            {"bezout_J", Json(d.bezout_J)}};
}

inline Json critical_block(const CriticalStructure& cs) {
    return {{"l", cs.l()},
            {"multiplicities", ints(cs.multiplicities)},
            {"critical_value_polynomial", to_string(cs.critical_value_poly, "T")},
            {"separated", cs.separated}};
}

inline Json verdict(const Verdict& v) {
    Json j;
    for (auto p : kProperties)
        j[property_name(p)] = {{"answer", answer_name(v[p])}, {"basis", v.decisions[p].basis}};
    return j;
}

inline Json audit(const AuditReport& a) {
    Json items = Json::array();
    for (auto& it : a.items) items.push_back({{"check", it.check}, {"ok", it.ok}, {"detail", it.detail}});
    return {{"passed", a.passed}, {"items", items}};
}

inline std::string status_of(const Verdict& v, const AuditReport& a) {
    if (!a.passed) return "audit_failure";
    return v.any_out_of_scope() ? "out_of_scope" : "ok";
}

inline Json classify(const std::string& source, const Verdict& v, const AuditReport& a) {
    Json j = header("classify");
    j["input"] = input(source, v.input);
    j["status"] = status_of(v, a);
    j["verdict"] = verdict(v);
    Json trace = Json::array();
    for (auto& t : v.trace) trace.push_back({{"rule", t.rule}, {"inputs", t.inputs}, {"conclusion", t.conclusion}});
    j["rule_trace"] = trace;
    Json ws = Json::array();
    for (auto& w : v.witnesses) ws.push_back(witness(w));
    j["witnesses"] = ws;

    Json cert;
    if (v.normalized)
        cert["normalized"] = {{"p0", to_string(v.normalized->p0)},
                              {"shift", q(v.normalized->shift)},
                              {"condition_A", v.normalized->condition_A},
                              {"condition_B", v.normalized->condition_B}};
    else
        cert["normalized"] = nullptr;
    cert["index"] = v.index ? index_block(*v.index) : Json(nullptr);
    cert["critical"] = critical_block(v.critical);
    cert["symmetry"] = {{"rigid", !v.symmetry.exists},
                        {"order", v.symmetry.order},
                        {"centroid", q(v.symmetry.centroid)},
                        {"degenerate", v.symmetry.degenerate}};
    cert["flags"] = {{"quartic_structural", v.flags.quartic_structural},
                     {"quartic_w_case", v.flags.quartic_w_case},
                     {"quintic_case", v.flags.quintic_case},
                     {"degree_two_case", v.flags.degree_two_case}};
    Json ex = Json::array();
    for (auto& e : v.exceptions) ex.push_back(exception(e));
    cert["exceptions"] = ex;
    j["certificates"] = cert;
    j["assumptions"] = v.assumptions;
    j["conflicts"] = v.conflicts;
    j["audit"] = audit(a);
    return j;
}

inline Json curve(const std::string& source, const RationalPoly& p, std::optional<Rational> c) {
    Json j = header("curve");
    j["input"] = input(source, p);
    CurveData cd = c ? build_Fc(p, *c) : build_F(p);
    auto ids = verify_partial_identities(cd);
    j["status"] = ids.ok ? "ok" : "audit_failure";
    j["curve"] = {{"kind", kind_name(cd.kind)},
                  {"c", c ? Json(q(*c)) : Json(nullptr)},
                  {"degree", cd.degree()},
                  {"defining", cd.F.poly().to_string()},
                  {"partials",
                   {{"X", cd.FX.poly().to_string()}, {"Y", cd.FY.poly().to_string()}, {"Z", cd.FZ.poly().to_string()}}}};
    Json checks = Json::array();
    for (auto& ch : ids.checks) checks.push_back({{"name", ch.name}, {"ok", ch.ok}});
    j["identities"] = {{"ok", ids.ok}, {"checks", checks}};

    auto cen = concrete_census(p, c);
    Json g;
    g["census_available"] = cen.available;
    g["multiplicities"] = ints(cen.multiplicities);
    if (!cen.available) {
        g["reason"] = cen.reason;
        j["geometry"] = g;
        return j;
    }
    g["census"] = census(cen.points);
    bool ordinary = true;
    for (auto& s : cen.points) ordinary = ordinary && s.ordinary;
    auto sym = affine_symmetry(p);
    bool no_linear = !sym.exists;
    g["no_linear_factors"] = no_linear;
    if (!ordinary) {
        g["irreducibility"] = nullptr;
        g["genus"] = nullptr;
        g["genus_reason"] = "a multiple point is not ordinary";
    } else {
        // every multiple point comes from a pair of critical points, none at infinity
        auto irr = bezout_irreducibility(cd.degree(), cen.points, no_linear, BezoutMode::CompleteCensus);
        g["irreducibility"] = irreducibility(irr);
        if (irr.certified) {
            g["genus"] = genus_ordinary(cd.degree(), cen.points, true);
        } else {
            g["genus"] = nullptr;
            g["genus_reason"] = "irreducibility not certified";
        }
    }
    Json assumptions = Json::array();
    assumptions.push_back("census lists every multiple point");
    if (no_linear) assumptions.push_back("rigid zero set, so no linear component");
    g["assumptions"] = assumptions;
    j["geometry"] = g;
    return j;
}

inline Json form_verdict(const oc::FormVerdict& f) {
    Json bounds = Json::array();
    for (auto& b : f.bounds)
        bounds.push_back({{"point", b.label}, {"a", b.a}, {"b", b.b}, {"nonnegative", b.nonnegative}});
    return {{"form", f.form.text()}, {"regular", f.regular ? "yes" : "unknown"}, {"bounds", bounds},
            {"reason", f.reason}};
}

inline Json forms(const std::string& source, const oc::HyperbolicityVerdict& hv,
                  const std::optional<oc::CoefficientCheck>& cc) {
    Json j = header("forms");
    j["input"] = {{"source", source}, {"configuration", hv.config.text()}, {"n", hv.config.n()}};
    j["status"] = "ok";
    j["hyperbolicity"] = oc::hyperbolicity_name(hv.level);
    j["reason"] = hv.reason;
    j["ledger"] = hv.ledger.relations;
    Json attempts = Json::array();
    for (auto& a : hv.attempts) {
        Json fs = Json::array();
        for (auto& f : a.forms) fs.push_back(form_verdict(f));
        Json at{{"case", a.case_label}, {"success", a.success}, {"forms", fs}};
        if (a.independence)
            at["independence"] = {{"independent", a.independence->independent},
                                  {"argument", a.independence->argument},
                                  {"assumptions", a.independence->assumptions}};
        attempts.push_back(at);
    }
    j["attempts"] = attempts;
    j["trace"] = hv.trace;
    j["assumptions"] = Json(std::vector<std::string>(hv.assumptions.begin(), hv.assumptions.end()));
    if (cc) {
        j["coefficient_check"] = {{"applicable", cc->applicable}, {"reason", cc->reason},
                                  {"m1", cc->m1},             {"alpha1", q(cc->alpha1)},
                                  {"b0", q(cc->b0)},          {"b1", q(cc->b1)},
                                  {"shape_ok", cc->shape_ok}, {"support_gcd", cc->support_gcd},
                                  {"independent", cc->independent}};
    }
    return j;
}

inline Json witness_search(const std::string& source, const RationalPoly& p, SearchMode mode,
                           const std::optional<Witness>& w) {
    Json j = header("witness");
    j["input"] = input(source, p);
    j["status"] = !w || w->verified ? "ok" : "audit_failure";
    j["mode"] = search_mode_name(mode);
    j["found"] = w.has_value();
    j["witness"] = w ? witness(*w) : Json(nullptr);
    return j;
}

inline Json corollary(const Rational& alpha, int n, int m, const Rational& a, const Rational& b,
                      const std::array<bool, 4>& row, const std::optional<Verdict>& v) {
    Json j = header("corollary");
    j["input"] = {{"alpha", q(alpha)}, {"n", n}, {"m", m}, {"a", q(a)}, {"b", q(b)}};
    Json r;
    for (auto p : kProperties) r[property_name(p)] = row[p] ? "yes" : "no";
    j["row"] = r;
    bool agree = true;
    if (v) {
        for (auto p : kProperties) agree = agree && (v->operator[](p) == (row[p] ? Answer::Yes : Answer::No));
        j["classify"] = verdict(*v);
        j["agrees"] = agree;
    }
    j["status"] = agree ? "ok" : "audit_failure";
    return j;
}

inline Json error(const std::string& command, const std::string& kind, const std::string& message,
                  std::optional<std::size_t> offset = std::nullopt, const std::vector<std::string>& expected = {},
                  const std::optional<std::string>& source = std::nullopt) {
    Json j = header(command);
    if (source) j["input"] = {{"source", *source}};
    j["status"] = "error";
    Json e{{"kind", kind}, {"message", message}};
    if (offset) e["offset"] = *offset;
    if (!expected.empty()) e["expected"] = expected;
    j["error"] = e;
    return j;
}

// Text rendering: the same tree, one "key: value" per line.
inline void render(std::ostringstream& os, const Json& j, const std::string& indent) {
    auto scalar = [](const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_null()) return std::string("-");
        return v.dump();
    };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            bool leaf = !v.is_structured() || v.empty() ||
                        (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured(); }) &&
                         v.size() <= 12);
            if (leaf) {
                std::string s;
                if (v.is_array()) {
                    for (auto& x : v) s += (s.empty() ? "" : ", ") + scalar(x);
                    s = "[" + s + "]";
                } else if (v.is_object()) {
                    s = "{}";
                } else {
                    s = scalar(v);
                }
                os << indent << it.key() << ": " << s << "\n";
            } else {
                os << indent << it.key() << ":\n";
                render(os, v, indent + "  ");
            }
        }
    } else if (j.is_array()) {
        for (auto& v : j) {
            if (v.is_structured()) {
                os << indent << "-\n";
                render(os, v, indent + "  ");
            } else {
                os << indent << "- " << scalar(v) << "\n";
            }
        }
    }
}

inline std::string to_text(const Json& j) {
    std::ostringstream os;
    render(os, j, "");
    return os.str();
}

}  // namespace uniq::report
