#include <uniq/config_text.hpp>
#include <uniq/parser.hpp>
#include <uniq/report.hpp>

#include "acceptance/acceptance.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

using namespace uniq;
using report::Json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kOutOfScope = 3, kAudit = 4 };

struct Options {
    std::string c_text;
    bool text = false;
    bool json = false;
    std::string batch;
    int degree_cap = kDefaultDegreeCap;
    std::uint64_t seed = 20240611;
    bool timing = false;
    std::string mode = "any";
    std::string alpha = "0", a, b;
    int n = 0, m = 0;
};

struct Outcome {
    Json report;
    int code = kOk;
};

int code_of(const Json& r) {
    auto s = r.value("status", std::string("ok"));
    if (s == "out_of_scope") return kOutOfScope;
    if (s == "audit_failure") return kAudit;
    return kOk;
}

Rational rational_arg(const std::string& text, const std::string& what) {
    RationalPoly p = parse_poly(text, 0);
    if (p.degree() > 0) throw ParseError(0, what + " must be a rational constant", {"rational"});
    return p.coeff(0);
}

Outcome guarded(const std::string& command, const std::optional<std::string>& source,
                const std::function<Json()>& body) {
    try {
        Json r = body();
        return {r, code_of(r)};
    } catch (const ParseError& e) {
        return {report::error(command, "parse_error", e.what(), e.offset, e.expected, source), kParse};
    } catch (const DegreeCapExceeded& e) {
        return {report::error(command, "degree_cap_exceeded", e.what(), std::nullopt, {}, source), kParse};
    } catch (const OutOfDomain& e) {
        return {report::error(command, "out_of_domain", e.what(), std::nullopt, {}, source), kUsage};
    } catch (const std::invalid_argument& e) {
        return {report::error(command, "invalid_argument", e.what(), std::nullopt, {}, source), kUsage};
    } catch (const std::exception& e) {
        return {report::error(command, "internal", e.what(), std::nullopt, {}, source), kAudit};
    }
}

Outcome run_one(const std::string& command, const std::string& text, const Options& o) {
    return guarded(command, text, [&]() -> Json {
        if (command == "classify") {
            RationalPoly p = parse_poly(text, o.degree_cap);
            Verdict v = classify(p, {o.degree_cap});
            return report::classify(text, v, consistency_audit(p, v));
        }
        if (command == "curve") {
            RationalPoly p = parse_poly(text, o.degree_cap);
            if (p.degree() < 2) throw OutOfDomain("curve needs degree >= 2");
            std::optional<Rational> c;
            if (!o.c_text.empty()) {
                c = rational_arg(o.c_text, "--c");
                if (sgn(*c) == 0 || *c == 1) throw std::invalid_argument("--c must avoid 0 and 1");
            }
            return report::curve(text, p, c);
        }
        if (command == "forms") {
            bool is_config = text.find(':') != std::string::npos;
            if (is_config) return report::forms(text, oc::hyperbolicity_verdict(parse_configuration(text)), std::nullopt);
            RationalPoly p = parse_poly(text, o.degree_cap);
            if (p.degree() < 3) throw OutOfDomain("forms needs degree >= 3");
            return report::forms(text, oc::hyperbolicity_verdict(configuration_of(p)), oc::coefficient_check(p));
        }
        if (command == "witness") {
            RationalPoly p = parse_poly(text, o.degree_cap);
            if (p.degree() < 2) throw OutOfDomain("witness search needs degree >= 2");
            SearchMode mode = o.mode == "c1" ? SearchMode::CEquals1 : SearchMode::AnyC;
            auto w = witness_search(p, mode);
            if (w) w->verified = replay_witness(p, *w);
            return report::witness_search(text, p, mode, w);
        }
        throw std::invalid_argument("unknown command " + command);
    });
}

Outcome run_corollary(const Options& o) {
    return guarded("corollary", std::nullopt, [&]() -> Json {
        Rational alpha = rational_arg(o.alpha, "--alpha");
        Rational a = rational_arg(o.a, "--a"), b = rational_arg(o.b, "--b");
        if (o.n < 2 || o.n > o.degree_cap) throw std::invalid_argument("--n out of range");
        auto row = corollary_classify(alpha, o.n, o.m, a, b);
        RationalPoly s = RationalPoly::x() - RationalPoly(alpha);
        RationalPoly p = pow(s, static_cast<unsigned>(o.n)) + RationalPoly(a) * pow(s, static_cast<unsigned>(o.m)) +
                         RationalPoly(b);
        return report::corollary(alpha, o.n, o.m, a, b, row, classify(p, {o.degree_cap}));
    });
}

Outcome run_selftest(const Options& o) {
    Json r = report::header("selftest");
    Json lines = Json::array();
    bool all = true;
    for (auto& line : acceptance::run_all(o.seed)) {
        Json j{{"criterion", line.id}, {"name", line.name}, {"pass", line.pass}, {"detail", line.detail}};
        if (o.timing) j["seconds"] = line.seconds;
        lines.push_back(j);
        all = all && line.pass;
    }
    r["seed"] = o.seed;
    r["status"] = all ? "ok" : "audit_failure";
    r["criteria"] = lines;
    return {r, all ? kOk : kAudit};
}

void emit(const Json& r, const Options& o, bool compact) {
    if (o.text)
        std::cout << report::to_text(r);
    else
        std::cout << (compact ? r.dump() : r.dump(2)) << "\n";
}

std::vector<std::string> batch_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open batch file " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

int run_batch(const std::string& command, const Options& o) {
    std::vector<std::string> inputs;
    try {
        inputs = batch_lines(o.batch);
    } catch (const std::exception& e) {
        emit(report::error(command, "usage", e.what()), o, true);
        return kUsage;
    }
    std::vector<Outcome> out(inputs.size());
    std::atomic<std::size_t> next{0};
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < inputs.size();) out[i] = run_one(command, inputs[i], o);
        });
    for (auto& t : pool) t.join();
    int code = kOk;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (o.text && i) std::cout << "\n";
        emit(out[i].report, o, true);
        code = std::max(code, out[i].code);
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uniqueness polynomial classifier"};
    app.set_version_flag("--version", std::string(UNIQ_VERSION));
    app.set_config("--config", "", "Read options from a TOML/INI file");
    app.require_subcommand(1);

    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--c", o.c_text, "Rational c for F_c (curve)");
        auto* t = sub->add_flag("--text", o.text, "Plain text output");
        sub->add_flag("--json", o.json, "JSON output (default)")->excludes(t);
        sub->add_option("--degree-cap", o.degree_cap, "Maximum accepted degree")->check(CLI::Range(2, 4096));
        sub->add_option("--seed", o.seed, "Seed for randomized checks");
        sub->add_flag("--timing", o.timing, "Include wall-clock timings");
    };

    std::string input;
    std::map<std::string, CLI::App*> subs;
    for (auto [name, help] : {std::pair{"classify", "Classify a polynomial"},
                              std::pair{"curve", "Build F or F_c and certify its geometry"},
                              std::pair{"forms", "Regular form certificates for a configuration or polynomial"},
                              std::pair{"witness", "Search for an affine witness"}}) {
        auto* s = app.add_subcommand(name, help);
        common(s);
        s->add_option("input", input, "Polynomial in X (or a configuration like Fc:2,1,1:2,-,- for forms)");
        s->add_option("--batch", o.batch, "File with one input per line");
        subs[name] = s;
    }
    subs["witness"]->add_option("--mode", o.mode, "any (any c) or c1 (c = 1)")->check(CLI::IsMember({"any", "c1"}));

    auto* cor = app.add_subcommand("corollary", "Table row for (X-alpha)^n + a (X-alpha)^m + b");
    common(cor);
    cor->add_option("--alpha", o.alpha, "Center");
    cor->add_option("--n", o.n, "Degree")->required();
    cor->add_option("--m", o.m, "Middle exponent")->required();
    cor->add_option("--a", o.a, "Middle coefficient")->required();
    cor->add_option("--b", o.b, "Constant term")->required();

    auto* self = app.add_subcommand("selftest", "Run the acceptance suites");
    common(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    std::string command = app.get_subcommands().front()->get_name();
    if (command == "selftest") {
        out = run_selftest(o);
    } else if (command == "corollary") {
        out = run_corollary(o);
    } else if (!o.batch.empty()) {
        if (!input.empty()) {
            std::cerr << "give either an input or --batch, not both\n";
            return kUsage;
        }
        return run_batch(command, o);
    } else {
        if (input.empty()) {
            std::cerr << command << ": missing input\n" << subs[command]->help();
            return kUsage;
        }
        out = run_one(command, input, o);
    }
    if (o.timing)
        out.report["timing"] = {
            {"wall_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()}};
    emit(out.report, o, false);
    return out.code;
}
