#include "bsf/cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bsf/aim.hpp"
#include "bsf/catalog.hpp"
#include "bsf/error.hpp"
#include "bsf/formula.hpp"
#include "bsf/shooting.hpp"

namespace bsf {

namespace {

using json = nlohmann::ordered_json;

/// Raised for anything the user must fix in the invocation.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    double root = 1e-12;
    double aim = 1e-7;
    double shooting = 1e-6;
    double aim_drift = 1e-9;
};

struct RunConfig {
    std::string model;
    std::vector<std::string> param_args;
    std::vector<std::string> tol_args;
    ParameterSet overrides;
    std::string n_spec = "0";
    std::string l_spec = "0";
    std::optional<int> m;
    std::optional<double> j;
    std::vector<std::string> engines{"formula"};
    std::string format = "json";
    std::string out;
    std::string fixture;
    int samples = 200;
    Tolerances tol;
    std::vector<int> ns;
    std::vector<double> ls;
};

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

json num(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

std::pair<std::string, double> name_value(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("expected NAME=VALUE, got '" + arg + "'");
    const std::string name = arg.substr(0, eq), text = arg.substr(eq + 1);
    double v;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ConfigError("value of " + name + " is not a number: '" + text + "'");
    return {name, v};
}

double parse_number(const std::string& text) {
    double v;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ConfigError("not a number: '" + text + "'");
    return v;
}

/// "2", "0..3" or comma-separated mixtures of both.
std::vector<double> parse_list(const std::string& spec) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_number(item));
            continue;
        }
        const double a = parse_number(item.substr(0, dots)), b = parse_number(item.substr(dots + 2));
        if (a != std::round(a) || b != std::round(b) || b < a) throw ConfigError("bad range '" + item + "'");
        for (double v = a; v <= b; v += 1) out.push_back(v);
    }
    if (out.empty()) throw ConfigError("empty list '" + spec + "'");
    return out;
}

void finish_config(RunConfig& cfg) {
    for (const auto& a : cfg.param_args) {
        const auto [k, v] = name_value(a);
        cfg.overrides[k] = v;
    }
    for (const auto& a : cfg.tol_args) {
        const auto [k, v] = name_value(a);
        if (!(v > 0)) throw ConfigError("tolerance " + k + " must be positive");
        if (k == "root")
            cfg.tol.root = v;
        else if (k == "aim")
            cfg.tol.aim = v;
        else if (k == "shooting")
            cfg.tol.shooting = v;
        else if (k == "aim_drift")
            cfg.tol.aim_drift = v;
        else
            throw ConfigError("unknown tolerance '" + k + "' (root, aim, shooting, aim_drift)");
    }
    cfg.ns.clear();
    for (double v : parse_list(cfg.n_spec)) {
        if (v != std::round(v) || v < 0) throw ConfigError("n must be a non-negative integer");
        cfg.ns.push_back(static_cast<int>(v));
    }
    cfg.ls = parse_list(cfg.l_spec);
    for (double l : cfg.ls)
        if (!(l >= 0)) throw ConfigError("l must be non-negative");
    std::vector<std::string> engines;
    for (const auto& e : cfg.engines) {
        std::stringstream ss(e);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "all") {
                engines = {"formula", "aim", "shooting"};
                continue;
            }
            if (item != "formula" && item != "aim" && item != "shooting")
                throw ConfigError("unknown engine '" + item + "'");
            if (std::find(engines.begin(), engines.end(), item) == engines.end()) engines.push_back(item);
        }
    }
    cfg.engines = engines;
    if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("format must be json or csv");
}

/// Model, resolved parameters and the (n, l) jobs, all validated.
struct Prepared {
    const ModelSpec* spec;
    ParameterSet params;
    std::vector<QuantumNumbers> jobs;
};

Prepared prepare(const RunConfig& cfg) {
    if (cfg.model.empty()) throw ConfigError("--model is required");
    Prepared p{nullptr, {}, {}};
    try {
        p.spec = &find_model(cfg.model);
        p.params = p.spec->resolve(cfg.overrides);
        // the effective l of some models does not depend on --l
        const bool own_l = p.spec->id == "noncentral_coulomb";
        for (int n : cfg.ns)
            for (double l : own_l ? std::vector<double>{0.0} : cfg.ls) {
                QuantumNumbers qn{n, l, cfg.m, cfg.j};
                p.jobs.push_back(p.spec->prepare(p.params, qn));
            }
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    return p;
}

json config_json(const RunConfig& cfg, const Prepared& p) {
    json params = json::object();
    for (const auto& [k, v] : p.params) params[k] = v;
    json c;
    c["model"] = p.spec->id;
    c["params"] = params;
    c["n"] = cfg.ns;
    c["l"] = cfg.ls;
    c["m"] = cfg.m ? json(*cfg.m) : json(nullptr);
    c["j"] = cfg.j ? json(*cfg.j) : json(nullptr);
    c["engines"] = cfg.engines;
    c["tolerances"] = {{"root", cfg.tol.root}, {"aim", cfg.tol.aim}, {"shooting", cfg.tol.shooting},
                       {"aim_drift", cfg.tol.aim_drift}};
    return c;
}

RunConfig config_from_json(const json& c) {
    RunConfig cfg;
    cfg.model = c.at("model").get<std::string>();
    for (const auto& [k, v] : c.at("params").items()) cfg.overrides[k] = v.get<double>();
    cfg.ns = c.at("n").get<std::vector<int>>();
    cfg.ls = c.at("l").get<std::vector<double>>();
    if (!c.at("m").is_null()) cfg.m = c.at("m").get<int>();
    if (!c.at("j").is_null()) cfg.j = c.at("j").get<double>();
    cfg.engines = c.at("engines").get<std::vector<std::string>>();
    const auto& t = c.at("tolerances");
    cfg.tol = {t.at("root").get<double>(), t.at("aim").get<double>(), t.at("shooting").get<double>(),
               t.at("aim_drift").get<double>()};
    return cfg;
}

std::vector<EigenResult> run_formula(const Prepared& p, const QuantumNumbers& qn, const Tolerances& tol) {
    SolveOptions o;
    o.root_tol = tol.root;
    return solve_eigenvalue(p.spec->bind(p.params, qn), p.spec->unknown(p.params, qn), qn.n, o);
}

EigenResult run_aim(const Prepared& p, const QuantumNumbers& qn, const Tolerances& tol) {
    AimOptions o;
    o.aim_tol = tol.aim_drift;
    return aim_solve(p.spec->bind(p.params, qn), p.spec->unknown(p.params, qn), qn.n, o);
}

std::optional<EigenResult> run_shooting(const Prepared& p, const QuantumNumbers& qn) {
    const auto rp = p.spec->radial_problem(p.params, qn, Centrifugal::Approximated);
    if (!rp) return std::nullopt;
    const auto [lo, hi] = p.spec->shooting_bracket(p.params, qn);
    return shoot_eigenvalue(*rp, qn.n, lo, hi);
}

double physical(const Prepared& p, const QuantumNumbers& qn, double v) {
    return p.spec->physical_energy ? p.spec->physical_energy(v, p.params, qn) : v;
}

json result_json(const Prepared& p, const QuantumNumbers& qn, const EigenResult& r, int root) {
    json j;
    j["n"] = qn.n;
    j["l"] = qn.l;
    j["engine"] = to_string(r.engine);
    j["root"] = root;
    j["value"] = num(r.value);
    j["energy"] = num(physical(p, qn, r.value));
    j["k4"] = r.params ? num(r.params->k4) : json(nullptr);
    j["k5"] = r.params ? num(r.params->k5) : json(nullptr);
    j["residual_formula"] = num(r.residual_formula);
    j["residual_ode"] = num(r.residual_ode);
    j["node_count"] = r.node_count ? json(*r.node_count) : json(nullptr);
    return j;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(cfg.out);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ConfigError("cannot write " + tmp.string());
        f << text;
        if (!f) throw ConfigError("cannot write " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string csv_header(const RunConfig&, const Prepared& p) {
    std::string s = "# model=" + p.spec->id + "\n# schema=1\n# params=";
    bool first = true;
    for (const auto& [k, v] : p.params) {
        s += (first ? "" : ";") + k + "=" + fmt(v);
        first = false;
    }
    return s + "\n# unknown=" + p.spec->unknown_name + "\n";
}

// ---------------------------------------------------------------- commands

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    const auto p = prepare(cfg);
    json results = json::array();
    for (const auto& e : cfg.engines)
        if (e == "shooting" && !p.spec->radial_problem(p.params, p.jobs.front(), Centrifugal::Approximated))
            throw ConfigError("shooting engine is not available for " + p.spec->id);
    for (const auto& qn : p.jobs) {
        spdlog::debug("solving {} n={} l={}", p.spec->id, qn.n, qn.l);
        for (const auto& e : cfg.engines) {
            if (e == "formula") {
                const auto rs = run_formula(p, qn, cfg.tol);
                for (std::size_t i = 0; i < rs.size(); ++i) results.push_back(result_json(p, qn, rs[i], static_cast<int>(i)));
            } else if (e == "aim") {
                results.push_back(result_json(p, qn, run_aim(p, qn, cfg.tol), 0));
            } else {
                results.push_back(result_json(p, qn, *run_shooting(p, qn), 0));
            }
        }
    }
    std::string text;
    if (cfg.format == "json") {
        json report;
        report["schema"] = 1;
        report["command"] = "solve";
        report["model"] = p.spec->id;
        report["equation"] = to_string(p.spec->kind);
        report["unknown"] = p.spec->unknown_name;
        report["config"] = config_json(cfg, p);
        report["results"] = results;
        text = report.dump(2) + "\n";
    } else {
        text = csv_header(cfg, p) + "n,l,engine,root,value,energy,k4,k5,residual_formula,residual_ode,node_count\n";
        auto cell = [](const json& v) { return v.is_null() ? std::string() : v.is_number_integer() ? v.dump() : fmt(v.get<double>()); };
        for (const auto& r : results) {
            text += r["n"].dump() + "," + fmt(r["l"].get<double>()) + "," + r["engine"].get<std::string>() + "," +
                    r["root"].dump() + "," + cell(r["value"]) + "," + cell(r["energy"]) + "," + cell(r["k4"]) + "," +
                    cell(r["k5"]) + "," + cell(r["residual_formula"]) + "," + cell(r["residual_ode"]) + "," +
                    cell(r["node_count"]) + "\n";
        }
    }
    write_output(cfg, text, out);
    return exit_ok;
}

int cmd_verify(RunConfig cfg, std::ostream& out) {
    json fixture;
    if (!cfg.fixture.empty()) {
        std::ifstream f(cfg.fixture);
        if (!f) throw ConfigError("cannot read fixture " + cfg.fixture);
        try {
            fixture = json::parse(f);
            auto replay = config_from_json(fixture.at("config"));
            replay.format = cfg.format;
            replay.out = cfg.out;
            cfg = replay;
        } catch (const json::exception& e) {
            throw ConfigError(std::string("malformed fixture: ") + e.what());
        }
    }
    const auto p = prepare(cfg);
    bool all_pass = true;
    json checks = json::array();
    std::vector<std::pair<const QuantumNumbers*, std::vector<EigenResult>>> formula_runs;
    for (const auto& qn : p.jobs) {
        const auto f = run_formula(p, qn, cfg.tol);
        const auto a = run_aim(p, qn, cfg.tol);
        const auto s = run_shooting(p, qn);
        auto nearest = [&](double v) {
            return std::min_element(f.begin(), f.end(), [&](const auto& x, const auto& y) {
                       return std::abs(x.value - v) < std::abs(y.value - v);
                   })->value;
        };
        auto within = [](double d, double ref, double tol) { return d <= tol * std::max(1.0, std::abs(ref)); };
        json c;
        c["n"] = qn.n;
        c["l"] = qn.l;
        json fv = json::array();
        for (const auto& r : f) fv.push_back(r.value);
        c["formula"] = fv;
        c["aim"] = a.value;
        c["shooting"] = s ? num(s->value) : json(nullptr);
        const double fa = nearest(a.value);
        json deltas;
        deltas["formula_aim"] = std::abs(fa - a.value);
        bool pass = within(std::abs(fa - a.value), fa, cfg.tol.aim);
        if (s) {
            const double fs = nearest(s->value);
            deltas["formula_shooting"] = std::abs(fs - s->value);
            deltas["aim_shooting"] = std::abs(a.value - s->value);
            pass = pass && within(std::abs(fs - s->value), fs, cfg.tol.shooting) &&
                   within(std::abs(a.value - s->value), a.value, cfg.tol.shooting);
        }
        c["deltas"] = deltas;
        c["pass"] = pass;
        all_pass = all_pass && pass;
        checks.push_back(c);
        formula_runs.emplace_back(&qn, f);
    }

    json report;
    report["schema"] = 1;
    report["command"] = "verify";
    report["model"] = p.spec->id;
    report["config"] = config_json(cfg, p);
    report["checks"] = checks;
    if (!fixture.is_null()) {
        json replay;
        bool same = true;
        if (fixture.contains("checks")) {
            const auto& old = fixture["checks"];
            same = old.size() == checks.size();
            for (std::size_t i = 0; same && i < old.size(); ++i) same = old[i].at("pass") == checks[i]["pass"];
            replay["verdicts_match"] = same;
        }
        if (fixture.contains("results")) {
            // stored formula values must be reproduced to the root tolerance scale
            for (const auto& r : fixture["results"]) {
                if (r.at("engine") != "formula" || r.at("value").is_null()) continue;
                const double v = r["value"].get<double>();
                bool found = false;
                for (const auto& [qn, rs] : formula_runs)
                    if (qn->n == r["n"].get<int>() && qn->l == r["l"].get<double>())
                        for (const auto& x : rs) found = found || std::abs(x.value - v) <= 1e-9 * std::max(1.0, std::abs(v));
                same = same && found;
            }
            replay["values_reproduced"] = same;
        }
        report["fixture"] = replay;
        if (!same) all_pass = false;
    }
    report["pass"] = all_pass;
    write_output(cfg, report.dump(2) + "\n", out);
    return all_pass ? exit_ok : exit_disagreement;
}

int cmd_wavefunction(const RunConfig& cfg, std::ostream& out) {
    if (cfg.samples < 2) throw ConfigError("--samples must be at least 2");
    const auto p = prepare(cfg);
    if (p.jobs.size() != 1) throw ConfigError("wavefunction takes a single n and l");
    const auto& qn = p.jobs.front();
    const auto roots = run_formula(p, qn, cfg.tol);
    const auto& res = roots.front();
    const auto c = p.spec->bind(p.params, qn)(res.value);
    const auto psi = build_wavefunction(c, *res.params, qn.n);
    const auto& spec = *p.spec;
    auto f = [&](double r) { return psi(spec.to_s(r, p.params)); };

    // r where the state is appreciable, then march outward until it has died off
    const double s_mid = psi.regime() == Regime::Limit ? psi.extent() : 0.5 * (psi.domain_lo() + psi.domain_hi());
    const double r_mid = std::abs(spec.from_s(s_mid, p.params));
    double peak = 0, r_hi = r_mid;
    for (double r = std::max(spec.domain_r_lo, 1e-4 * r_mid); r < 1e6 * r_mid; r *= 1.02) {
        const double v = std::abs(f(r));
        if (!std::isfinite(v)) break;
        peak = std::max(peak, v);
        r_hi = r;
        if (r > r_mid && v < 1e-9 * peak) break;
    }
    r_hi = std::min(r_hi, spec.domain_r_hi);
    const auto norm = normalize(f, spec.domain_r_lo, r_hi, spec.measure);

    std::string text = csv_header(cfg, p);
    text += "# n=" + std::to_string(qn.n) + "\n# l=" + fmt(qn.l) + "\n";
    text += "# " + spec.unknown_name + "=" + fmt(res.value) + "\n";
    text += "# measure=" + std::string(to_string(spec.measure)) + "\n";
    text += "# N_n=" + fmt(norm.constant) + "\n";
    text += "r,s,psi_unnormalized,psi_normalized\n";
    for (int i = 0; i < cfg.samples; ++i) {
        const double r = spec.domain_r_lo + (r_hi - spec.domain_r_lo) * i / (cfg.samples - 1);
        const double s = spec.to_s(r, p.params);
        const double v = psi(s);
        text += fmt(r) + "," + fmt(s) + "," + fmt(v) + "," + fmt(norm.constant * v) + "\n";
    }
    write_output(cfg, text, out);
    return exit_ok;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
    std::string text;
    if (cfg.format == "json") {
        json models = json::array();
        for (const auto& m : catalog_list()) {
            json params = json::array();
            for (const auto& pi : m.parameters)
                params.push_back({{"name", pi.name}, {"default", pi.value}, {"min", num(pi.min)}, {"max", num(pi.max)},
                                  {"integer", pi.integer}, {"description", pi.description}});
            QuantumNumbers qn;
            const auto d = m.defaults();
            bool shooting = false;
            try {
                shooting = m.radial_problem(d, m.prepare(d, qn), Centrifugal::Approximated).has_value();
            } catch (const Error&) {
            }
            models.push_back({{"id", m.id}, {"description", m.description}, {"equation", to_string(m.kind)},
                              {"unknown", m.unknown_name}, {"transform", m.transform_note},
                              {"measure", to_string(m.measure)}, {"closed_form", m.has_closed_form()},
                              {"shooting", shooting}, {"parameters", params}, {"notes", m.notes}});
        }
        json report;
        report["schema"] = 1;
        report["command"] = "catalog";
        report["models"] = models;
        text = report.dump(2) + "\n";
    } else {
        text = "id,equation,unknown,parameters\n";
        for (const auto& m : catalog_list()) {
            std::string names;
            for (const auto& pi : m.parameters) names += (names.empty() ? "" : ";") + pi.name;
            text += m.id + "," + to_string(m.kind) + "," + m.unknown_name + "," + names + "\n";
        }
    }
    write_output(cfg, text, out);
    return exit_ok;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
    json e;
    e["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
    err << e.dump() << "\n";
}

void setup_logging() {
    static const bool once = [] {
        auto logger = spdlog::stderr_color_mt("bsf");
        spdlog::set_default_logger(logger);
        spdlog::set_level(spdlog::level::warn);
        if (const char* lvl = std::getenv("BSF_LOG")) spdlog::set_level(spdlog::level::from_str(lvl));
        return true;
    }();
    (void)once;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool model_required = true) {
    auto* m = sub->add_option("--model", cfg.model, "catalog model id");
    if (model_required) m->required();
    sub->add_option("--param", cfg.param_args, "NAME=VALUE parameter override (repeatable)");
    sub->add_option("--n", cfg.n_spec, "radial quantum numbers, e.g. 0, 0..3 or 0,2");
    sub->add_option("--l", cfg.l_spec, "orbital quantum numbers, same syntax as --n");
    sub->add_option("--m", cfg.m, "magnetic quantum number");
    sub->add_option("--j", cfg.j, "total angular momentum");
    sub->add_option("--tol", cfg.tol_args, "NAME=VALUE tolerance override: root, aim, shooting, aim_drift");
    sub->add_option("--format", cfg.format, "json or csv")->capture_default_str();
    sub->add_option("--out", cfg.out, "output path (written atomically); stdout when absent");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    setup_logging();
    CLI::App app{"Bound-state spectra of exactly solvable wave equations"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto* solve = app.add_subcommand("solve", "solve spectra with the selected engines");
    add_common(solve, cfg);
    solve->add_option("--engine", cfg.engines, "formula, aim, shooting or all (repeatable or comma list)");
    auto* verify = app.add_subcommand("verify", "cross-check the formula, AIM and shooting engines");
    add_common(verify, cfg, false);
    verify->add_option("--fixture", cfg.fixture, "replay the configuration stored in a JSON report");
    auto* wave = app.add_subcommand("wavefunction", "sample the normalized wavefunction as CSV");
    add_common(wave, cfg);
    wave->add_option("--samples", cfg.samples, "number of samples")->capture_default_str();
    auto* catalog = app.add_subcommand("catalog", "list the available models");
    catalog->add_option("--format", cfg.format, "json or csv")->capture_default_str();
    catalog->add_option("--out", cfg.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        emit_error(err, "ConfigError", e.what(), exit_config);
        return exit_config;
    }

    try {
        if (*catalog) {
            if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("format must be json or csv");
            return cmd_catalog(cfg, out);
        }
        if (*verify) {
            if (cfg.fixture.empty() && cfg.model.empty()) throw ConfigError("verify needs --model or --fixture");
            finish_config(cfg);
            return cmd_verify(cfg, out);
        }
        finish_config(cfg);
        if (*solve) return cmd_solve(cfg, out);
        return cmd_wavefunction(cfg, out);
    } catch (const ConfigError& e) {
        emit_error(err, "ConfigError", e.what(), exit_config);
        return exit_config;
    } catch (const Error& e) {
        emit_error(err, std::string(to_string(e.kind())), e.what(), exit_solver);
        return exit_solver;
    } catch (const std::exception& e) {
        emit_error(err, "InternalError", e.what(), exit_solver);
        return exit_solver;
    }
}

}  // namespace bsf
