#include "ansec/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ansec/beamforming.hpp"
#include "ansec/errors.hpp"
#include "ansec/montecarlo.hpp"
#include "ansec/sectoring.hpp"
#include "ansec/throughput.hpp"
#include "ansec/types.hpp"

namespace ansec::cli {

namespace {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Options {
    NetworkParams params;
    double phi = 0.5;
    double beta_b = 10.0;
    double beta_e = 1.0;
    double sigma = 0.1;
    double epsilon = 0.01;
    std::string scheme = "sectoring";
    std::string quantity = "pco";
    std::vector<std::string> quantities;
    bool json_out = false;
    std::string output;
    std::string out_dir;
    long trials = 100000;
    std::uint64_t seed = 1;
    double window_radius = 0.0;
    double delta_trunc = 1e-3;
    int threads = 1;
    std::string param = "phi";
    double start = 0.05;
    double stop = 0.95;
    int count = 19;
    bool log_scale = false;
    int figure = 0;
    std::string config_path;
};

// Manual key=value config loader. The vendored CLI11 only processes config
// files attached to the top-level app, not to subcommands, so the subcommand
// flag is applied here instead: every key must name an option of the active
// subcommand, and values given on the command line win.
double config_number(const std::string& key, const std::string& val) {
    char* end = nullptr;
    double v = std::strtod(val.c_str(), &end);
    if (end == val.c_str() || *end != '\0' || !std::isfinite(v))
        throw std::domain_error("config key " + key + " has a bad number: " + val);
    return v;
}

void apply_config_file(Options& o, CLI::App* cmd) {
    if (o.config_path.empty())
        return;
    std::ifstream f(o.config_path);
    if (!f)
        throw io_error("cannot open " + o.config_path + " for reading");
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t\r");
        size_t e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::map<std::string, std::function<void(const std::string&, const std::string&)>>
        setters = {
            {"lambda-l", [&](const std::string& k, const std::string& v) { o.params.lambda_l = config_number(k, v); }},
            {"lambda-e", [&](const std::string& k, const std::string& v) { o.params.lambda_e = config_number(k, v); }},
            {"r", [&](const std::string& k, const std::string& v) { o.params.r = config_number(k, v); }},
            {"alpha", [&](const std::string& k, const std::string& v) { o.params.alpha = config_number(k, v); }},
            {"n", [&](const std::string& k, const std::string& v) { o.params.n = static_cast<int>(std::lround(config_number(k, v))); }},
            {"p-total", [&](const std::string& k, const std::string& v) { o.params.p_total = config_number(k, v); }},
            {"phi", [&](const std::string& k, const std::string& v) { o.phi = config_number(k, v); }},
            {"beta-b", [&](const std::string& k, const std::string& v) { o.beta_b = config_number(k, v); }},
            {"beta-e", [&](const std::string& k, const std::string& v) { o.beta_e = config_number(k, v); }},
            {"sigma", [&](const std::string& k, const std::string& v) { o.sigma = config_number(k, v); }},
            {"epsilon", [&](const std::string& k, const std::string& v) { o.epsilon = config_number(k, v); }},
            {"trials", [&](const std::string& k, const std::string& v) { o.trials = std::lround(config_number(k, v)); }},
            {"seed", [&](const std::string& k, const std::string& v) {
                 char* end = nullptr;
                 o.seed = std::strtoull(v.c_str(), &end, 10);
                 if (end == v.c_str() || *end != '\0')
                     throw std::domain_error("config key " + k + " has a bad number: " + v);
             }},
            {"window-radius", [&](const std::string& k, const std::string& v) { o.window_radius = config_number(k, v); }},
            {"delta-trunc", [&](const std::string& k, const std::string& v) { o.delta_trunc = config_number(k, v); }},
            {"threads", [&](const std::string& k, const std::string& v) { o.threads = static_cast<int>(std::lround(config_number(k, v))); }},
        };
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';')
            continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::domain_error(o.config_path + ":" + std::to_string(lineno) +
                                    ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        auto it = setters.find(key);
        if (it == setters.end() || !cmd->get_option_no_throw("--" + key))
            throw std::domain_error("config key " + key +
                                    " does not name an option of this command");
        if (cmd->count("--" + key) > 0)
            continue; // explicit flag wins
        it->second(key, val);
    }
}

// One fully specified evaluation point.
struct PointParams {
    NetworkParams net;
    double phi;
    double beta_b;
    double beta_e;
    double sigma;
    double epsilon;
};

PointParams make_point(const Options& o) {
    return {o.params, o.phi, o.beta_b, o.beta_e, o.sigma, o.epsilon};
}

void set_swept(PointParams& pt, const std::string& name, double v) {
    if (name == "phi")
        pt.phi = v;
    else if (name == "beta_b")
        pt.beta_b = v;
    else if (name == "beta_e")
        pt.beta_e = v;
    else if (name == "lambda_l")
        pt.net.lambda_l = v;
    else if (name == "lambda_e")
        pt.net.lambda_e = v;
    else if (name == "r")
        pt.net.r = v;
    else if (name == "alpha")
        pt.net.alpha = v;
    else if (name == "n")
        pt.net.n = static_cast<int>(std::lround(v));
    else if (name == "p_total")
        pt.net.p_total = v;
    else if (name == "sigma")
        pt.sigma = v;
    else if (name == "epsilon")
        pt.epsilon = v;
    else
        throw std::domain_error("unknown sweep parameter " + name);
}

std::vector<std::pair<std::string, std::string>> param_map(const PointParams& pt) {
    return {
        {"lambda_l", fmt17(pt.net.lambda_l)},
        {"lambda_e", fmt17(pt.net.lambda_e)},
        {"r", fmt17(pt.net.r)},
        {"alpha", fmt17(pt.net.alpha)},
        {"n", std::to_string(pt.net.n)},
        {"p_total", fmt17(pt.net.p_total)},
        {"phi", fmt17(pt.phi)},
        {"beta_b", fmt17(pt.beta_b)},
        {"beta_e", fmt17(pt.beta_e)},
        {"sigma", fmt17(pt.sigma)},
        {"epsilon", fmt17(pt.epsilon)},
    };
}

nlohmann::json param_json(const PointParams& pt) {
    nlohmann::json j;
    j["lambda_l"] = pt.net.lambda_l;
    j["lambda_e"] = pt.net.lambda_e;
    j["r"] = pt.net.r;
    j["alpha"] = pt.net.alpha;
    j["n"] = pt.net.n;
    j["p_total"] = pt.net.p_total;
    j["phi"] = pt.phi;
    j["beta_b"] = pt.beta_b;
    j["beta_e"] = pt.beta_e;
    j["sigma"] = pt.sigma;
    j["epsilon"] = pt.epsilon;
    return j;
}

double eval_quantity(const std::string& scheme, const std::string& q,
                     const PointParams& pt) {
    PowerSplit split(pt.phi, pt.net.p_total);
    if (scheme == "sectoring") {
        if (q == "pco")
            return sectoring::connection_outage(pt.net, split, pt.beta_b);
        if (q == "pso_ub")
            return sectoring::secrecy_outage_ub(pt.net, split, pt.beta_e);
        if (q == "pso_lb")
            return sectoring::secrecy_outage_lb(pt.net, split, pt.beta_e);
        if (q == "capacity")
            return sectoring::capacity_lb(pt.net, split, pt.sigma, pt.epsilon);
        if (q == "phi_opt")
            return sectoring::optimal_phi_numeric(pt.net, pt.sigma, pt.epsilon).phi;
        throw std::domain_error("quantity " + q +
                                " is not defined for scheme sectoring");
    }
    if (q == "pco" || q == "pco_exact")
        return beamforming::connection_outage_exact(pt.net, split, pt.beta_b);
    if (q == "pco_approx")
        return beamforming::connection_outage_approx(pt.net, split, pt.beta_b);
    if (q == "pso_ub")
        return beamforming::secrecy_outage_ub(pt.net, split, pt.beta_e);
    if (q == "pso_lb")
        return beamforming::secrecy_outage_lb(pt.net, split, pt.beta_e);
    if (q == "pso_lead")
        return beamforming::secrecy_outage_lead(pt.net, split, pt.beta_e);
    if (q == "capacity")
        return beamforming::capacity_approx(pt.net, split, pt.sigma, pt.epsilon);
    if (q == "phi_opt")
        return beamforming::optimal_phi_numeric(pt.net, pt.sigma, pt.epsilon).phi;
    throw std::domain_error("quantity " + q +
                            " is not defined for scheme beamforming");
}

void write_lines(const std::vector<std::pair<std::string, std::string>>& lines) {
    for (const auto& [k, v] : lines)
        std::cout << k << ": " << v << "\n";
}

void write_csv(const std::string& path,
               const std::vector<std::pair<std::string, std::string>>& meta,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream f(path);
    if (!f)
        throw io_error("cannot open " + path + " for writing");
    for (const auto& [k, v] : meta)
        f << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        f << (i ? "," : "") << header[i];
    f << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            f << (i ? "," : "") << row[i];
        f << "\n";
    }
    f.flush();
    if (!f)
        throw io_error("write failed for " + path);
}

std::vector<std::pair<std::string, std::string>> meta_common(
    const std::string& command, const Options& o, const PointParams& pt) {
    std::vector<std::pair<std::string, std::string>> m = {
        {"tool", "ansec"},
        {"version", kVersion},
        {"command", command},
        {"scheme", o.scheme},
    };
    for (auto& kv : param_map(pt))
        m.push_back(kv);
    return m;
}

std::vector<double> linspace(double start, double stop, int count, bool log_scale) {
    if (log_scale && (!(start > 0.0) || !(stop > 0.0)))
        throw std::domain_error("log spacing requires positive start and stop");
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) {
        double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        g[i] = log_scale
                   ? std::exp(std::log(start) + (std::log(stop) - std::log(start)) * t)
                   : start + (stop - start) * t;
    }
    std::sort(g.begin(), g.end());
    return g;
}

std::vector<double> phi_grid19() {
    std::vector<double> g;
    for (int i = 1; i <= 19; ++i)
        g.push_back(0.05 * i);
    return g;
}

// ---- eval ----------------------------------------------------------------

void do_eval(const Options& o, const std::string& command) {
    PointParams pt = make_point(o);
    double value = eval_quantity(o.scheme, o.quantity, pt);
    bool with_capacity = o.quantity == "phi_opt";
    double cap = 0.0;
    if (with_capacity) {
        PowerSplit best(value, pt.net.p_total);
        cap = o.scheme == "sectoring"
                  ? sectoring::capacity_lb(pt.net, best, pt.sigma, pt.epsilon)
                  : beamforming::capacity_approx(pt.net, best, pt.sigma, pt.epsilon);
    }
    if (o.json_out) {
        nlohmann::json j;
        j["tool"] = "ansec";
        j["version"] = kVersion;
        j["command"] = "eval";
        j["scheme"] = o.scheme;
        j["quantity"] = o.quantity;
        j["params"] = param_json(pt);
        j["value"] = value;
        if (with_capacity)
            j["capacity"] = cap;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> lines = {
        {"scheme", o.scheme}, {"quantity", o.quantity}};
    for (auto& kv : param_map(pt))
        lines.push_back(kv);
    lines.emplace_back("value", fmt17(value));
    if (with_capacity)
        lines.emplace_back("capacity", fmt17(cap));
    write_lines(lines);
}

// ---- sweep ---------------------------------------------------------------

void do_sweep(const Options& o, const std::string& command) {
    if (o.count < 2)
        throw std::domain_error("count must be at least 2");
    std::vector<std::string> quantities =
        o.quantities.empty() ? std::vector<std::string>{o.quantity} : o.quantities;
    std::vector<double> grid = linspace(o.start, o.stop, o.count, o.log_scale);

    std::vector<std::string> header = {o.param};
    for (const auto& q : quantities)
        header.push_back(q);
    header.push_back("feasible");

    std::vector<std::vector<std::string>> rows;
    nlohmann::json jrows = nlohmann::json::array();
    for (double v : grid) {
        PointParams pt = make_point(o);
        set_swept(pt, o.param, v);
        double used = o.param == "n" ? static_cast<double>(pt.net.n) : v;
        std::vector<std::string> row = {fmt17(used)};
        nlohmann::json jr;
        jr[o.param] = used;
        int feasible = 1;
        for (const auto& q : quantities) {
            double val;
            try {
                val = eval_quantity(o.scheme, q, pt);
                if (q == "capacity" && !(val > 0.0))
                    feasible = 0;
            } catch (const infeasible_error&) {
                val = q == "phi_opt" ? std::numeric_limits<double>::quiet_NaN()
                                     : 0.0;
                feasible = 0;
            }
            row.push_back(fmt17(val));
            jr[q] = val;
        }
        row.push_back(std::to_string(feasible));
        jr["feasible"] = feasible;
        rows.push_back(std::move(row));
        jrows.push_back(std::move(jr));
    }

    PointParams base = make_point(o);
    auto meta = meta_common(command, o, base);
    std::string qjoin;
    for (std::size_t i = 0; i < quantities.size(); ++i)
        qjoin += (i ? "," : "") + quantities[i];
    meta.push_back({"quantity", qjoin});
    meta.push_back({"param", o.param});
    meta.push_back({"start", fmt17(o.start)});
    meta.push_back({"stop", fmt17(o.stop)});
    meta.push_back({"count", std::to_string(o.count)});
    meta.push_back({"spacing", o.log_scale ? "log" : "linear"});

    if (o.json_out) {
        nlohmann::json j;
        for (const auto& [k, v] : meta)
            j["meta"][k] = v;
        j["rows"] = jrows;
        std::ofstream f(o.output);
        if (!f)
            throw io_error("cannot open " + o.output + " for writing");
        f << j.dump(2) << "\n";
        f.flush();
        if (!f)
            throw io_error("write failed for " + o.output);
        return;
    }
    write_csv(o.output, meta, header, rows);
}

// ---- optimize ------------------------------------------------------------

void do_optimize(const Options& o, const std::string& command) {
    PointParams pt = make_point(o);
    PowerSplit best = o.scheme == "sectoring"
                          ? sectoring::optimal_phi_numeric(pt.net, pt.sigma, pt.epsilon)
                          : beamforming::optimal_phi_numeric(pt.net, pt.sigma, pt.epsilon);
    double cap = o.scheme == "sectoring"
                     ? sectoring::capacity_lb(pt.net, best, pt.sigma, pt.epsilon)
                     : beamforming::capacity_approx(pt.net, best, pt.sigma, pt.epsilon);
    bool closed_form = o.scheme == "sectoring" && pt.net.alpha == 4.0;
    double phi_closed = 0.0, gap = 0.0;
    std::string note;
    if (closed_form) {
        phi_closed = sectoring::optimal_phi_alpha4(pt.net, pt.sigma, pt.epsilon).phi;
        gap = std::fabs(phi_closed - best.phi);
        note = sectoring::alpha4_selfcheck_note();
    }
    if (o.json_out) {
        nlohmann::json j;
        j["tool"] = "ansec";
        j["version"] = kVersion;
        j["command"] = "optimize";
        j["scheme"] = o.scheme;
        j["params"] = param_json(pt);
        j["phi_opt"] = best.phi;
        j["capacity"] = cap;
        if (closed_form) {
            j["phi_closed"] = phi_closed;
            j["phi_numeric"] = best.phi;
            j["closed_numeric_gap"] = gap;
            if (!note.empty())
                j["selfcheck_note"] = note;
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> lines = {{"scheme", o.scheme}};
    for (auto& kv : param_map(pt))
        lines.push_back(kv);
    lines.emplace_back("phi_opt", fmt17(best.phi));
    lines.emplace_back("capacity", fmt17(cap));
    if (closed_form) {
        lines.emplace_back("phi_closed", fmt17(phi_closed));
        lines.emplace_back("phi_numeric", fmt17(best.phi));
        lines.emplace_back("closed_numeric_gap", fmt17(gap));
        if (!note.empty())
            lines.emplace_back("selfcheck_note", note);
    }
    write_lines(lines);
}

// ---- simulate ------------------------------------------------------------

void do_simulate(const Options& o, const std::string& command) {
    PointParams pt = make_point(o);
    PowerSplit split(pt.phi, pt.net.p_total);
    montecarlo::McConfig cfg;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.window.radius = o.window_radius;
    cfg.delta_trunc = o.delta_trunc;
    cfg.threads = o.threads;
    double radius = cfg.window.radius > 0.0
                        ? cfg.window.radius
                        : montecarlo::default_window_radius(pt.net, cfg.delta_trunc);
    bool sec = o.scheme == "sectoring";

    montecarlo::McEstimate est;
    std::vector<std::pair<std::string, double>> refs;
    double tail_bound = -1.0;
    bool pass;
    auto ref_se = [&](double ref) {
        return std::sqrt(ref * (1.0 - ref) / static_cast<double>(o.trials));
    };
    if (o.quantity == "pco") {
        est = sec ? montecarlo::sim_sectoring_pco(pt.net, split, pt.beta_b, cfg)
                  : montecarlo::sim_beamforming_pco(pt.net, split, pt.beta_b, cfg);
        double ref = sec
                         ? sectoring::connection_outage(pt.net, split, pt.beta_b)
                         : beamforming::connection_outage_exact(pt.net, split, pt.beta_b);
        refs.emplace_back("analytic", ref);
        double slack = 3.0 * std::max(est.std_err, ref_se(ref));
        pass = std::fabs(est.p_hat - ref) <= slack;
    } else {
        est = sec ? montecarlo::sim_sectoring_pso(pt.net, split, pt.beta_e, cfg)
                  : montecarlo::sim_beamforming_pso(pt.net, split, pt.beta_e, cfg);
        double ub = sec ? sectoring::secrecy_outage_ub(pt.net, split, pt.beta_e)
                        : beamforming::secrecy_outage_ub(pt.net, split, pt.beta_e);
        double lb = sec ? sectoring::secrecy_outage_lb(pt.net, split, pt.beta_e)
                        : beamforming::secrecy_outage_lb(pt.net, split, pt.beta_e);
        refs.emplace_back("analytic_ub", ub);
        refs.emplace_back("analytic_lb", lb);
        double s_ub = 3.0 * std::max(est.std_err, ref_se(ub));
        double s_lb = 3.0 * std::max(est.std_err, ref_se(lb));
        pass = est.p_hat <= ub + s_ub && est.p_hat >= lb - s_lb;
        tail_bound =
            montecarlo::ignored_tail_bound(pt.net, split, pt.beta_e, radius, !sec);
    }

    if (o.json_out) {
        nlohmann::json j;
        j["tool"] = "ansec";
        j["version"] = kVersion;
        j["command"] = "simulate";
        j["scheme"] = o.scheme;
        j["quantity"] = o.quantity;
        j["params"] = param_json(pt);
        j["trials"] = est.trials;
        j["seed"] = est.seed;
        j["window_radius"] = radius;
        if (tail_bound >= 0.0)
            j["ignored_tail_bound"] = tail_bound;
        j["p_hat"] = est.p_hat;
        j["std_err"] = est.std_err;
        j["ci_lo"] = est.ci_lo;
        j["ci_hi"] = est.ci_hi;
        for (auto& [k, v] : refs)
            j[k] = v;
        j["check"] = pass ? "PASS" : "FAIL";
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> lines = {
        {"scheme", o.scheme}, {"quantity", o.quantity}};
    for (auto& kv : param_map(pt))
        lines.push_back(kv);
    lines.emplace_back("trials", std::to_string(est.trials));
    lines.emplace_back("seed", std::to_string(est.seed));
    lines.emplace_back("window_radius", fmt17(radius));
    if (tail_bound >= 0.0)
        lines.emplace_back("ignored_tail_bound", fmt17(tail_bound));
    lines.emplace_back("p_hat", fmt17(est.p_hat));
    lines.emplace_back("std_err", fmt17(est.std_err));
    lines.emplace_back("ci_lo", fmt17(est.ci_lo));
    lines.emplace_back("ci_hi", fmt17(est.ci_hi));
    for (auto& [k, v] : refs)
        lines.emplace_back(k, fmt17(v));
    lines.emplace_back("check", pass ? "PASS" : "FAIL");
    write_lines(lines);
}

// ---- reproduce -----------------------------------------------------------

struct Curve {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> extra_meta;
};

void emit_curves(const std::string& dir, const std::string& command,
                 const Options& o, const PointParams& meta_pt,
                 const std::vector<Curve>& curves) {
    for (const auto& c : curves) {
        auto meta = meta_common(command, o, meta_pt);
        meta.emplace_back("figure", std::to_string(o.figure));
        for (auto& kv : c.extra_meta)
            meta.push_back(kv);
        write_csv((std::filesystem::path(dir) / (c.name + ".csv")).string(), meta,
                  c.header, c.rows);
    }
}

std::vector<std::string> mc_row(double x, const montecarlo::McEstimate& e) {
    return {fmt17(x), fmt17(e.p_hat), fmt17(e.std_err), fmt17(e.ci_lo),
            fmt17(e.ci_hi)};
}

const std::vector<std::string> kMcHeader = {"phi", "p_hat", "std_err", "ci_lo",
                                            "ci_hi"};

void do_reproduce(const Options& o, const std::string& command) {
    if (o.figure < 1 || o.figure > 6)
        throw std::domain_error("figure must lie in 1..6");
    std::string dir = o.out_dir;
    if (dir.empty()) {
        const char* env = std::getenv("ANSEC_OUT_DIR");
        dir = env && *env ? env : ".";
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw io_error("cannot create output directory " + dir);

    montecarlo::McConfig cfg;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.window.radius = o.window_radius;
    cfg.delta_trunc = o.delta_trunc;
    cfg.threads = o.threads;
    auto mc_meta = [&](const NetworkParams& net) {
        double radius = cfg.window.radius > 0.0
                            ? cfg.window.radius
                            : montecarlo::default_window_radius(net, cfg.delta_trunc);
        return std::vector<std::pair<std::string, std::string>>{
            {"trials", std::to_string(cfg.trials)},
            {"seed", std::to_string(cfg.seed)},
            {"window_radius", fmt17(radius)},
        };
    };

    Options base = o;
    std::vector<Curve> curves;

    if (o.figure == 1) {
        base.scheme = "sectoring";
        NetworkParams net;
        net.lambda_l = 0.01;
        net.lambda_e = 0.001;
        net.r = 1.0;
        net.alpha = 4.0;
        net.n = 4;
        PointParams pt = {net, 0.5, o.beta_b, 1.0, o.sigma, o.epsilon};
        Curve ub{"fig1_pso_ub", {"phi", "pso_ub"}, {}, {}};
        Curve lb{"fig1_pso_lb", {"phi", "pso_lb"}, {}, {}};
        Curve mc{"fig1_mc", kMcHeader, {}, mc_meta(net)};
        for (double phi : phi_grid19()) {
            PowerSplit split(phi, net.p_total);
            ub.rows.push_back({fmt17(phi),
                               fmt17(sectoring::secrecy_outage_ub(net, split, 1.0))});
            lb.rows.push_back({fmt17(phi),
                               fmt17(sectoring::secrecy_outage_lb(net, split, 1.0))});
            mc.rows.push_back(
                mc_row(phi, montecarlo::sim_sectoring_pso(net, split, 1.0, cfg)));
        }
        emit_curves(dir, command, base, pt, {ub, lb, mc});
        return;
    }
    if (o.figure == 2) {
        base.scheme = "beamforming";
        NetworkParams net;
        net.lambda_l = 0.01;
        net.lambda_e = 0.001;
        net.r = 1.0;
        net.alpha = 4.0;
        for (int n : {2, 4}) {
            net.n = n;
            PointParams pt = {net, 0.5, 3.0, o.beta_e, o.sigma, o.epsilon};
            std::string suffix = "_n" + std::to_string(n);
            Curve ex{"fig2_pco_exact" + suffix, {"phi", "pco_exact"}, {}, {}};
            Curve ap{"fig2_pco_approx" + suffix, {"phi", "pco_approx"}, {}, {}};
            Curve mc{"fig2_mc" + suffix, kMcHeader, {}, mc_meta(net)};
            for (double phi : phi_grid19()) {
                PowerSplit split(phi, net.p_total);
                ex.rows.push_back(
                    {fmt17(phi),
                     fmt17(beamforming::connection_outage_exact(net, split, 3.0))});
                ap.rows.push_back(
                    {fmt17(phi),
                     fmt17(beamforming::connection_outage_approx(net, split, 3.0))});
                mc.rows.push_back(mc_row(
                    phi, montecarlo::sim_beamforming_pco(net, split, 3.0, cfg)));
            }
            emit_curves(dir, command, base, pt, {ex, ap, mc});
        }
        return;
    }
    if (o.figure == 3) {
        base.scheme = "beamforming";
        NetworkParams net;
        net.lambda_l = 0.01;
        net.lambda_e = 0.001;
        net.r = o.params.r;
        net.alpha = 4.0;
        net.n = 4;
        PointParams pt = {net, 0.5, o.beta_b, 3.0, o.sigma, o.epsilon};
        Curve ub{"fig3_pso_ub", {"phi", "pso_ub"}, {}, {}};
        Curve lb{"fig3_pso_lb", {"phi", "pso_lb"}, {}, {}};
        Curve mc{"fig3_mc", kMcHeader, {}, mc_meta(net)};
        for (double phi : phi_grid19()) {
            PowerSplit split(phi, net.p_total);
            ub.rows.push_back(
                {fmt17(phi), fmt17(beamforming::secrecy_outage_ub(net, split, 3.0))});
            lb.rows.push_back(
                {fmt17(phi), fmt17(beamforming::secrecy_outage_lb(net, split, 3.0))});
            mc.rows.push_back(
                mc_row(phi, montecarlo::sim_beamforming_pso(net, split, 3.0, cfg)));
        }
        emit_curves(dir, command, base, pt, {ub, lb, mc});
        return;
    }
    if (o.figure == 4) {
        NetworkParams net;
        net.lambda_l = 0.01;
        net.lambda_e = 0.001;
        net.r = 1.0;
        net.alpha = 4.0;
        net.n = 4;
        PointParams pt = {net, 0.5, 10.0, 1.0, o.sigma, o.epsilon};
        Curve spco{"fig4_sectoring_pco", {"phi", "pco"}, {}, {}};
        Curve spso{"fig4_sectoring_pso_ub", {"phi", "pso_ub"}, {}, {}};
        Curve bpco{"fig4_beamforming_pco", {"phi", "pco"}, {}, {}};
        Curve bpso{"fig4_beamforming_pso_ub", {"phi", "pso_ub"}, {}, {}};
        for (double phi : phi_grid19()) {
            PowerSplit split(phi, net.p_total);
            spco.rows.push_back(
                {fmt17(phi), fmt17(sectoring::connection_outage(net, split, 10.0))});
            spso.rows.push_back(
                {fmt17(phi), fmt17(sectoring::secrecy_outage_ub(net, split, 1.0))});
            bpco.rows.push_back(
                {fmt17(phi),
                 fmt17(beamforming::connection_outage_exact(net, split, 10.0))});
            bpso.rows.push_back(
                {fmt17(phi), fmt17(beamforming::secrecy_outage_ub(net, split, 1.0))});
        }
        Options sec = o;
        sec.scheme = "sectoring";
        emit_curves(dir, command, sec, pt, {spco, spso});
        Options beam = o;
        beam.scheme = "beamforming";
        emit_curves(dir, command, beam, pt, {bpco, bpso});
        return;
    }

    // Figures 5 and 6: optimized phi / capacity vs n for both schemes and
    // alpha in {3,4,5}.
    const std::vector<int> n_grid = {2,  3,  4,  5,  6,  8,  10, 12,
                                     16, 20, 24, 32, 40, 48, 56, 64};
    NetworkParams net;
    net.lambda_l = 0.01;
    net.lambda_e = 0.001;
    net.r = 1.0;
    double sigma = 0.1, epsilon = 0.01;
    for (const std::string& scheme : {std::string("sectoring"), std::string("beamforming")}) {
        for (double alpha : {3.0, 4.0, 5.0}) {
            net.alpha = alpha;
            std::string name = "fig" + std::to_string(o.figure) + "_" + scheme +
                               "_alpha" + std::to_string(static_cast<int>(alpha));
            Curve c{name,
                    o.figure == 5
                        ? std::vector<std::string>{"n", "phi_opt", "feasible"}
                        : std::vector<std::string>{"n", "capacity", "feasible"},
                    {},
                    {}};
            for (int n : n_grid) {
                net.n = n;
                double phi_opt = std::numeric_limits<double>::quiet_NaN();
                double cap = 0.0;
                int feasible = 1;
                try {
                    PowerSplit best =
                        scheme == "sectoring"
                            ? sectoring::optimal_phi_numeric(net, sigma, epsilon)
                            : beamforming::optimal_phi_numeric(net, sigma, epsilon);
                    phi_opt = best.phi;
                    cap = scheme == "sectoring"
                              ? sectoring::capacity_lb(net, best, sigma, epsilon)
                              : beamforming::capacity_approx(net, best, sigma,
                                                             epsilon);
                } catch (const infeasible_error&) {
                    feasible = 0;
                }
                c.rows.push_back({std::to_string(n),
                                  fmt17(o.figure == 5 ? phi_opt : cap),
                                  std::to_string(feasible)});
            }
            Options so = o;
            so.scheme = scheme;
            net.n = 4;
            PointParams pt = {net, o.phi, o.beta_b, o.beta_e, sigma, epsilon};
            emit_curves(dir, command, so, pt, {c});
        }
    }
}

} // namespace

int run(int argc, char** argv) {
    Options o;

    CLI::App app{"closed-form and Monte Carlo outage/secrecy toolkit for "
                 "artificial-noise sectoring and beamforming networks"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(0, 1);

    auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("--lambda-l", o.params.lambda_l,
                        "legitimate transmitter density")->capture_default_str();
        cmd->add_option("--lambda-e", o.params.lambda_e, "eavesdropper density")
            ->capture_default_str();
        cmd->add_option("--r", o.params.r, "intended link distance")
            ->capture_default_str();
        cmd->add_option("--alpha", o.params.alpha, "path loss exponent (> 2)")
            ->capture_default_str();
        cmd->add_option("--n", o.params.n, "antennas / sectors per node (>= 2)")
            ->capture_default_str();
        cmd->add_option("--p-total", o.params.p_total, "total transmit power")
            ->capture_default_str();
        cmd->add_option("--phi", o.phi, "information power fraction in (0,1]")
            ->capture_default_str();
        cmd->add_option("--beta-b", o.beta_b, "connection SIR threshold")
            ->capture_default_str();
        cmd->add_option("--beta-e", o.beta_e, "secrecy SIR threshold")
            ->capture_default_str();
        cmd->add_option("--sigma", o.sigma, "connection outage constraint")
            ->capture_default_str();
        cmd->add_option("--epsilon", o.epsilon, "secrecy outage constraint")
            ->capture_default_str();
        cmd->add_option("--config", o.config_path,
                        "key=value option file (explicit flags win)");
    };
    auto add_mc_flags = [&](CLI::App* cmd) {
        cmd->add_option("--trials", o.trials, "Monte Carlo trials (>= 100)")
            ->capture_default_str();
        cmd->add_option("--seed", o.seed, "base RNG seed")->capture_default_str();
        cmd->add_option("--window-radius", o.window_radius,
                        "simulation disc radius (0 = derive default)")
            ->capture_default_str();
        cmd->add_option("--delta-trunc", o.delta_trunc,
                        "window truncation bias tolerance")->capture_default_str();
        cmd->add_option("--threads", o.threads,
                        "worker threads (never changes results)")
            ->capture_default_str();
    };
    const std::vector<std::string> kQuantities = {
        "pco",       "pso_ub",     "pso_lb",   "pso_lead",
        "pco_exact", "pco_approx", "capacity", "phi_opt"};

    CLI::App* eval = app.add_subcommand("eval", "evaluate one quantity at a point");
    add_model_flags(eval);
    eval->add_option("--scheme", o.scheme, "sectoring or beamforming")
        ->check(CLI::IsMember({"sectoring", "beamforming"}))
        ->capture_default_str();
    eval->add_option("--quantity", o.quantity, "quantity to evaluate")
        ->check(CLI::IsMember(kQuantities))
        ->capture_default_str();
    eval->add_flag("--json", o.json_out, "emit a JSON object");
    eval->callback([&, eval] { apply_config_file(o, eval); do_eval(o, "eval"); });

    CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter to CSV/JSON");
    add_model_flags(sweep);
    sweep->add_option("--scheme", o.scheme, "sectoring or beamforming")
        ->check(CLI::IsMember({"sectoring", "beamforming"}))
        ->capture_default_str();
    sweep->add_option("--quantity", o.quantities,
                      "one or more quantities (comma separated)")
        ->delimiter(',')
        ->check(CLI::IsMember(kQuantities));
    sweep->add_option("--param", o.param, "parameter to sweep")
        ->check(CLI::IsMember({"phi", "beta_b", "beta_e", "lambda_l", "lambda_e",
                               "r", "alpha", "n", "p_total", "sigma", "epsilon"}))
        ->capture_default_str();
    sweep->add_option("--start", o.start, "first swept value")->capture_default_str();
    sweep->add_option("--stop", o.stop, "last swept value")->capture_default_str();
    sweep->add_option("--count", o.count, "grid size (>= 2)")->capture_default_str();
    sweep->add_flag("--log", o.log_scale, "logarithmic spacing");
    sweep->add_option("--output", o.output, "output file path")->required();
    sweep->add_flag("--json", o.json_out, "write JSON instead of CSV");
    sweep->callback([&, sweep] { apply_config_file(o, sweep); do_sweep(o, "sweep"); });

    CLI::App* optimize =
        app.add_subcommand("optimize", "maximize capacity over phi");
    add_model_flags(optimize);
    optimize->add_option("--scheme", o.scheme, "sectoring or beamforming")
        ->check(CLI::IsMember({"sectoring", "beamforming"}))
        ->capture_default_str();
    optimize->add_flag("--json", o.json_out, "emit a JSON object");
    optimize->callback([&, optimize] { apply_config_file(o, optimize); do_optimize(o, "optimize"); });

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo estimate vs analytic value");
    add_model_flags(simulate);
    add_mc_flags(simulate);
    simulate->add_option("--scheme", o.scheme, "sectoring or beamforming")
        ->check(CLI::IsMember({"sectoring", "beamforming"}))
        ->capture_default_str();
    simulate->add_option("--quantity", o.quantity, "pco or pso")
        ->check(CLI::IsMember({"pco", "pso"}))
        ->capture_default_str();
    simulate->add_flag("--json", o.json_out, "emit a JSON object");
    simulate->callback([&, simulate] { apply_config_file(o, simulate); do_simulate(o, "simulate"); });

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "write per-curve CSV data for a figure");
    reproduce->add_option("figure", o.figure, "figure id in 1..6")->required();
    reproduce->add_option("--out-dir", o.out_dir,
                          "output directory (default: ANSEC_OUT_DIR or .)");
    add_mc_flags(reproduce);
    reproduce->add_option("--config", o.config_path,
                          "key=value option file (explicit flags win)");
    reproduce->callback([&, reproduce] { apply_config_file(o, reproduce); do_reproduce(o, "reproduce"); });

    if (argc <= 1) {
        std::cout << app.help();
        return 0;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const capability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace ansec::cli
