#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ndslab/analysis.hpp"
#include "ndslab/config.hpp"
#include "ndslab/errors.hpp"
#include "ndslab/fixtures.hpp"
#include "ndslab/record.hpp"
#include "ndslab/report.hpp"
#include "ndslab/shadowing.hpp"
#include "ndslab/theorems.hpp"

namespace {

using namespace ndslab;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kViolation = 2;

struct Cli {
    std::optional<std::string> config_path;
    std::optional<std::string> fixture;
    std::optional<std::string> second_fixture;
    std::vector<std::string> v;
    std::optional<std::string> u;
    std::vector<std::string> box_u;
    std::vector<std::string> box_v;
    std::optional<std::string> center;
    std::optional<std::string> delta;
    std::optional<std::string> epsilon;
    std::optional<long> horizon;
    std::optional<std::uint64_t> seed;
    std::optional<long> trials;
    std::optional<long> length;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::string> orbit;
};

void add_common(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--config", cli.config_path, "query file with key = value lines");
    cmd->add_option("--fixture", cli.fixture, "built-in system name");
    cmd->add_option("--horizon", cli.horizon, "largest time index H");
    cmd->add_option("--delta", cli.delta, "separation threshold, rational like 1/2");
    cmd->add_option("--epsilon", cli.epsilon, "radius, rational like 1/20");
    cmd->add_option("--seed", cli.seed, "random seed (required for sampled analyses)");
    cmd->add_option("--trials", cli.trials, "number of random trials");
    cmd->add_option("--format", cli.format, "records or table");
    cmd->add_option("--out", cli.out, "write the report here instead of stdout");
}

RunConfig resolve(const Cli& cli) {
    RunConfig cfg = cli.config_path ? load_config(*cli.config_path) : RunConfig{};
    if (cli.fixture) cfg.fixture_name = cli.fixture;
    if (cli.second_fixture) cfg.second_fixture = cli.second_fixture;
    if (!cli.v.empty()) {
        cfg.vs.clear();
        for (const std::string& s : cli.v) cfg.vs.push_back(parse_open_interval(s));
    }
    if (cli.u) cfg.u = parse_open_interval(*cli.u);
    if (!cli.box_u.empty()) {
        cfg.box_u = VietorisBox{};
        for (const std::string& s : cli.box_u) cfg.box_u->opens.push_back(parse_open_interval(s));
    }
    if (!cli.box_v.empty()) {
        cfg.box_v = VietorisBox{};
        for (const std::string& s : cli.box_v) cfg.box_v->opens.push_back(parse_open_interval(s));
    }
    if (cli.center) {
        std::vector<Rational> pts;
        std::stringstream ss(*cli.center);
        std::string tok;
        while (std::getline(ss, tok, ',')) pts.push_back(Rational::parse(tok));
        cfg.center = FiniteSubset(std::move(pts));
    }
    if (cli.delta) cfg.delta = Rational::parse(*cli.delta);
    if (cli.epsilon) cfg.epsilon = Rational::parse(*cli.epsilon);
    if (cli.horizon) cfg.horizon = *cli.horizon;
    if (cli.seed) cfg.seed = *cli.seed;
    if (cli.trials) cfg.trials = static_cast<std::size_t>(*cli.trials);
    if (cli.length) cfg.length = static_cast<std::size_t>(*cli.length);
    if (cli.format) cfg.format = *cli.format;
    if (cli.out) cfg.out_path = *cli.out;
    if (cli.orbit) cfg.orbit_file = *cli.orbit;
    return cfg;
}

void deliver(const std::vector<Report>& reports, const RunConfig& cfg) {
    std::string text = emit(reports, cfg.format);
    if (cfg.out_path) {
        std::ofstream f(*cfg.out_path, std::ios::binary);
        if (!f) throw QueryError("cannot write " + *cfg.out_path);
        f << text;
    } else {
        std::cout << text;
    }
}

Rational need(const std::optional<Rational>& v, const char* name) {
    if (!v) throw QueryError(std::string("missing required parameter: ") + name);
    return *v;
}

std::uint64_t need_seed(const RunConfig& cfg) {
    if (!cfg.seed) throw QueryError("a --seed is required for randomized analyses");
    return *cfg.seed;
}

int cmd_sensitivity(const Cli& cli) {
    RunConfig cfg = resolve(cli);
    if (cfg.vs.empty()) throw QueryError("at least one --v interval is required");
    Rational delta = need(cfg.delta, "delta");
    MapSchedule sched = cfg.schedule();
    std::vector<Report> reports;
    if (cfg.vs.size() == 1) {
        TimeSet s = sensitivity_timeset({sched, cfg.vs, delta, cfg.horizon});
        reports.push_back(timeset_report("sensitivity-timeset", s, classify(s, cfg.thresholds)));
    } else {
        TimeSet s = multi_sensitivity_timeset(sched, cfg.vs, delta, cfg.horizon);
        reports.push_back(
            timeset_report("multi-sensitivity-timeset", s, classify(s, cfg.thresholds)));
    }
    deliver(reports, cfg);
    return kOk;
}

int cmd_transitivity(const Cli& cli) {
    RunConfig cfg = resolve(cli);
    MapSchedule sched = cfg.schedule();
    std::vector<Report> reports;
    if (cfg.box_u || cfg.box_v) {
        if (!cfg.box_u || !cfg.box_v)
            throw QueryError("both --box-u and --box-v are required for the hyperspace form");
        TimeSet s = vietoris_hitting_timeset(sched, *cfg.box_u, *cfg.box_v, cfg.horizon);
        reports.push_back(
            timeset_report("vietoris-hitting-timeset", s, classify(s, cfg.thresholds)));
    } else {
        if (!cfg.u || cfg.vs.size() != 1)
            throw QueryError("--u and a single --v are required for the base form");
        TimeSet s = hitting_timeset({sched, *cfg.u, cfg.vs[0], cfg.horizon});
        reports.push_back(timeset_report("hitting-timeset", s, classify(s, cfg.thresholds)));
    }
    deliver(reports, cfg);
    return kOk;
}

int cmd_product(const Cli& cli) {
    RunConfig cfg = resolve(cli);
    if (!cfg.u || cfg.vs.size() != 1)
        throw QueryError("--u and a single --v are required (rectangle U x V)");
    Rational delta = need(cfg.delta, "delta");
    ProductSystem sys{cfg.schedule(), cfg.schedule_second()};
    TimeSet s = product_sensitivity_timeset(sys, *cfg.u, cfg.vs[0], delta, cfg.horizon);
    std::vector<Report> reports{
        timeset_report("product-sensitivity-timeset", s, classify(s, cfg.thresholds))};
    deliver(reports, cfg);
    return kOk;
}

int cmd_hyperspace(const Cli& cli) {
    RunConfig cfg = resolve(cli);
    if (!cfg.center) throw QueryError("--center points are required");
    Rational delta = need(cfg.delta, "delta");
    Rational eps = need(cfg.epsilon, "epsilon");
    HyperSearchParams params;
    params.seed = need_seed(cfg);
    MapSchedule sched = cfg.schedule();
    HyperSensitivityResult res =
        hyperspace_sensitivity_timeset(sched, {*cfg.center, eps}, delta, cfg.horizon, params);
    std::vector<Report> reports{timeset_report("hyperspace-sensitivity-timeset", res.certified,
                                               classify(res.certified, cfg.thresholds))};
    for (const HyperWitness& w : res.witnesses) {
        Report r;
        r.kind = "hyper-witness";
        r.add("time", std::to_string(w.time));
        r.add_quoted("witness", w.witness.str());
        r.add_quoted("separation", w.separation.str());
        reports.push_back(std::move(r));
    }
    deliver(reports, cfg);
    return kOk;
}

/// Pseudo-orbit file: `delta = "1/50"` plus `points = [...]` (base) or
/// `sets = [[...], ...]` (hyperspace).
struct OrbitFile {
    Rational delta;
    std::vector<Rational> points;
    std::vector<FiniteSubset> sets;
};

OrbitFile read_orbit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw QueryError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    OrbitFile out;
    bool have_delta = false;
    for (const auto& [key, value] : parse_config_text(buf.str())) {
        if (key == "delta") {
            out.delta = Rational::parse(value.text);
            have_delta = true;
        } else if (key == "points") {
            for (const RecordValue& e : value.list) out.points.push_back(Rational::parse(e.text));
        } else if (key == "sets") {
            for (const RecordValue& e : value.list) {
                std::vector<Rational> pts;
                for (const RecordValue& p : e.list) pts.push_back(Rational::parse(p.text));
                out.sets.push_back(FiniteSubset(std::move(pts)));
            }
        } else {
            throw QueryError("orbit file: unknown key '" + key + "'");
        }
    }
    if (!have_delta) throw QueryError("orbit file: missing delta");
    if (out.points.empty() == out.sets.empty())
        throw QueryError("orbit file: give exactly one of 'points' or 'sets'");
    return out;
}

Report tracer_report(const TracerSet& ts) {
    Report r;
    r.kind = "tracer-set";
    r.add_quoted("epsilon", ts.epsilon.str());
    r.add_quoted("carrier", ts.carrier.str());
    r.add_quoted("margin", ts.margin.str());
    r.add("traced", ts.carrier.empty() ? "false"
                                       : (ts.margin > Rational(0) ? "true" : "indeterminate"));
    return r;
}

int cmd_shadowing(const Cli& cli) {
    RunConfig cfg = resolve(cli);
    MapSchedule sched = cfg.schedule();
    Rational eps = need(cfg.epsilon, "epsilon");
    std::vector<Report> reports;
    if (cfg.orbit_file) {
        OrbitFile of = read_orbit_file(*cfg.orbit_file);
        if (of.points.empty()) throw QueryError("analyze-shadowing expects a base orbit file");
        ValidationResult val = validate_pseudo_orbit(sched, of.points, of.delta);
        Report vr;
        vr.kind = "pseudo-orbit";
        vr.add("length", std::to_string(of.points.size() - 1));
        vr.add_quoted("delta", of.delta.str());
        vr.add("valid", val.valid ? "true" : "false");
        for (const StepViolation& sv : val.violations)
            vr.add("gap_" + std::to_string(sv.index), quote_string(sv.gap.str()));
        reports.push_back(std::move(vr));
        if (val.valid) {
            reports.push_back(tracer_report(tracer_set(sched, {of.points, of.delta}, eps)));
        }
        deliver(reports, cfg);
        return val.valid ? kOk : kViolation;
    }
    Rational delta = need(cfg.delta, "delta");
    ShadowingReport rep =
        finite_shadowing_check(sched, eps, delta, cfg.length, cfg.trials, need_seed(cfg));
    Report r;
    r.kind = "shadowing-report";
    r.add_quoted("epsilon", rep.epsilon.str());
    r.add_quoted("delta", rep.delta.str());
    r.add("length", std::to_string(rep.length));
    r.add("trials", std::to_string(rep.trials));
    r.add("traced", std::to_string(rep.traced));
    r.add_quoted("modulus_estimate", rep.modulus_estimate.str());
    reports.push_back(std::move(r));
    for (const ShadowingFailure& f : rep.failures) {
        Report fr;
        fr.kind = "shadowing-failure";
        fr.add("trial", std::to_string(f.trial));
        std::string pts;
        for (const Rational& p : f.orbit.points) {
            if (!pts.empty()) pts += " ";
            pts += p.str();
        }
        fr.add_quoted("points", pts);
        reports.push_back(std::move(fr));
    }
    deliver(reports, cfg);
    return kOk;
}

int cmd_lift(const Cli& cli) {
    RunConfig cfg = resolve(cli);
    if (!cfg.orbit_file) throw QueryError("lift requires --orbit with a hyperspace orbit file");
    MapSchedule sched = cfg.schedule();
    OrbitFile of = read_orbit_file(*cfg.orbit_file);
    if (of.sets.empty()) throw QueryError("lift expects a hyperspace orbit file with 'sets'");
    HyperPseudoOrbit hpo{of.sets, of.delta};
    std::vector<PseudoOrbit> lifted = lift_hyper_pseudo_orbit(sched, hpo);
    std::vector<Report> reports;
    bool ok = true;
    for (std::size_t j = 0; j < lifted.size(); ++j) {
        Report r;
        r.kind = "pseudo-orbit";
        r.add("index", std::to_string(j));
        std::string pts;
        for (const Rational& p : lifted[j].points) {
            if (!pts.empty()) pts += " ";
            pts += p.str();
        }
        r.add_quoted("points", pts);
        bool valid = validate_pseudo_orbit(sched, lifted[j].points, of.delta).valid;
        r.add("valid", valid ? "true" : "false");
        ok = ok && valid;
        reports.push_back(std::move(r));
    }
    Report sum;
    sum.kind = "lift-summary";
    sum.add("orbits", std::to_string(lifted.size()));
    sum.add_quoted("delta", of.delta.str());
    if (cfg.epsilon) {
        HyperTraceResult tr = hyper_trace_assemble(sched, hpo, lifted, *cfg.epsilon);
        if (tr.traced) {
            sum.add_quoted("traced_set", tr.traced->str());
            sum.add_quoted("max_step_distance", tr.max_step_distance.str());
        } else {
            sum.add("traced_set", "none");
            sum.add("failing_component",
                    tr.failing_component ? std::to_string(*tr.failing_component) : "none");
        }
    }
    sum.add("postconditions", ok ? "true" : "false");
    reports.push_back(std::move(sum));
    deliver(reports, cfg);
    return ok ? kOk : kViolation;
}

int cmd_verify(const Cli& cli, bool all, const std::string& id) {
    RunConfig cfg = resolve(cli);
    std::uint64_t seed = cfg.seed.value_or(1);
    std::vector<TheoremCheckResult> results;
    if (all || id.empty()) {
        results = verify_all_theorems(seed);
    } else {
        results.push_back(run_theorem_check(id, seed));
    }
    std::vector<Report> reports;
    std::size_t violations = 0;
    for (const TheoremCheckResult& r : results) {
        violations += r.violations;
        reports.push_back(theorem_report(r));
    }
    deliver(reports, cfg);
    return violations == 0 ? kOk : kViolation;
}

int cmd_list_fixtures(const Cli& cli) {
    RunConfig cfg = resolve(cli);
    std::vector<Report> reports;
    for (const Fixture& f : fixtures()) {
        Report r;
        r.kind = "fixture";
        r.add_quoted("name", f.name);
        r.add("period", std::to_string(f.schedule.period()));
        r.add_quoted("description", f.description);
        reports.push_back(std::move(r));
    }
    deliver(reports, cfg);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis lab for time-varying interval maps and their hyperspace lifts"};
    app.require_subcommand(1);

    Cli cli;
    bool all = false;
    std::string theorem_id;

    auto* sens = app.add_subcommand("analyze-sensitivity",
                                    "time-set of expansion past delta on given intervals");
    sens->add_option("--v", cli.v, "open interval like (2/5,1/2); repeat for multi-sensitivity");
    add_common(sens, cli);

    auto* trans = app.add_subcommand("analyze-transitivity", "hitting time-set between open sets");
    trans->add_option("--u", cli.u, "source open interval");
    trans->add_option("--v", cli.v, "target open interval");
    trans->add_option("--box-u", cli.box_u, "source Vietoris box member; repeatable");
    trans->add_option("--box-v", cli.box_v, "target Vietoris box member; repeatable");
    add_common(trans, cli);

    auto* prod = app.add_subcommand("analyze-product", "sensitivity of a two-factor product");
    prod->add_option("--u", cli.u, "first-factor open interval");
    prod->add_option("--v", cli.v, "second-factor open interval");
    prod->add_option("--second-fixture", cli.second_fixture, "fixture for the second factor");
    add_common(prod, cli);

    auto* hyper = app.add_subcommand("analyze-hyperspace",
                                     "certified sensitivity of the induced finite-set system");
    hyper->add_option("--center", cli.center, "comma-separated rational points of the center set");
    add_common(hyper, cli);

    auto* shad = app.add_subcommand("analyze-shadowing",
                                    "tracer sets and finite shadowing trials");
    shad->add_option("--orbit", cli.orbit, "pseudo-orbit file to trace (skips random trials)");
    shad->add_option("--length", cli.length, "pseudo-orbit length m");
    add_common(shad, cli);

    auto* lift = app.add_subcommand("lift",
                                    "decompose a hyperspace pseudo-orbit into base pseudo-orbits");
    lift->add_option("--orbit", cli.orbit, "hyperspace pseudo-orbit file")->required();
    add_common(lift, cli);

    auto* verify = app.add_subcommand("verify-theorems", "run the evidence suite");
    verify->add_flag("--all", all, "run every check");
    verify->add_option("--id", theorem_id, "run a single check by id");
    add_common(verify, cli);

    auto* listf = app.add_subcommand("list-fixtures", "describe the built-in systems");
    add_common(listf, cli);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sens->parsed()) return cmd_sensitivity(cli);
        if (trans->parsed()) return cmd_transitivity(cli);
        if (prod->parsed()) return cmd_product(cli);
        if (hyper->parsed()) return cmd_hyperspace(cli);
        if (shad->parsed()) return cmd_shadowing(cli);
        if (lift->parsed()) return cmd_lift(cli);
        if (verify->parsed()) return cmd_verify(cli, all, theorem_id);
        if (listf->parsed()) return cmd_list_fixtures(cli);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
