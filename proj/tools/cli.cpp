#include "cli.hpp"

#include "hcont/baire.hpp"
#include "hcont/continuity.hpp"
#include "hcont/gallery.hpp"
#include "hcont/io.hpp"
#include "hcont/laws.hpp"
#include "hcont/random.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace hcont::cli {

namespace {

constexpr double residual_threshold = 1e-5;

// Input or environment problem; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw UsageError("cannot open " + path + " for writing");
    }
    f << content;
    f.flush();
    if (!f) {
        throw UsageError("failed writing " + path);
    }
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << '\n'; }

struct ApplyArgs {
    std::string input;
    std::string op;
    std::string output;
};

int cmd_apply(const ApplyArgs& args, std::ostream& out)
{
    const BaireOperator op = parse_operator(args.op);
    const auto f = load_function(args.input);
    const auto g = apply(op, f);
    write_file(args.output, dump_function(g));

    std::size_t changed = 0;
    ExtReal max_width(0.0);
    double width_sum = 0.0;
    bool infinite = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const CellId c{i};
        if (!(f[c] == g[c])) {
            ++changed;
        }
        const ExtReal w = width(g[c]);
        max_width = max(max_width, w);
        if (w.is_finite()) {
            width_sum += w.value();
        } else {
            infinite = true;
        }
    }
    json report;
    report["command"] = "apply";
    report["operator"] = std::string(operator_name(op));
    report["cells"] = g.size();
    report["cells_changed"] = changed;
    report["max_width"] = to_json(max_width);
    report["mean_width"] =
        infinite ? to_json(ExtReal::pos_inf()) : json(width_sum / static_cast<double>(g.size()));
    emit(out, report);
    return ok;
}

struct CheckArgs {
    std::string input;
    std::string mode;
    bool with_oracle = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out)
{
    if (args.mode != "s" && args.mode != "h") {
        throw UsageError("--mode must be 's' or 'h'");
    }
    const auto f = load_function(args.input);
    const auto verdict = args.mode == "s" ? is_s_continuous(f) : is_h_continuous(f);
    const bool holds = args.mode == "s" ? verdict.s_continuous : verdict.h_continuous;

    json report;
    report["command"] = "check";
    report["mode"] = args.mode;
    const json verdict_doc = to_json(verdict, f.complex());
    for (const auto& [k, v] : verdict_doc.items()) {
        report[k] = v;
    }

    bool agrees = true;
    if (args.with_oracle) {
        std::optional<CellIntervalFunction> smaller;
        bool oracle_h = false;
        try {
            oracle_h = brute_force_h_oracle(f);
            if (verdict.s_continuous && !oracle_h) {
                smaller = find_smaller_s_continuous(f);
            }
        } catch (const OracleRefused& e) {
            throw UsageError(e.what());
        }
        agrees = oracle_h == verdict.h_continuous;
        json oracle;
        oracle["h_continuous"] = oracle_h;
        oracle["agrees"] = agrees;
        oracle["smaller_selection"] = smaller ? to_json(*smaller) : json(nullptr);
        report["oracle"] = std::move(oracle);
    }
    emit(out, report);
    return holds && agrees ? ok : check_failed;
}

struct ShockArgs {
    double t_max = 2.0;
    int nt = 201;
    double x_min = -2.0;
    double x_max = 2.0;
    int nx = 401;
    std::string csv;
};

int cmd_shock(const ShockArgs& args, std::ostream& out)
{
    if (!(args.t_max > 0.0) || !std::isfinite(args.t_max)) {
        throw UsageError("--t-max must be positive");
    }
    if (args.nt < 2 || args.nx < 2) {
        throw UsageError("--nt and --nx must be at least 2");
    }
    if (!(args.x_min < args.x_max)) {
        throw UsageError("--x-min must be below --x-max");
    }
    std::ostringstream csv;
    write_sweep_csv(csv, shock_function(), {"t", "x"}, 0.0, args.t_max, args.nt, args.x_min, args.x_max, args.nx);
    write_file(args.csv, csv.str());

    std::size_t on_shock = 0;
    for (int i = 0; i < args.nt; ++i) {
        const double t = args.t_max * i / (args.nt - 1);
        for (int j = 0; j < args.nx; ++j) {
            const double x = args.x_min + (args.x_max - args.x_min) * j / (args.nx - 1);
            on_shock += on_shock_line(t, x) ? 1 : 0;
        }
    }
    json report;
    report["command"] = "shock";
    report["rows"] = static_cast<std::size_t>(args.nt) * static_cast<std::size_t>(args.nx);
    report["shock_rows"] = on_shock;
    emit(out, report);
    return ok;
}

std::vector<std::array<double, 2>> read_points(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::vector<std::array<double, 2>> points;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || (lineno == 1 && line.rfind("t,", 0) == 0)) {
            continue;
        }
        std::istringstream row(line);
        std::array<double, 2> p{};
        char comma = 0;
        if (!(row >> p[0] >> comma >> p[1]) || comma != ',') {
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected 't,x'");
        }
        points.push_back(p);
    }
    return points;
}

struct ResidualArgs {
    std::string input;
    double h = 1e-3;
};

int cmd_residual(const ResidualArgs& args, std::ostream& out)
{
    if (!(args.h > 0.0)) {
        throw UsageError("--h must be positive");
    }
    const auto points = args.input.empty() ? default_residual_sweep() : read_points(args.input);
    const auto u = shock_function();
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    double worst = 0.0;
    std::optional<std::array<double, 2>> worst_point;
    for (const auto& p : points) {
        const auto rep = pde_residual(u, p[0], p[1], args.h);
        if (rep.skipped) {
            ++skipped;
            continue;
        }
        ++evaluated;
        if (!worst_point || std::abs(rep.residual) > worst) {
            worst = std::abs(rep.residual);
            worst_point = p;
        }
    }
    const bool passed = worst < residual_threshold;
    json report;
    report["command"] = "residual";
    report["h"] = args.h;
    report["points"] = points.size();
    report["evaluated"] = evaluated;
    report["skipped"] = skipped;
    report["max_abs_residual"] = worst;
    report["worst_point"] = worst_point ? json(*worst_point) : json(nullptr);
    report["threshold"] = residual_threshold;
    report["passed"] = passed;
    emit(out, report);
    return passed ? ok : check_failed;
}

struct BetaArgs {
    double x_min = -1.0;
    double x_max = 1.0;
    int nx = 201;
    double y_min = -1.0;
    double y_max = 1.0;
    int ny = 201;
    std::string csv;
};

int cmd_beta(const BetaArgs& args, std::ostream& out)
{
    if (args.nx < 2 || args.ny < 2) {
        throw UsageError("--nx and --ny must be at least 2");
    }
    if (!(args.x_min < args.x_max) || !(args.y_min < args.y_max)) {
        throw UsageError("empty sweep range");
    }
    std::ostringstream csv;
    write_sweep_csv(csv, beta_function(), {"x", "y"}, args.x_min, args.x_max, args.nx, args.y_min, args.y_max,
                    args.ny);
    write_file(args.csv, csv.str());
    json report;
    report["command"] = "beta";
    report["rows"] = static_cast<std::size_t>(args.nx) * static_cast<std::size_t>(args.ny);
    emit(out, report);
    return ok;
}

struct EstimateArgs {
    std::string function;
    std::vector<double> point;
    EstimatorOptions options;
};

int cmd_estimate(const EstimateArgs& args, std::ostream& out)
{
    static const std::map<std::string, AnalyticIntervalFunction (*)()> functions{
        {"alpha", &alpha_function}, {"beta", &beta_function}, {"shock", &shock_function}};
    const auto it = functions.find(args.function);
    if (it == functions.end()) {
        throw UsageError("--function must be alpha, beta or shock");
    }
    const auto f = it->second();
    if (args.point.size() != static_cast<std::size_t>(f.dimension())) {
        throw UsageError("--point needs " + std::to_string(f.dimension()) + " coordinate(s) for " + args.function);
    }
    const auto est = numeric_baire_estimate(f, args.point, args.options);
    json report;
    report["command"] = "estimate";
    report["function"] = args.function;
    report["value"] = to_json(f(args.point));
    const json estimate_doc = to_json(est);
    for (const auto& [k, v] : estimate_doc.items()) {
        report[k] = v;
    }
    emit(out, report);
    return ok;
}

struct LawsArgs {
    int count = 100;
    std::uint64_t seed = 1;
    int max_breakpoints = 7;
};

int cmd_laws(const LawsArgs& args, std::ostream& out)
{
    if (args.count < 1 || args.max_breakpoints < 1) {
        throw UsageError("--count and --max-breakpoints must be positive");
    }
    FunctionGenerator gen(args.seed);
    std::vector<std::string> order;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    for (int n = 0; n < args.count; ++n) {
        const auto complex = gen.complex(gen.uniform(1, 2), args.max_breakpoints);
        const auto alphabet = gen.alphabet(6, 0.2);
        const auto f = gen.function(complex, alphabet);
        for (const auto& law : check_operator_laws(f, gen.raise(f, alphabet), gen.widen(f, alphabet))) {
            if (!tally.contains(law.name)) {
                order.push_back(law.name);
            }
            auto& [checked, failed] = tally[law.name];
            ++checked;
            failed += law.holds ? 0 : 1;
        }
    }
    bool all = true;
    json laws;
    for (const auto& name : order) {
        const auto [checked, failed] = tally[name];
        laws[name] = {{"checked", checked}, {"failed", failed}};
        all = all && failed == 0;
    }
    json report;
    report["command"] = "laws";
    report["count"] = args.count;
    report["seed"] = args.seed;
    report["laws"] = std::move(laws);
    report["all_hold"] = all;
    emit(out, report);
    return all ? ok : check_failed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Interval-valued functions: Baire operators, graph completion, s- and H-continuity", "hcont"};
    app.require_subcommand(1);

    ApplyArgs apply_args;
    auto* apply_cmd = app.add_subcommand("apply", "Apply I, S or F to a function spec");
    apply_cmd->add_option("--input", apply_args.input, "Function spec (JSON)")->required();
    apply_cmd->add_option("--op", apply_args.op, "Operator: I, S or F")->required();
    apply_cmd->add_option("--output", apply_args.output, "Where to write the transformed spec")->required();

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "Check s- or H-continuity of a function spec");
    check_cmd->add_option("--input", check_args.input, "Function spec (JSON)")->required();
    check_cmd->add_option("--mode", check_args.mode, "s or h")->required();
    check_cmd->add_flag("--with-oracle", check_args.with_oracle, "Cross-check with the brute-force minimality oracle");

    ShockArgs shock_args;
    auto* shock_cmd = app.add_subcommand("shock", "Sweep the shock solution to CSV (t,x,lo,hi)");
    shock_cmd->add_option("--t-max", shock_args.t_max, "Final time")->capture_default_str();
    shock_cmd->add_option("--nt", shock_args.nt, "Time samples")->capture_default_str();
    shock_cmd->add_option("--x-min", shock_args.x_min)->capture_default_str();
    shock_cmd->add_option("--x-max", shock_args.x_max)->capture_default_str();
    shock_cmd->add_option("--nx", shock_args.nx, "Space samples")->capture_default_str();
    shock_cmd->add_option("--csv", shock_args.csv, "Output CSV path")->required();

    ResidualArgs residual_args;
    auto* residual_cmd = app.add_subcommand("residual", "Finite-difference PDE residual of the shock solution");
    residual_cmd->set_help_flag("--help", "Print this help message and exit");
    residual_cmd->add_option("--input", residual_args.input, "CSV of t,x points (default: built-in sweep)");
    residual_cmd->add_option("--h", residual_args.h, "Difference step")->capture_default_str();

    BetaArgs beta_args;
    auto* beta_cmd = app.add_subcommand("beta", "Sweep beta to CSV (x,y,lo,hi)");
    beta_cmd->add_option("--x-min", beta_args.x_min)->capture_default_str();
    beta_cmd->add_option("--x-max", beta_args.x_max)->capture_default_str();
    beta_cmd->add_option("--nx", beta_args.nx)->capture_default_str();
    beta_cmd->add_option("--y-min", beta_args.y_min)->capture_default_str();
    beta_cmd->add_option("--y-max", beta_args.y_max)->capture_default_str();
    beta_cmd->add_option("--ny", beta_args.ny)->capture_default_str();
    beta_cmd->add_option("--csv", beta_args.csv, "Output CSV path")->required();

    EstimateArgs estimate_args;
    auto* estimate_cmd = app.add_subcommand("estimate", "Sampled lower/upper Baire envelope at a point");
    estimate_cmd->add_option("--function", estimate_args.function, "alpha, beta or shock")->required();
    estimate_cmd->add_option("--point", estimate_args.point, "Coordinates")->required()->expected(1, 2);
    estimate_cmd->add_option("--r0", estimate_args.options.r0)->capture_default_str();
    estimate_cmd->add_option("--levels", estimate_args.options.levels)->capture_default_str();
    estimate_cmd->add_option("--samples", estimate_args.options.samples_per_radius)->capture_default_str();
    estimate_cmd->add_option("--tolerance", estimate_args.options.tolerance)->capture_default_str();

    LawsArgs laws_args;
    auto* laws_cmd = app.add_subcommand("laws", "Run the operator-law property suite on random functions");
    laws_cmd->add_option("--count", laws_args.count)->capture_default_str();
    laws_cmd->add_option("--seed", laws_args.seed)->capture_default_str();
    laws_cmd->add_option("--max-breakpoints", laws_args.max_breakpoints)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return usage_error;
    }

    try {
        if (*apply_cmd) return cmd_apply(apply_args, out);
        if (*check_cmd) return cmd_check(check_args, out);
        if (*shock_cmd) return cmd_shock(shock_args, out);
        if (*residual_cmd) return cmd_residual(residual_args, out);
        if (*beta_cmd) return cmd_beta(beta_args, out);
        if (*estimate_cmd) return cmd_estimate(estimate_args, out);
        if (*laws_cmd) return cmd_laws(laws_args, out);
    } catch (const std::exception& e) {
        err << "hcont: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace hcont::cli
