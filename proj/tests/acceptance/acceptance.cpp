// Acceptance suite: one PASS/FAIL line per criterion, with wall time
// against the pinned bound. Exit status is nonzero if any criterion fails.
//
//   acceptance                      run everything
//   acceptance --regenerate-golden  rewrite the golden files, then run

#include "cli.hpp"

#include "hcont/baire.hpp"
#include "hcont/continuity.hpp"
#include "hcont/gallery.hpp"
#include "hcont/io.hpp"
#include "hcont/random.hpp"

#include "../support.hpp"

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace hcont;
namespace fs = std::filesystem;

namespace {

bool regenerate = false;

struct Outcome {
    bool passed = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why)
{
    if (o.passed) o.detail = why;
    o.passed = false;
}

// ---- test-side reference predicates ----

bool lo_leq(const Interval& a, const Interval& b) { return a.lo() <= b.lo(); }
bool hi_leq(const Interval& a, const Interval& b) { return a.hi() <= b.hi(); }
bool ord_leq(const Interval& a, const Interval& b) { return lo_leq(a, b) && hi_leq(a, b); }
bool inside(const Interval& a, const Interval& b) { return b.lo() <= a.lo() && a.hi() <= b.hi(); }

template <class Pred>
bool all_cells(const CellIntervalFunction& f, const CellIntervalFunction& g, Pred p)
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!p(f[CellId{i}], g[CellId{i}])) return false;
    }
    return true;
}

bool same(const CellIntervalFunction& f, const CellIntervalFunction& g)
{
    return all_cells(f, g, [](const Interval& a, const Interval& b) { return a.lo() == b.lo() && a.hi() == b.hi(); });
}

// ---- criteria ----

// Closed-form completion value at the jump of a, [b, c], d.
Interval step_completion_at_jump(int a, int b, int c, int d)
{
    return {static_cast<double>(std::min({a, b, d})), static_cast<double>(std::max({a, c, d}))};
}

Outcome single_jump_s_continuity()
{
    Outcome o;
    if (is_s_continuous(make_step(0.0, 5.0, 1.0)).s_continuous) fail(o, "(0,5,1) step reported s-continuous");
    int checked = 0;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = b; c <= 2; ++c)
                for (int d = a; d <= 2; ++d) {
                    const auto f = make_interval_step(a, Interval(b, c), d);
                    const bool expected = b <= a && d <= c;
                    const bool direct = step_completion_at_jump(a, b, c, d) == Interval(b, c);
                    const bool got = is_s_continuous(f).s_continuous;
                    const bool fixed = graph_completion(f) == f;
                    ++checked;
                    if (got != expected || direct != expected || fixed != expected) {
                        fail(o, "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + "," + std::to_string(d) + ")");
                    }
                }
    o.detail = o.passed ? std::to_string(checked) + " instances" : o.detail;
    return o;
}

Outcome single_jump_h_continuity()
{
    Outcome o;
    int s_instances = 0, h_instances = 0;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = b; c <= 2; ++c)
                for (int d = a; d <= 2; ++d) {
                    const auto f = make_interval_step(a, Interval(b, c), d);
                    if (!is_s_continuous(f).s_continuous) continue;
                    ++s_instances;
                    const bool got = is_h_continuous(f).h_continuous;
                    h_instances += got ? 1 : 0;
                    if (got != (a == b && c == d)) {
                        fail(o, "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + "," + std::to_string(d) + ")");
                    }
                }
    if (o.passed) o.detail = std::to_string(s_instances) + " s-continuous, " + std::to_string(h_instances) + " H";
    return o;
}

Outcome operator_laws()
{
    Outcome o;
    FunctionGenerator gen(20240501);
    const auto check = [&](bool ok, const char* law, int trial) {
        if (!ok) fail(o, std::string(law) + " fails on trial " + std::to_string(trial));
    };
    for (int trial = 0; trial < 500; ++trial) {
        const auto k = gen.complex(gen.uniform(1, 2), 7);
        const auto alphabet = gen.alphabet(6, 0.2);
        const auto f = gen.function(k, alphabet);
        const auto up = gen.raise(f, alphabet);
        const auto wide = gen.widen(f, alphabet);
        const auto [lower, upper] = endpoint_decomposition(f);
        const auto i_f = lower_baire(f);
        const auto s_f = upper_baire(f);
        const auto f_f = graph_completion(f);

        // The operators themselves against the geometric neighbourhood envelope.
        bool geometric = true;
        for (std::size_t n = 0; n < f.size(); ++n) {
            const auto env = testing::neighbourhood_envelope(f, CellId{n});
            geometric = geometric && f_f[CellId{n}] == env && i_f[CellId{n}] == Interval(env.lo()) &&
                        s_f[CellId{n}] == Interval(env.hi());
        }
        check(geometric, "neighbourhood envelope", trial);

        check(same(i_f, lower_baire(lower)) && same(s_f, upper_baire(upper)), "endpoint identity I/S", trial);
        check(all_cells(f_f, i_f, [](auto& a, auto& b) { return a.lo() == b.lo(); }) &&
                  all_cells(f_f, s_f, [](auto& a, auto& b) { return a.hi() == b.hi(); }) &&
                  all_cells(f_f, lower_baire(lower), [](auto& a, auto& b) { return a.lo() == b.lo(); }) &&
                  all_cells(f_f, upper_baire(upper), [](auto& a, auto& b) { return a.hi() == b.hi(); }),
              "F = [I, S]", trial);
        check(all_cells(i_f, f, lo_leq) && all_cells(f, s_f, [](auto& a, auto& b) { return a.hi() <= b.hi(); }),
              "chain", trial);
        check(all_cells(f, f_f, inside), "inclusion", trial);
        check(all_cells(lower_baire(f), lower_baire(up), ord_leq) && all_cells(upper_baire(f), upper_baire(up), ord_leq) &&
                  all_cells(f_f, graph_completion(up), ord_leq),
              "monotone order", trial);
        check(all_cells(f_f, graph_completion(wide), inside), "monotone inclusion", trial);
        check(same(lower_baire(i_f), i_f) && same(upper_baire(s_f), s_f) && same(graph_completion(f_f), f_f),
              "idempotence", trial);
        check(all_cells(graph_completion(f_f), f_f, inside), "F(f) s-continuous", trial);
        if (!o.passed) break;
    }
    if (o.passed) o.detail = "500 functions";
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    FunctionGenerator gen(77001);
    int h_count = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto k = gen.small_complex(9);
        const auto alphabet = gen.alphabet(static_cast<std::size_t>(gen.uniform(1, 4)));
        CellIntervalFunction f = trial % 3 == 0   ? gen.h_continuous(k, alphabet)
                                 : trial % 3 == 1 ? graph_completion(gen.point_function(k, alphabet))
                                                  : graph_completion(gen.function(k, alphabet));
        if (!is_s_continuous(f).s_continuous) {
            fail(o, "generator produced a non-s-continuous function");
            break;
        }
        const bool fast = is_h_continuous(f).h_continuous;
        h_count += fast ? 1 : 0;
        if (fast != brute_force_h_oracle(f)) {
            fail(o, "disagreement on trial " + std::to_string(trial) + ":\n" + dump_function(f));
            break;
        }
    }
    if (o.passed) {
        o.detail = "300 functions, " + std::to_string(h_count) + " H-continuous";
        if (h_count == 0 || h_count == 300) fail(o, "degenerate sample: " + std::to_string(h_count) + " H-continuous");
    }
    return o;
}

Outcome dense_determination()
{
    Outcome o;
    FunctionGenerator gen(31337);
    std::array<int, 4> hypothesis_held{};
    const std::array<DenseMode, 4> modes{DenseMode::lower, DenseMode::upper, DenseMode::interval, DenseMode::equal};
    for (int trial = 0; trial < 500; ++trial) {
        const auto k = gen.complex(gen.uniform(1, 2), 3);
        const auto alphabet = gen.alphabet(5);
        std::map<CellId, Interval> f_tops, g_tops;
        const int relation = trial % 4;
        for (auto c : k->top_cells()) {
            const Interval v(alphabet[static_cast<std::size_t>(gen.uniform(0, 4))]);
            f_tops.emplace(c, v);
            Interval w = v;
            const ExtReal other = alphabet[static_cast<std::size_t>(gen.uniform(0, 4))];
            if (relation == 1 && gen.coin()) w = Interval(max(v.lo(), other));
            if (relation == 2 && gen.coin()) w = Interval(min(v.lo(), other));
            if (relation == 3) w = Interval(other);
            g_tops.emplace(c, w);
        }
        const auto f = extend_from_dense(k, f_tops);
        const auto g = extend_from_dense(k, g_tops);
        for (const auto& [x, y] : {std::pair{&f, &g}, std::pair{&g, &f}}) {
            for (std::size_t m = 0; m < modes.size(); ++m) {
                if (!dense_compare(*x, *y, modes[m])) continue;
                ++hypothesis_held[m];
                const bool conclusion = modes[m] == DenseMode::equal ? same(*x, *y) : all_cells(*x, *y, ord_leq);
                if (!conclusion) {
                    fail(o, "clause " + std::string(1, static_cast<char>('a' + m)) + " counterexample on trial " +
                                std::to_string(trial));
                }
            }
        }
    }
    std::ostringstream d;
    d << "hypothesis held a=" << hypothesis_held[0] << " b=" << hypothesis_held[1] << " c=" << hypothesis_held[2]
      << " d=" << hypothesis_held[3];
    if (o.passed) o.detail = d.str();
    for (int n : hypothesis_held) {
        if (n == 0) fail(o, "vacuous: " + d.str());
    }
    return o;
}

Outcome alpha_and_beta()
{
    Outcome o;
    if (!is_h_continuous(make_alpha()).h_continuous) fail(o, "alpha not H-continuous");
    const auto beta = beta_function();
    double worst_bracket = 0.0, worst_width = 0.0;
    for (int k = 1; k <= 10; ++k) {
        const double theta = 0.37 * k;
        const double on = 1.0 / std::sqrt(k * std::numbers::pi);
        const std::vector<double> p{on * std::cos(theta), on * std::sin(theta)};
        const auto est = numeric_baire_estimate(beta, p);
        const double err = std::max(std::abs(est.lower.value() + 1.0), std::abs(est.upper.value() - 1.0));
        worst_bracket = std::max(worst_bracket, err);
        if (!(err <= 1e-6)) fail(o, "circle k=" + std::to_string(k) + " bracket off by " + std::to_string(err));

        const double off = 1.0 / std::sqrt((k + 0.5) * std::numbers::pi);
        const std::vector<double> q{off * std::cos(theta), off * std::sin(theta)};
        const auto est_off = numeric_baire_estimate(beta, q);
        const double w = est_off.upper.value() - est_off.lower.value();
        worst_width = std::max(worst_width, w);
        if (!(w <= 1e-9)) fail(o, "off-circle k=" + std::to_string(k) + " width " + std::to_string(w));
    }
    if (o.passed) {
        std::ostringstream d;
        d << "max bracket error " << worst_bracket << ", max off-circle width " << worst_width;
        o.detail = d.str();
    }
    return o;
}

Outcome shock_solution()
{
    Outcome o;
    const auto u = shock_function();
    int evaluated = 0;
    double worst = 0.0;
    for (const auto& p : default_residual_sweep()) {
        const auto r = pde_residual(u, p[0], p[1], 1e-3);
        if (r.skipped) continue;
        ++evaluated;
        worst = std::max(worst, std::abs(r.residual));
    }
    if (!(worst < 1e-5)) fail(o, "max residual " + std::to_string(worst));
    if (evaluated < 990) fail(o, "only " + std::to_string(evaluated) + " points evaluated");

    const double speed = shock_speed_check(1.0, 3.0);
    // States on either side, read off the solution itself.
    const double xs = 0.5;
    const double left = shock_solution_eval(2.0, xs - 1e-6).lo().value();
    const double right = shock_solution_eval(2.0, xs + 1e-6).lo().value();
    const double rh = (left + right) / 2.0;
    if (!(std::abs(speed - 0.5) <= 1e-6)) fail(o, "speed " + std::to_string(speed));
    if (!(std::abs(speed - rh) <= 1e-6) || rankine_hugoniot_speed(2.0) != rh) fail(o, "speed differs from jump condition");
    if (o.passed) {
        std::ostringstream d;
        d << evaluated << " points, max residual " << worst << ", speed " << std::setprecision(12) << speed;
        o.detail = d.str();
    }
    return o;
}

// ---- determinism / golden files ----

struct Invocation {
    std::string name;
    std::vector<std::string> args;
    std::string output_file; // captured alongside stdout when nonempty
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string capture(const Invocation& inv, const fs::path& scratch)
{
    std::vector<std::string> args{"hcont"};
    for (const auto& a : inv.args) {
        args.push_back(a == "@out" ? (scratch / inv.output_file).string() : a);
    }
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    std::string text = "exit " + std::to_string(code) + "\n" + out.str();
    if (!inv.output_file.empty()) {
        text += "--- " + inv.output_file + "\n" + slurp(scratch / inv.output_file);
        fs::remove(scratch / inv.output_file);
    }
    return text;
}

Outcome golden_determinism()
{
    Outcome o;
    const fs::path golden = HCONT_GOLDEN_DIR;
    const auto in = [&](const char* name) { return (golden / name).string(); };
    const std::vector<Invocation> invocations{
        {"apply_f_step", {"apply", "--input", in("step.json"), "--op", "F", "--output", "@out"}, "out.json"},
        {"check_s_step", {"check", "--input", in("step.json"), "--mode", "s"}, ""},
        {"check_h_band_oracle", {"check", "--input", in("band.json"), "--mode", "h", "--with-oracle"}, ""},
        {"shock_small",
         {"shock", "--t-max", "2", "--nt", "9", "--x-min", "-2", "--x-max", "2", "--nx", "17", "--csv", "@out"},
         "out.csv"},
        {"residual_default", {"residual", "--h", "1e-3"}, ""},
    };
    const fs::path scratch = fs::temp_directory_path() / ("hcont_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(scratch);
    for (const auto& inv : invocations) {
        const auto first = capture(inv, scratch);
        const auto second = capture(inv, scratch);
        const auto path = golden / (inv.name + ".golden");
        if (regenerate) {
            std::ofstream(path, std::ios::binary) << first;
        }
        if (first != second) fail(o, inv.name + ": two runs differ");
        if (!fs::exists(path)) {
            fail(o, inv.name + ": missing golden file " + path.string());
        } else if (slurp(path) != first) {
            fail(o, inv.name + ": output differs from " + path.string());
        }
    }
    fs::remove_all(scratch);
    if (o.passed) o.detail = std::to_string(invocations.size()) + " commands";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--regenerate-golden") == 0) {
            regenerate = true;
        } else {
            std::cerr << "usage: acceptance [--regenerate-golden]\n";
            return 2;
        }
    }

    struct Criterion {
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"single-jump s-continuity sweep", 1.0, single_jump_s_continuity},
        {"single-jump H-continuity sweep", 1.0, single_jump_h_continuity},
        {"operator laws", 10.0, operator_laws},
        {"endpoint characterization vs brute-force oracle", 60.0, oracle_equivalence},
        {"dense-subset determination", 10.0, dense_determination},
        {"alpha and beta", 5.0, alpha_and_beta},
        {"shock solution", 5.0, shock_solution},
        {"CLI determinism (golden files)", 0.0, golden_determinism},
    };

    int failures = 0;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        const auto& c = criteria[n];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            fail(o, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            fail(o, "took " + std::to_string(secs) + " s");
        }
        failures += o.passed ? 0 : 1;
        std::cout << (o.passed ? "PASS" : "FAIL") << " [" << n + 1 << "] " << c.name << " (" << std::fixed
                  << std::setprecision(3) << secs << " s";
        if (c.limit_seconds > 0) std::cout << ", limit " << std::setprecision(0) << c.limit_seconds << " s";
        std::cout << std::defaultfloat << ") " << o.detail << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
