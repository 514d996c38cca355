#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "lct/analysis.hpp"
#include "lct/dlct.hpp"
#include "lct/kernels.hpp"
#include "lct/sampling.hpp"
#include "lct/signal_io.hpp"
#include "num_io.hpp"

namespace {

constexpr int kExitUsage = 2;   // input / usage error
constexpr int kExitDomain = 3;  // mathematical domain error

lct::Signal random_signal(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<lct::cplx> samples(static_cast<size_t>(n));
    for (auto& s : samples) s = {dist(rng), dist(rng)};
    return lct::Signal(std::move(samples));
}

double time_best_of(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

void print_plan(const lct::SamplingPlan& plan) {
    using lct::detail::format_double;
    std::cout << "{\"delta_max\": " << format_double(plan.delta_max)
              << ", \"n_min\": " << plan.n_min << ", \"discrete_params\": {\"a\": "
              << format_double(plan.discrete_params.a())
              << ", \"b\": " << format_double(plan.discrete_params.b())
              << ", \"c\": " << format_double(plan.discrete_params.c())
              << ", \"d\": " << format_double(plan.discrete_params.d())
              << "}, \"oversampling_required\": "
              << (plan.oversampling_required ? "true" : "false") << "}\n";
}

bool has_json_extension(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Fast discrete linear canonical transform toolkit"};
    app.require_subcommand(1);

    // ---- transform ----
    auto* transform = app.add_subcommand("transform", "Apply a transform to a signal file");
    std::string in_path, out_path;
    std::vector<double> abcd, fresnel_args;
    double frft_alpha = 0.0, scale_sigma = 0.0;
    bool inverse_flag = false;
    transform->add_option("input", in_path, "input signal file (CSV or JSON)")->required();
    transform->add_option("output", out_path, "output signal file")->required();
    auto* opt_params = transform->add_option("--params", abcd, "matrix entries a b c d")
                           ->expected(4);
    auto* opt_frft = transform->add_option("--frft", frft_alpha, "fractional angle (radians)");
    auto* opt_fresnel =
        transform->add_option("--fresnel", fresnel_args, "wavelength and distance")->expected(2);
    auto* opt_scale = transform->add_option("--scale", scale_sigma, "scaling parameter");
    transform->add_flag("--inverse", inverse_flag, "apply the inverse transform");
    opt_params->excludes(opt_frft)->excludes(opt_fresnel)->excludes(opt_scale);
    opt_frft->excludes(opt_fresnel)->excludes(opt_scale);
    opt_fresnel->excludes(opt_scale);

    // ---- plan ----
    auto* plan_cmd = app.add_subcommand("plan", "Compute sampling period and sample count");
    double box_t = 0.0, box_f = 0.0;
    std::vector<double> vertices, plan_abcd;
    bool recoverable = false;
    auto* opt_t = plan_cmd->add_option("--T", box_t, "time duration");
    auto* opt_f = plan_cmd->add_option("--F", box_f, "bandwidth");
    auto* opt_vertices =
        plan_cmd->add_option("--vertices", vertices, "parallelogram vertices t1 f1 t2 f2")
            ->expected(4);
    plan_cmd->add_option("--params", plan_abcd, "matrix entries a b c d")
        ->expected(4)
        ->required();
    plan_cmd->add_flag("--recoverable", recoverable,
                       "also require input/output reconstructability");
    opt_vertices->excludes(opt_t)->excludes(opt_f);
    opt_t->needs(opt_f);

    // ---- experiment ----
    auto* experiment = app.add_subcommand("experiment", "Run a randomized experiment suite");
    std::string suite, signal_name = "h1", report_path;
    int runs = 200;
    std::uint64_t seed = 1;
    double chirp_limit = 0.0;
    experiment->add_option("suite", suite, "accuracy|additivity|reversibility")->required();
    experiment->add_option("output", report_path, "report file (CSV or JSON)")->required();
    experiment->add_option("--signal", signal_name, "input signal name");
    experiment->add_option("--runs", runs, "number of random runs");
    experiment->add_option("--seed", seed, "random seed");
    auto* opt_chirp =
        experiment->add_option("--chirp-limit", chirp_limit, "bound on all chirp rates");

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "Time fast vs direct-summation paths");
    std::vector<int> sizes{256, 512, 1024, 2048, 4096};
    std::string method = "both";
    bench->add_option("--sizes", sizes, "transform sizes");
    bench->add_option("--method", method, "fast|direct|both")
        ->check(CLI::IsMember({"fast", "direct", "both"}));

    // ---- signal ----
    auto* signal_cmd = app.add_subcommand("signal", "Write a named test signal");
    std::string gen_name, gen_path;
    signal_cmd->add_option("name", gen_name, "h1|h2|h3|h4|gauss(s,N)")->required();
    signal_cmd->add_option("output", gen_path, "output signal file")->required();

    CLI11_PARSE(app, argc, argv);

    if (transform->parsed()) {
        const lct::Signal input = lct::load_signal(in_path);
        lct::Signal output = input;
        if (*opt_params) {
            lct::LctParams m(abcd[0], abcd[1], abcd[2], abcd[3]);
            if (inverse_flag) m = lct::inverse(m);
            output = lct::dlct(input, m);
        } else if (*opt_frft) {
            output = lct::dfrft(input, inverse_flag ? -frft_alpha : frft_alpha);
        } else if (*opt_fresnel) {
            output = lct::dfresnel(input, fresnel_args[0],
                                   inverse_flag ? -fresnel_args[1] : fresnel_args[1]);
        } else if (*opt_scale) {
            output = lct::dscale(input, inverse_flag ? 1.0 / scale_sigma : scale_sigma);
        } else {
            std::cerr << "transform: one of --params/--frft/--fresnel/--scale is required\n";
            return kExitUsage;
        }
        lct::save_signal(output, out_path);
        return 0;
    }

    if (plan_cmd->parsed()) {
        const lct::LctParams m(plan_abcd[0], plan_abcd[1], plan_abcd[2], plan_abcd[3]);
        if (*opt_vertices) {
            const lct::ParallelogramSpec spec{vertices[0], vertices[1], vertices[2],
                                              vertices[3]};
            print_plan(lct::plan_refined(spec, m, recoverable));
        } else if (*opt_t) {
            print_plan(lct::plan_box({box_t, box_f}, m, recoverable));
        } else {
            std::cerr << "plan: either --T/--F or --vertices is required\n";
            return kExitUsage;
        }
        return 0;
    }

    if (experiment->parsed()) {
        lct::ExperimentReport report;
        if (suite == "reversibility") {
            report = lct::run_reversibility(signal_name, runs, seed);
        } else if (suite == "additivity") {
            report = lct::run_additivity(signal_name, runs, seed,
                                         *opt_chirp ? std::optional<double>(chirp_limit)
                                                    : std::nullopt);
        } else if (suite == "accuracy") {
            report = lct::run_accuracy(signal_name, runs, seed);
        } else {
            std::cerr << "experiment: unknown suite '" << suite << "'\n";
            return kExitUsage;
        }
        report.sort_ascending();
        std::ofstream out(report_path);
        if (!out) throw lct::Error("cannot open '" + report_path + "' for writing");
        if (has_json_extension(report_path)) lct::write_report_json(report, out);
        else lct::write_report_csv(report, out);
        using lct::detail::format_double;
        std::cout << "runs=" << report.records.size();
        if (!report.records.empty())
            std::cout << " min=" << format_double(report.min_nmse())
                      << " median=" << format_double(report.median_nmse())
                      << " max=" << format_double(report.max_nmse());
        std::cout << "\n";
        return 0;
    }

    if (bench->parsed()) {
        const lct::LctParams m(0.6, 0.8, -0.5, 1.0);
        std::cout << "n,method,seconds\n";
        for (int n : sizes) {
            if (n < 1) {
                std::cerr << "bench: sizes must be positive\n";
                return kExitUsage;
            }
            const lct::Signal x = random_signal(n, 42);
            if (method != "direct") {
                lct::dlct(x, m);  // warm the transform plan for this size
                const double t = time_best_of(5, [&] { lct::dlct(x, m); });
                std::cout << n << ",fast," << lct::detail::format_double(t) << "\n";
            }
            if (method != "fast") {
                const double t = time_best_of(2, [&] { lct::direct_dlct(x, m); });
                std::cout << n << ",direct," << lct::detail::format_double(t) << "\n";
            }
        }
        return 0;
    }

    if (signal_cmd->parsed()) {
        lct::save_signal(lct::make_test_signal(gen_name), gen_path);
        return 0;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lct::DeterminantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const lct::ZeroBError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const lct::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
