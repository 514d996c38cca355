#include "lct/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lct/dlct.hpp"
#include "lct/kernels.hpp"
#include "num_io.hpp"

namespace lct {

namespace {

constexpr double kPi = std::numbers::pi;

// Name pattern "gauss(s,N)"; returns false if the name is not of this form.
bool parse_gauss_name(const std::string& name, double& s, int& n) {
    double sv = 0.0;
    int nv = 0;
    char trailing = 0;
    const int got = std::sscanf(name.c_str(), "gauss(%lf,%d%c", &sv, &nv, &trailing);
    if (got != 3 || trailing != ')') return false;
    s = sv;
    n = nv;
    return s > 0.0 && n >= 1;
}

}  // namespace

cplx gaussian_lct_closed_form(double s, const LctParams& m, int k, double delta) {
    if (!(s > 0.0)) throw Error("gaussian parameter s must be positive");
    if (std::abs(m.b()) < 1e-12) throw ZeroBError("closed-form Gaussian LCT requires b != 0");
    const double a = m.a(), b = m.b(), d = m.d();
    const cplx amp = std::sqrt(1.0 / cplx(a, 2.0 * b * s));
    const cplx num(a * d - 1.0, 2.0 * s * b * d);
    const cplx den(2.0 * kPi * s * b * b, -kPi * a * b);
    const double u = static_cast<double>(k) * delta;
    return amp * std::exp(num / den * kPi * kPi * u * u);
}

double nmse(const Signal& reference, const Signal& estimate) {
    if (reference.size() != estimate.size())
        throw LengthMismatch("nmse: signals have different lengths");
    double num = 0.0, den = 0.0;
    for (int i = 0; i < reference.size(); ++i) {
        num += std::norm(reference.samples()[static_cast<size_t>(i)] -
                         estimate.samples()[static_cast<size_t>(i)]);
        den += std::norm(reference.samples()[static_cast<size_t>(i)]);
    }
    if (den == 0.0) throw ZeroReference("nmse: reference signal is identically zero");
    return num / den;
}

double accuracy_experiment(double s, int n, const LctParams& m) {
    const Signal input = make_gaussian(s, n);
    const Signal output = dlct(input, m);
    std::vector<cplx> ref(static_cast<size_t>(n));
    for (int k = output.index_min(); k <= output.index_max(); ++k)
        ref[static_cast<size_t>(k - output.index_min())] =
            gaussian_lct_closed_form(s, m, k, input.delta());
    return nmse(Signal(std::move(ref), input.delta()), output);
}

double additivity_experiment(const Signal& x, const LctParams& m1, const LctParams& m2) {
    const Signal combined = dlct(x, compose(m1, m2));
    const Signal cascaded = dlct(dlct(x, m2), m1);
    return nmse(combined, cascaded);
}

double reversibility_experiment(const Signal& x, const LctParams& m) {
    return nmse(x, idlct(dlct(x, m), m));
}

std::uint64_t ParamSampler::next_u64() {
    // splitmix64; fixed algorithm so streams are identical on every platform.
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double ParamSampler::uniform(double limit) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;  // [0,1)
    return (2.0 * u - 1.0) * limit;
}

LctParams ParamSampler::next() {
    double a = 0.0, b = 0.0;
    do a = uniform(2.0); while (std::abs(a) < 0.05);
    do b = uniform(2.0); while (std::abs(b) < 0.05);
    const double c = uniform(2.0);
    return LctParams(a, b, c, (1.0 + b * c) / a);
}

LctParams random_params(std::uint64_t seed) { return ParamSampler(seed).next(); }

namespace {

// Matrix with B != 0 from its three CM-CC-CM chirp rates
// xi1 = (A-1)/B, xi2 = -B, xi3 = (D-1)/B.
LctParams params_from_chirp_rates(double xi1, double xi2, double xi3) {
    const double b = -xi2;
    const double a = 1.0 + xi1 * b;
    const double d = 1.0 + xi3 * b;
    const double c = (a * d - 1.0) / b;
    return LctParams(a, b, c, d);
}

bool chirp_rates_within(const LctParams& m, double xi_max) {
    const double b = m.b();
    if (std::abs(b) < 1e-9) return false;
    return std::abs(b) <= xi_max && std::abs((m.a() - 1.0) / b) <= xi_max &&
           std::abs((m.d() - 1.0) / b) <= xi_max;
}

}  // namespace

std::pair<LctParams, LctParams> random_chirp_limited_pair(ParamSampler& sampler, double xi_max) {
    for (;;) {
        const double r1 = sampler.uniform(xi_max), r2 = sampler.uniform(xi_max);
        const double r3 = sampler.uniform(xi_max), r4 = sampler.uniform(xi_max);
        const double r5 = sampler.uniform(xi_max), r6 = sampler.uniform(xi_max);
        if (std::abs(r2) < 1e-9 || std::abs(r5) < 1e-9) continue;
        const LctParams m1 = params_from_chirp_rates(r1, r2, r3);
        const LctParams m2 = params_from_chirp_rates(r4, r5, r6);
        if (!chirp_rates_within(compose(m1, m2), xi_max)) continue;
        return {m1, m2};
    }
}

Signal make_gaussian(double s, int n) {
    if (!(s > 0.0) || n < 1) throw Error("make_gaussian requires s > 0 and N >= 1");
    std::vector<cplx> samples(static_cast<size_t>(n));
    const int n0 = -(n / 2);
    for (int i = 0; i < n; ++i) {
        const double idx = static_cast<double>(n0 + i);
        samples[static_cast<size_t>(i)] = std::exp(-2.0 * kPi * s * idx * idx / n);
    }
    return Signal(std::move(samples));
}

Signal make_test_signal(const std::string& name) {
    if (name == "h1") {
        const int n = 128;
        std::vector<cplx> samples(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double idx = static_cast<double>(i - n / 2);
            const double q = kPi * idx * idx / n;
            samples[static_cast<size_t>(i)] = std::exp(cplx(-q, -q));
        }
        return Signal(std::move(samples));
    }
    if (name == "h2") {
        const int n = 101;
        const double rn = std::sqrt(static_cast<double>(n));
        std::vector<cplx> samples(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double idx = static_cast<double>(i - n / 2);
            const double t = idx / rn;
            const cplx env = std::exp(-idx * idx / static_cast<double>(n));
            samples[static_cast<size_t>(i)] =
                cplx(2.0 * std::cos(2.0 * kPi * t), std::sin(kPi * (t - 1.0))) * env;
        }
        return Signal(std::move(samples));
    }
    if (name == "h3") {
        // {0,1} sequence from the splitmix64 stream with fixed seed 2801.
        const int n = 280;
        ParamSampler bits(2801);
        std::vector<cplx> samples(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            samples[static_cast<size_t>(i)] = bits.uniform(1.0) >= 0.0 ? 1.0 : 0.0;
        return Signal(std::move(samples));
    }
    if (name == "h4") {
        // Trapezoid: 60-sample ramps on each side of an 81-sample unit plateau.
        const int n = 201;
        std::vector<cplx> samples(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            double v = 1.0;
            if (i < 60) v = static_cast<double>(i) / 60.0;
            else if (i > 140) v = static_cast<double>(n - 1 - i) / 60.0;
            samples[static_cast<size_t>(i)] = v;
        }
        return Signal(std::move(samples));
    }
    double s = 0.0;
    int n = 0;
    if (parse_gauss_name(name, s, n)) return make_gaussian(s, n);
    throw UnknownSignal("unknown test signal '" + name + "'");
}

void ExperimentReport::sort_ascending() {
    std::stable_sort(records.begin(), records.end(),
                     [](const ExperimentRecord& lhs, const ExperimentRecord& rhs) {
                         return lhs.nmse < rhs.nmse;
                     });
}

double ExperimentReport::min_nmse() const {
    double v = std::numeric_limits<double>::infinity();
    for (const auto& r : records) v = std::min(v, r.nmse);
    return v;
}

double ExperimentReport::max_nmse() const {
    double v = 0.0;
    for (const auto& r : records) v = std::max(v, r.nmse);
    return v;
}

double ExperimentReport::median_nmse() const {
    if (records.empty()) return 0.0;
    std::vector<double> values;
    values.reserve(records.size());
    for (const auto& r : records) values.push_back(r.nmse);
    std::sort(values.begin(), values.end());
    const size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
    using detail::format_double;
    const bool pairs = !report.records.empty() && report.records.front().m2.has_value();
    out << "# protocol=" << report.protocol << "\n";
    out << "# signal=" << report.signal_name << "\n";
    out << "# N=" << report.n << "\n";
    out << "# seed=" << report.seed << "\n";
    out << (pairs ? "index,a,b,c,d,a2,b2,c2,d2,nmse" : "index,a,b,c,d,nmse") << "\n";
    for (size_t i = 0; i < report.records.size(); ++i) {
        const ExperimentRecord& r = report.records[i];
        out << i << ',' << format_double(r.m.a()) << ',' << format_double(r.m.b()) << ','
            << format_double(r.m.c()) << ',' << format_double(r.m.d());
        if (r.m2)
            out << ',' << format_double(r.m2->a()) << ',' << format_double(r.m2->b()) << ','
                << format_double(r.m2->c()) << ',' << format_double(r.m2->d());
        out << ',' << format_double(r.nmse) << "\n";
    }
}

ExperimentReport read_report_csv(std::istream& in) {
    ExperimentReport report;
    std::string line;
    bool header_seen = false;
    bool pairs = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(1, eq - 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            const std::string value = line.substr(eq + 1);
            if (key == "protocol") report.protocol = value;
            else if (key == "signal") report.signal_name = value;
            else if (key == "N") report.n = std::stoi(value);
            else if (key == "seed") report.seed = std::stoull(value);
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            pairs = line.find("a2") != std::string::npos;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        const size_t expected = pairs ? 10u : 6u;
        if (fields.size() != expected) throw ParseError("bad CSV record: '" + line + "'");
        auto num = [&](size_t idx) { return detail::parse_double(fields[idx]); };
        ExperimentRecord rec{LctParams(num(1), num(2), num(3), num(4)), std::nullopt,
                             num(expected - 1)};
        if (pairs) rec.m2 = LctParams(num(5), num(6), num(7), num(8));
        report.records.push_back(rec);
    }
    return report;
}

void write_report_json(const ExperimentReport& report, std::ostream& out) {
    nlohmann::json j;
    j["protocol"] = report.protocol;
    j["signal"] = report.signal_name;
    j["N"] = report.n;
    j["seed"] = report.seed;
    j["records"] = nlohmann::json::array();
    for (const ExperimentRecord& r : report.records) {
        nlohmann::json rec{{"a", r.m.a()}, {"b", r.m.b()}, {"c", r.m.c()},
                           {"d", r.m.d()}, {"nmse", r.nmse}};
        if (r.m2) {
            rec["a2"] = r.m2->a();
            rec["b2"] = r.m2->b();
            rec["c2"] = r.m2->c();
            rec["d2"] = r.m2->d();
        }
        j["records"].push_back(std::move(rec));
    }
    out << j.dump(2) << "\n";
}

ExperimentReport read_report_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad report JSON: ") + e.what());
    }
    ExperimentReport report;
    report.protocol = j.value("protocol", "");
    report.signal_name = j.value("signal", "");
    report.n = j.value("N", 0);
    report.seed = j.value("seed", std::uint64_t{0});
    for (const auto& rec : j.at("records")) {
        ExperimentRecord r{LctParams(rec.at("a").get<double>(), rec.at("b").get<double>(),
                                     rec.at("c").get<double>(), rec.at("d").get<double>()),
                           std::nullopt, rec.at("nmse").get<double>()};
        if (rec.contains("a2"))
            r.m2 = LctParams(rec.at("a2").get<double>(), rec.at("b2").get<double>(),
                             rec.at("c2").get<double>(), rec.at("d2").get<double>());
        report.records.push_back(r);
    }
    return report;
}

ExperimentReport run_reversibility(const std::string& signal_name, int runs,
                                   std::uint64_t seed) {
    const Signal x = make_test_signal(signal_name);
    ExperimentReport report{"reversibility", signal_name, x.size(), seed, {}};
    ParamSampler sampler(seed);
    for (int i = 0; i < runs; ++i) {
        const LctParams m = sampler.next();
        report.records.push_back({m, std::nullopt, reversibility_experiment(x, m)});
    }
    return report;
}

ExperimentReport run_additivity(const std::string& signal_name, int runs, std::uint64_t seed,
                                std::optional<double> chirp_limit) {
    const Signal x = make_test_signal(signal_name);
    ExperimentReport report{chirp_limit ? "additivity-chirp-limited" : "additivity",
                            signal_name, x.size(), seed, {}};
    ParamSampler sampler(seed);
    for (int i = 0; i < runs; ++i) {
        LctParams m1(1, 0, 0, 1), m2(1, 0, 0, 1);
        if (chirp_limit) {
            std::tie(m1, m2) = random_chirp_limited_pair(sampler, *chirp_limit);
        } else {
            m1 = sampler.next();
            m2 = sampler.next();
        }
        report.records.push_back({m1, m2, additivity_experiment(x, m1, m2)});
    }
    return report;
}

ExperimentReport run_accuracy(const std::string& signal_name, int runs, std::uint64_t seed) {
    double s = 0.0;
    int n = 0;
    if (!parse_gauss_name(signal_name, s, n))
        throw UnknownSignal("accuracy protocol requires a gauss(s,N) input, got '" +
                            signal_name + "'");
    ExperimentReport report{"accuracy", signal_name, n, seed, {}};
    ParamSampler sampler(seed);
    for (int i = 0; i < runs; ++i) {
        const LctParams m = sampler.next();
        report.records.push_back({m, std::nullopt, accuracy_experiment(s, n, m)});
    }
    return report;
}

}  // namespace lct
