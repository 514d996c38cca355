#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lct/params.hpp"
#include "lct/signal.hpp"

namespace lct {

// Closed-form LCT of the Gaussian g_s(t) = e^{-2 pi s t^2}, evaluated at
// u = k * delta:
//   G(u) = sqrt(1/(a + j2bs)) e^{ ((ad - 1 + j2sbd)/(2 pi s b^2 - j pi ab)) pi^2 u^2 }
// Principal square root; requires b != 0.
cplx gaussian_lct_closed_form(double s, const LctParams& m, int k, double delta);

// Normalized mean-square error sum|ref-est|^2 / sum|ref|^2.
double nmse(const Signal& reference, const Signal& estimate);

// Samples g_s at delta = sqrt(1/N), applies the fast DLCT (discrete matrix
// equals the continuous one at this delta) and returns the NMSE against the
// closed form on the same grid.
double accuracy_experiment(double s, int n, const LctParams& m);

// NMSE between dlct(x, m1*m2) and dlct(dlct(x, m2), m1).
double additivity_experiment(const Signal& x, const LctParams& m1, const LctParams& m2);

// NMSE between x and idlct(dlct(x, m), m).
double reversibility_experiment(const Signal& x, const LctParams& m);

// Deterministic stream of random valid parameter matrices: a, b, c uniform
// on (-2,2) with |a| >= 0.05 and |b| >= 0.05 (rejection), d = (1+bc)/a.
class ParamSampler {
  public:
    explicit ParamSampler(std::uint64_t seed) : state_(seed) {}
    LctParams next();
    // Uniform double in (-limit, limit).
    double uniform(double limit);

  private:
    std::uint64_t next_u64();
    std::uint64_t state_;
};

// First matrix of the stream for the given seed.
LctParams random_params(std::uint64_t seed);

// Draws a pair (m1, m2) whose three chirp rates each, and the three chirp
// rates of the product m1*m2, all lie within [-xi_max, xi_max] (rejection).
std::pair<LctParams, LctParams> random_chirp_limited_pair(ParamSampler& sampler, double xi_max);

// Sampled Gaussian g_s[n] = e^{-2 pi s n^2 / N} with delta = sqrt(1/N).
Signal make_gaussian(double s, int n);

// Named test signals: "h1".."h4" or "gauss(s,N)".
Signal make_test_signal(const std::string& name);

struct ExperimentRecord {
    LctParams m;
    std::optional<LctParams> m2;  // second matrix for additivity runs
    double nmse;
};

struct ExperimentReport {
    std::string protocol;
    std::string signal_name;
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<ExperimentRecord> records;

    void sort_ascending();
    double min_nmse() const;
    double median_nmse() const;
    double max_nmse() const;
};

// CSV columns: index,a,b,c,d[,a2,b2,c2,d2],nmse with shortest round-trip
// decimal formatting; JSON carries the metadata as well. Both round-trip
// losslessly at full double precision.
void write_report_csv(const ExperimentReport& report, std::ostream& out);
ExperimentReport read_report_csv(std::istream& in);
void write_report_json(const ExperimentReport& report, std::ostream& out);
ExperimentReport read_report_json(std::istream& in);

// The randomized protocols behind the experiment CLI. Records are ordered by
// draw index; call sort_ascending() for the sorted views.
ExperimentReport run_reversibility(const std::string& signal_name, int runs, std::uint64_t seed);
ExperimentReport run_additivity(const std::string& signal_name, int runs, std::uint64_t seed,
                                std::optional<double> chirp_limit = std::nullopt);
ExperimentReport run_accuracy(const std::string& signal_name, int runs, std::uint64_t seed);

}  // namespace lct
