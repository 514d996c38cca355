#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>

namespace lct::detail {
namespace {

// FFTW plan creation is not thread-safe; execution via fftw_execute_dft is.
// Plans are cached per (size, direction) and created with FFTW_ESTIMATE on
// aligned scratch buffers, so new-array execution on caller memory would risk
// alignment mismatches; instead we copy through the scratch buffers under the
// same lock. The copies are negligible next to the transform itself.
struct PlanEntry {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
    ~PlanEntry() {
        if (plan) fftw_destroy_plan(plan);
        if (buf) fftw_free(buf);
    }
};

std::mutex g_mutex;

void execute(std::vector<std::complex<double>>& data, int sign) {
    const int n = static_cast<int>(data.size());
    std::lock_guard<std::mutex> lock(g_mutex);
    static std::unordered_map<long long, PlanEntry> cache;
    const long long key = static_cast<long long>(n) * 2 + (sign == FFTW_FORWARD ? 0 : 1);
    PlanEntry& e = cache[key];
    if (!e.plan) {
        e.buf = fftw_alloc_complex(static_cast<size_t>(n));
        e.plan = fftw_plan_dft_1d(n, e.buf, e.buf, sign, FFTW_ESTIMATE);
    }
    for (int i = 0; i < n; ++i) {
        e.buf[i][0] = data[static_cast<size_t>(i)].real();
        e.buf[i][1] = data[static_cast<size_t>(i)].imag();
    }
    fftw_execute(e.plan);
    for (int i = 0; i < n; ++i)
        data[static_cast<size_t>(i)] = {e.buf[i][0], e.buf[i][1]};
}

}  // namespace

void fft_forward(std::vector<std::complex<double>>& data) { execute(data, FFTW_FORWARD); }

void fft_backward(std::vector<std::complex<double>>& data) { execute(data, FFTW_BACKWARD); }

}  // namespace lct::detail
