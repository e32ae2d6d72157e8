#include "qhf/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace qhf::fft {

namespace {

struct PlanDeleter {
    void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

// fftw planning is not thread-safe; execution through fftw_execute_dft is.
class PlanCache {
public:
    fftw_plan get(std::size_t n, Direction dir) {
        std::lock_guard lock(mutex_);
        const auto key = std::make_pair(n, dir == Direction::Forward);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second.get();

        std::vector<std::complex<double>> scratch(n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        Plan plan{fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                   dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED)};
        fftw_plan raw = plan.get();
        plans_.emplace(key, std::move(plan));
        return raw;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, bool>, Plan> plans_;
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

}  // namespace

void transform(std::span<std::complex<double>> data, Direction dir) {
    if (data.size() <= 1) return;
    fftw_plan plan = cache().get(data.size(), dir);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, buf, buf);
}

}  // namespace qhf::fft
