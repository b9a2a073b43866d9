#include "core/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace rotslab::fft {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex planner_mutex;
std::map<std::pair<int, int>, PlanPair> plan_cache;

// FFTW's planner is not thread-safe; new-array execution is. Plans are made
// once on a scratch buffer with FFTW_UNALIGNED so they apply to any array
// with the same layout.
const PlanPair& plans_for(int nh, int batch) {
    std::lock_guard<std::mutex> lock(planner_mutex);
    auto key = std::make_pair(nh, batch);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;

    std::vector<cplx> scratch(static_cast<size_t>(nh) * nh * batch);
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    int dims[2] = {nh, nh};
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.fwd = fftw_plan_many_dft(2, dims, batch, ptr, nullptr, batch, 1, ptr, nullptr, batch, 1,
                               FFTW_FORWARD, flags);
    p.bwd = fftw_plan_many_dft(2, dims, batch, ptr, nullptr, batch, 1, ptr, nullptr, batch, 1,
                               FFTW_BACKWARD, flags);
    if (p.fwd == nullptr || p.bwd == nullptr) throw Error("fftw plan creation failed");
    return plan_cache.emplace(key, p).first->second;
}

}  // namespace

void forward2d(cplx* data, int nh, int batch) {
    const PlanPair& p = plans_for(nh, batch);
    auto* ptr = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p.fwd, ptr, ptr);
    const double scale = 1.0 / (static_cast<double>(nh) * nh);
    const size_t count = static_cast<size_t>(nh) * nh * batch;
    for (size_t i = 0; i < count; ++i) data[i] *= scale;
}

void inverse2d(cplx* data, int nh, int batch) {
    const PlanPair& p = plans_for(nh, batch);
    auto* ptr = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p.bwd, ptr, ptr);
}

}  // namespace rotslab::fft
