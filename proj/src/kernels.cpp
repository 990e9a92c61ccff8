#include "wsa/kernels.hpp"

#include <atomic>

namespace wsa::kernels {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() {
    return g_parallel.load(std::memory_order_relaxed);
}

void set_parallel_enabled(bool on) {
    g_parallel.store(on, std::memory_order_relaxed);
}

} // namespace wsa::kernels
