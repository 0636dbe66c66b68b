#include "hf/kernels.hpp"

#include <atomic>
#include <cstring>

namespace hf::kernels {

namespace {
std::atomic<const Kernels*> g_forced{nullptr};
}

const Kernels& active() {
    const Kernels* forced = g_forced.load(std::memory_order_acquire);
    if (forced) return *forced;
    if (const Kernels* k = avx2_kernels()) return *k;
    return scalar_kernels();
}

void force_implementation(const char* name) {
    if (!name || std::strcmp(name, "auto") == 0) {
        g_forced.store(nullptr, std::memory_order_release);
        return;
    }
    if (std::strcmp(name, "scalar") == 0) {
        g_forced.store(&scalar_kernels(), std::memory_order_release);
        return;
    }
    if (std::strcmp(name, "avx2") == 0) {
        if (const Kernels* k = avx2_kernels()) {
            g_forced.store(k, std::memory_order_release);
            return;
        }
    }
    g_forced.store(nullptr, std::memory_order_release);
}

} // namespace hf::kernels
