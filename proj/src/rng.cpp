#include "qfx/rng.hpp"

#include <atomic>

namespace qfx {

namespace {
std::atomic<uint64_t> g_seed{kDefaultSeed};
}

uint64_t global_seed() { return g_seed.load(std::memory_order_relaxed); }

void set_global_seed(uint64_t seed) { g_seed.store(seed, std::memory_order_relaxed); }

}  // namespace qfx
