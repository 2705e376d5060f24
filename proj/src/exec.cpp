#include "lpfr/exec.hpp"

#include <atomic>

namespace lpfr::exec {

namespace {
std::atomic<Mode> g_mode{Mode::Parallel};
}

Mode mode() { return g_mode.load(std::memory_order_relaxed); }

void set_mode(Mode m) { g_mode.store(m, std::memory_order_relaxed); }

}  // namespace lpfr::exec
