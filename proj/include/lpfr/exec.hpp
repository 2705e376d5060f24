#pragma once

// Process-wide switch between the serial reference kernels and the
// OpenMP-parallel ones. Both produce identical results for a fixed
// thread count; the serial path exists so tests and benchmarks can
// compare against it.

namespace lpfr::exec {

enum class Mode { Serial, Parallel };

Mode mode();
void set_mode(Mode m);

// RAII helper for tests that need to pin a mode temporarily.
class ScopedMode {
public:
  explicit ScopedMode(Mode m) : saved_(mode()) { set_mode(m); }
  ~ScopedMode() { set_mode(saved_); }
  ScopedMode(const ScopedMode&) = delete;
  ScopedMode& operator=(const ScopedMode&) = delete;

private:
  Mode saved_;
};

}  // namespace lpfr::exec
