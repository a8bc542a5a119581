#include "gre/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gre::par {

namespace {

bool initial_enabled() {
#ifdef _OPENMP
  if (const char* env = std::getenv("GRE_PARALLEL")) return env[0] != '0';
  return true;
#else
  return false;
#endif
}

std::atomic<bool>& flag() {
  static std::atomic<bool> value{initial_enabled()};
  return value;
}

}  // namespace

bool enabled() {
#ifdef _OPENMP
  return flag().load(std::memory_order_relaxed);
#else
  return false;
#endif
}

void set_enabled(bool on) { flag().store(on, std::memory_order_relaxed); }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gre::par
