#include "hdpart/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hdpart {

namespace {

int& configured_threads() {
  static int threads = [] {
    if (const char* env = std::getenv("HDPART_THREADS")) {
      try {
        const int n = std::stoi(env);
        if (n > 0) return n;
      } catch (...) {
      }
    }
    return 0;
  }();
  return threads;
}

}  // namespace

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int thread_count() {
  if (configured_threads() > 0) return configured_threads();
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_thread_count(int threads) { configured_threads() = threads > 0 ? threads : 0; }

}  // namespace hdpart
