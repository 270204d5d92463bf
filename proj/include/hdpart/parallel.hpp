#pragma once

#include <cstdint>
#include <limits>

#include <gmpxx.h>

namespace hdpart {

/// Worker count used by the OpenMP kernels. Defaults to the OpenMP runtime's
/// choice, overridden by HDPART_THREADS when set.
int thread_count();
void set_thread_count(int threads);
bool openmp_enabled();

/// Leaf counter that stays in a machine word until it would overflow.
class BigCounter {
 public:
  void add(std::uint64_t n = 1) {
    if (small_ > std::numeric_limits<std::uint64_t>::max() - n) {
      big_ += mpz_from(small_);
      small_ = 0;
    }
    small_ += n;
  }
  void merge(const BigCounter& other) {
    big_ += other.big_;
    add(other.small_);
  }
  mpz_class value() const { return big_ + mpz_from(small_); }

 private:
  static mpz_class mpz_from(std::uint64_t v) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return out;
  }

  std::uint64_t small_ = 0;
  mpz_class big_ = 0;
};

}  // namespace hdpart
