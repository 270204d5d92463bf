#include <doctest.h>

#include "hdpart/enumerate.hpp"
#include "hdpart/parallel.hpp"
#include "hdpart/series.hpp"

using namespace hdpart;

TEST_CASE("thread count override") {
  const int saved = thread_count();
  set_thread_count(2);
  CHECK(thread_count() == 2);
  const auto two = count_boxed_partitions({3, 3, 3});
  set_thread_count(1);
  CHECK(count_boxed_partitions({3, 3, 3}) == two);
  set_thread_count(saved);
  CHECK(two == count_boxed_partitions_serial({3, 3, 3}));
}

TEST_CASE("big counter") {
  BigCounter c;
  c.add(~std::uint64_t{0});
  c.add(2);
  mpz_class expected = 1;
  expected <<= 64;
  CHECK(c.value() == expected + 1);
  BigCounter d;
  d.add(5);
  d.merge(c);
  CHECK(d.value() == expected + 6);
}
