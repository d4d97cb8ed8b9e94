#include "qgr/common.hpp"

#include <cstdlib>

namespace qgr {

namespace {
std::uint64_t env_limit() {
  const char* s = std::getenv("QG_MAX_ENUM");
  if (!s || !*s) return 10000000ull;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || v == 0) return 10000000ull;
  return v;
}
}  // namespace

Budget::Budget() : left_(env_limit()) {}

Int factorial(long long n) {
  Int r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace qgr
