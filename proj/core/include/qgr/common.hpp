#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgr {

// All counts are exact; factorial ratios overflow 64 bits quickly, so the
// whole library computes in arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error with a stable machine-readable code. The CLI forwards the code
// verbatim, so the strings are part of the external interface.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Periodic bands report the least witness period.
class PeriodicBandError : public Error {
 public:
  PeriodicBandError(int r, const std::string& detail)
      : Error("PeriodicBand", detail), r_(r) {}
  int witness() const noexcept { return r_; }

 private:
  int r_;
};

// Guard for the enumeration loops. Every top-level operation draws from a
// fresh budget capped by QG_MAX_ENUM (default 10^7 states).
class Budget {
 public:
  Budget();  // limit from environment
  explicit Budget(std::uint64_t limit) : left_(limit) {}

  void spend(std::uint64_t states = 1) {
    if (states > left_) throw Error("EnumerationBudgetExceeded", "enumeration state cap hit");
    left_ -= states;
  }

 private:
  std::uint64_t left_;
};

Int factorial(long long n);

// binom(n, k) = 0 whenever k < 0 or k > n; in particular 0 for negative n.
Int binomial(long long n, long long k);

}  // namespace qgr
