#pragma once
// Shared plumbing: error taxonomy, enumeration budgets, deterministic RNG.
//
// Everything in this workbench is exact and finite. Budgets exist so that a
// misconfigured instance fails loudly with the offending bound instead of
// silently truncating an enumeration.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hofix {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed mathematical input (a table that is not a group, an action that is
// not by automorphisms, ...). Carries a witness in the message.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed a configured bound.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Bad CLI flags or config files. Mapped to exit code 2 by the CLI.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Budget {
  long long max_objects = 1'000'000;  // category materialization cap
  long long max_ops = 10'000'000;     // enumeration cap (element operations)
  mutable long long used_ops = 0;

  void charge(long long n, const char* what) const {
    used_ops += n;
    if (used_ops > max_ops)
      throw BudgetError(std::string("operation budget exceeded in ") + what +
                        ": " + std::to_string(used_ops) + " > " +
                        std::to_string(max_ops));
  }
  void need_objects(long long n, const char* what) const {
    if (n > max_objects)
      throw BudgetError(std::string("object budget exceeded in ") + what +
                        ": " + std::to_string(n) + " > " +
                        std::to_string(max_objects));
  }
};

inline Budget default_budget() { return Budget{}; }

// All randomized suites draw from this; a fixed seed fixes every report byte.
using Rng = std::mt19937_64;

inline int rng_below(Rng& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

template <typename T>
const T& rng_pick(Rng& rng, const std::vector<T>& v) {
  return v[rng_below(rng, static_cast<int>(v.size()))];
}

}  // namespace hofix
