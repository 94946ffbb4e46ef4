#pragma once

#include <random>
#include <string>
#include <vector>

#include "w0/linalg.hpp"

namespace w0::testing {

inline Vec vec(std::initializer_list<const char*> xs) {
  Vec v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline Vec ints(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Fixed seed so failures reproduce; tests that want more coverage draw more
// samples rather than reseeding.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240517u);
  return gen;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

}  // namespace w0::testing
