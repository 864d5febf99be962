#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace indsub {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Least nonnegative residue of v modulo p.
inline int mod_p(const BigInt& v, int p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<int>();
}

inline int mod_p(std::int64_t v, int p) {
  std::int64_t r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

BigInt binomial(int n, int k);

}  // namespace indsub
