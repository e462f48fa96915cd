#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace parahoric {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;

inline long long floor_rat(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

// Number of integers in the open interval (a, b) for non-integral endpoints.
inline long long integers_strictly_between(Rat a, Rat b) {
  if (a > b) std::swap(a, b);
  return floor_rat(b) - floor_rat(a);
}

inline std::string rat_to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

inline RatVec to_rat_vec(const std::vector<long long>& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace parahoric
