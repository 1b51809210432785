// Exact rational scalars and coordinate vectors.
//
// Every quantity in this library is an exact rational; there is no floating
// point anywhere. Scalars are boost::rational over long long, which is ample
// for the small numerators/denominators that alcove combinatorics produces.

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

using Int = long long;
using Rat = boost::rational<Int>;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Points of the affine apartment and coweights are both stored in the basis
// of fundamental coweights, so coordinate j of v equals the pairing of the
// j-th simple root with v.
using Point = RatVec;
using Coweight = RatVec;

inline Int floor_rat(const Rat& x) {
  Int q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

inline Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

inline bool is_integer(const Rat& x) { return x.denominator() == 1; }

// Distance from x to the nearest integer.
inline Rat frac_distance(const Rat& x) {
  Rat f = x - floor_rat(x);
  Rat g = Rat(1) - f;
  return f < g ? f : g;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec operator-(const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline RatVec operator*(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline RatVec rat_vec(const IntVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

// "p/q" or "p"; whitespace not accepted.
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    Int num = std::stoll(s.substr(0, slash));
    Int den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: \"" + s + "\"");
  }
}

inline std::string to_string(const Rat& x) {
  std::string s = std::to_string(x.numerator());
  if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
  return s;
}

inline std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

// Comma-separated rationals, e.g. "1,-1/2,0".
inline RatVec parse_rat_vec(const std::string& s) {
  RatVec v;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    v.push_back(parse_rational(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return v;
}

}  // namespace alcove
