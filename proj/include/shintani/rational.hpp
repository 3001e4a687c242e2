#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace shintani {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Subgroup of Q generated by a set of rationals: gcd(p_i)/lcm(q_i).
// Returns 0 for the empty/zero set.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Int n = int_gcd(rat_num(a), rat_num(b));
  Int d = int_lcm(rat_den(a), rat_den(b));
  return Rat(n, d);
}

// Intersection c1*Z with c2*Z equals lcm(c1,c2)*Z.
inline Rat rat_lcm(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw std::invalid_argument("rat_lcm of zero");
  Int n = int_lcm(rat_num(abs(a)), rat_num(abs(b)));
  Int d = int_gcd(rat_den(a), rat_den(b));
  return Rat(n, d);
}

inline Rat rat_floor(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return Rat(f);
}

inline Rat rat_ceil(const Rat& q) { return -rat_floor(-q); }

// x mod 1 in [0,1)
inline Rat rat_frac(const Rat& q) { return q - rat_floor(q); }

inline bool rat_is_integer(const Rat& q) { return rat_den(q) == 1; }

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string rat_to_string(const Rat& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

}  // namespace shintani
