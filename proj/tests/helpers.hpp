#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "wdeg/gamma.hpp"
#include "wdeg/parser.hpp"
#include "wdeg/polynomial.hpp"
#include "wdeg/random.hpp"
#include "wdeg/upoly.hpp"

namespace testing_helpers {

using namespace wdeg;

inline Polynomial P(const std::string& text, std::size_t n) { return parse_polynomial(text, n); }
inline UPoly U(const std::string& text, std::size_t n) { return parse_upoly(text, n); }
inline UPoly Z(const std::string& text, std::size_t r) { return parse_upoly_over_z(text, r); }

inline std::vector<Polynomial> Ps(std::initializer_list<const char*> texts, std::size_t n) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(t, n));
  return out;
}

inline Degree D(std::int64_t v) { return Degree(v); }
inline Degree NegInf() { return Degree::minus_infinity(); }

inline RandomPolyShape shape(std::size_t n, std::uint32_t deg, std::size_t terms,
                             std::int64_t coeff = 3) {
  RandomPolyShape s;
  s.nvars = n;
  s.max_degree = deg;
  s.max_terms = terms;
  s.coeff_bound = coeff;
  return s;
}

inline std::vector<std::int64_t> random_int_weights(Rng& rng, std::size_t n, std::int64_t lo,
                                                    std::int64_t hi) {
  std::vector<std::int64_t> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(rng.uniform(lo, hi));
  return w;
}

inline WeightVector as_weights(const std::vector<std::int64_t>& w) {
  return WeightVector::from_integers(w);
}

inline UPoly random_upoly(Rng& rng, std::size_t n, std::size_t max_y, std::uint32_t deg) {
  const auto d = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_y)));
  std::vector<Polynomial> cs;
  for (std::size_t i = 0; i <= d; ++i) {
    cs.push_back(i == d ? random_nonzero_polynomial(rng, shape(n, deg, 3))
                        : random_polynomial(rng, shape(n, deg, 3)));
  }
  return UPoly(n, std::move(cs));
}

inline WeightVector lex_weights(Rng& rng, std::size_t n) {
  std::vector<Gamma> ws;
  for (std::size_t i = 0; i < n; ++i) ws.push_back(Gamma{rng.uniform(-1, 2), rng.uniform(-2, 2)});
  return WeightVector(std::move(ws));
}

}  // namespace testing_helpers

namespace wdeg {
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const UPoly& p, std::ostream* os) { *os << p.str(); }
}  // namespace wdeg
