#pragma once

#include <string>
#include <vector>

#include "frobkit/parse.hpp"
#include "frobkit/polyring.hpp"

namespace frobkit::test {

inline RingPtr ring(std::uint32_t p, std::vector<std::string> vars = {"x"},
                    MonomialOrder order = MonomialOrder::GRevLex) {
  return Ring::create(Field::prime(p), std::move(vars), order);
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(r, text); }

inline FreeVector V(const RingPtr& r, std::size_t rank, const std::string& text) {
  return parse_vector(r, rank, text);
}

inline std::vector<Polynomial> Ps(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(r, t));
  return out;
}

inline Monomial mono(std::initializer_list<std::uint32_t> exps) {
  Monomial m;
  std::size_t i = 0;
  for (auto e : exps) m[i++] = e;
  return m;
}

}  // namespace frobkit::test
