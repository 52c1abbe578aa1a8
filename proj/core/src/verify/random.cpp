#include "frobkit/verify/random.hpp"

#include <numeric>

namespace frobkit::verify {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

FieldElement random_element(Rng& rng, const Field& k, bool nonzero) {
  return k.element(uniform(rng, nonzero ? 1 : 0, k.order() - 1));
}

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::uint32_t max_degree, std::size_t max_terms) {
  const std::size_t n = ring->nvars();
  std::vector<Term> terms;
  const std::size_t count = uniform(rng, 0, max_terms);
  for (std::size_t t = 0; t < count; ++t) {
    Monomial m;
    std::uint32_t budget = static_cast<std::uint32_t>(uniform(rng, 0, max_degree));
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t e = static_cast<std::uint32_t>(uniform(rng, 0, budget));
      m[(i + t) % n] = e;
      budget -= e;
    }
    terms.push_back({m, random_element(rng, ring->field(), true)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

FreeVector random_vector(Rng& rng, const RingPtr& ring, std::size_t rank, std::uint32_t max_degree,
                         std::size_t max_terms) {
  FreeVector v(ring, rank);
  for (std::size_t j = 0; j < rank; ++j) v[j] = random_polynomial(rng, ring, max_degree, max_terms);
  return v;
}

PolyMatrix random_poly_matrix(Rng& rng, const RingPtr& ring, std::size_t size, std::uint32_t max_degree,
                              std::size_t max_terms) {
  PolyMatrix a(ring, size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) a.at(i, j) = random_polynomial(rng, ring, max_degree, max_terms);
  }
  return a;
}

Matrix random_matrix(Rng& rng, const Field& k, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_element(rng, k);
  }
  return m;
}

Matrix random_nilpotent_matrix(Rng& rng, const Field& k, std::size_t d) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) m.at(perm[i], perm[j]) = random_element(rng, k);
  }
  return m;
}

CartierModule random_free_cartier(Rng& rng, const RingPtr& ring, std::size_t rank, std::uint32_t max_degree,
                                  double density) {
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t n = ring->nvars();
  std::bernoulli_distribution keep(density);
  std::vector<KappaEntry> entries;
  for (std::uint32_t j = 0; j < rank; ++j) {
    for (std::uint64_t idx = 0; idx < basis_size(p, n); ++idx) {
      if (!keep(rng)) continue;
      entries.push_back({j, exponent_from_index(idx, p, n), random_vector(rng, ring, rank, max_degree, 3)});
    }
  }
  return CartierModule::create(QuotientContext::ambient(ring), rank, {}, entries);
}

}  // namespace frobkit::verify
