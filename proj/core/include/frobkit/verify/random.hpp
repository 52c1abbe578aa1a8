#pragma once

#include <random>

#include "frobkit/cartier.hpp"
#include "frobkit/gamma.hpp"

namespace frobkit::verify {

using Rng = std::mt19937_64;

FieldElement random_element(Rng& rng, const Field& k, bool nonzero = false);
/// Up to `max_terms` terms of total degree <= max_degree.
Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::uint32_t max_degree, std::size_t max_terms);
FreeVector random_vector(Rng& rng, const RingPtr& ring, std::size_t rank, std::uint32_t max_degree,
                         std::size_t max_terms);
PolyMatrix random_poly_matrix(Rng& rng, const RingPtr& ring, std::size_t size, std::uint32_t max_degree,
                              std::size_t max_terms);
Matrix random_matrix(Rng& rng, const Field& k, std::size_t rows, std::size_t cols);
/// Strictly upper triangular after a random permutation of the basis.
Matrix random_nilpotent_matrix(Rng& rng, const Field& k, std::size_t d);

/// Free Cartier module over P with a random table (always well defined).
CartierModule random_free_cartier(Rng& rng, const RingPtr& ring, std::size_t rank, std::uint32_t max_degree,
                                  double density = 0.6);

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive

}  // namespace frobkit::verify
