#pragma once

#include <vector>

#include "frobkit/cartier.hpp"
#include "frobkit/solutions.hpp"

namespace frobkit::verify {

// Exhaustive reference implementations, independent of the linear-algebra
// paths they check. All of them enumerate and are meant for tiny inputs.

using Point = std::vector<FieldElement>;

/// The b with b^p == a, found by search.
FieldElement brute_frobenius_root(const Field& k, FieldElement a);

/// Every w in L^s with w_j = sum_i A_ij(alpha) w_i^p, sorted.
std::vector<Point> brute_solutions(const GammaSheaf& root, const RationalPoint& pt);

/// All F_p-combinations of the basis vectors in L^s, sorted; {0} for an empty basis.
std::vector<Point> prime_span(const Field& L, std::size_t s, const std::vector<Point>& basis);

/// Number of k-matrices phi with phi T_M == T_N phi, tested on every vector.
std::uint64_t brute_hom_count(const SemilinearEndo& m, const SemilinearEndo& n);

/// Iterates T on the full set k^d until it collapses to {0} or repeats.
NilpotenceResult brute_semilinear_nilpotent(const SemilinearEndo& t);

/// Points of V(gens) over the point field, evaluating the supplied generators.
std::vector<Point> brute_points(const RingPtr& ring, const std::vector<Polynomial>& gens, std::uint32_t m);

/// Number of a in F_q with a^p == a, q = p^m.
std::uint64_t brute_fixed_points(const Field& L);

}  // namespace frobkit::verify
