#pragma once

#include <vector>

#include "frobkit/gamma.hpp"

namespace frobkit {

struct RationalPoint {
  std::uint32_t m = 1;
  FieldPtr field;                     // the point field L
  std::vector<FieldElement> coords;   // in L
};

/// The point field of degree m over F_p. When k is not a prime field only
/// m = 1 is accepted and L = k.
FieldPtr point_field(const Field& k, std::uint32_t m);

/// All points of V(I) with coordinates in the point field of degree m.
std::vector<RationalPoint> enumerate_points(const QuotientContext& ctx, std::uint32_t m, const Budget& budget = {});

/// F_p-space of w in L^s with w_j = sum_i A_ij(alpha) w_i^p.
struct SolutionSpace {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<std::vector<FieldElement>> basis;
};

/// Throws InvalidArgument when a relation of the root does not vanish at the point.
SolutionSpace solutions_at_point(const GammaSheaf& root, const RationalPoint& pt);

/// The values A_ij(alpha) as a matrix over the point field.
Matrix evaluate_matrix(const PolyMatrix& a, const RationalPoint& pt);

/// dim over F_p of { a in F_q : a^p = a }.
std::size_t artin_schreier_kernel(std::uint64_t q, const Budget& budget = {});

struct ProfileRow {
  std::uint32_t m;
  RationalPoint point;
  std::size_t dim;
};

std::vector<ProfileRow> solution_profile(const GammaSheaf& root, std::uint32_t m_max, const Budget& budget = {});

}  // namespace frobkit
