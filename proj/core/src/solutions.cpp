#include "frobkit/solutions.hpp"

#include "frobkit/error.hpp"
#include "frobkit/linalg.hpp"

namespace frobkit {

FieldPtr point_field(const Field& k, std::uint32_t m) {
  if (m == 0) throw InvalidArgument("point field degree must be positive");
  if (!k.is_prime_field()) {
    if (m != 1) throw InvalidArgument("over a non-prime base field only m = 1 points are supported");
    return Field::create(k.spec());
  }
  return m == 1 ? Field::prime(k.characteristic()) : Field::extension(k.characteristic(), m);
}

std::vector<RationalPoint> enumerate_points(const QuotientContext& ctx, std::uint32_t m, const Budget& budget) {
  const FieldPtr L = point_field(ctx.ring->field(), m);
  const std::size_t n = ctx.nvars();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= L->order();
    if (total > budget.point_guard) {
      throw BudgetExceeded("point enumeration exceeds the guard of " + std::to_string(budget.point_guard));
    }
  }
  const auto gens = ctx.ideal.polynomials();
  std::vector<RationalPoint> out;
  std::vector<FieldElement> pt(n);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t x = c;
    for (std::size_t i = 0; i < n; ++i) {
      pt[i] = L->element(x % L->order());
      x /= L->order();
    }
    bool vanishes = true;
    for (const auto& g : gens) {
      if (!L->is_zero(g.evaluate(*L, pt))) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) out.push_back({m, L, pt});
  }
  return out;
}

Matrix evaluate_matrix(const PolyMatrix& a, const RationalPoint& pt) {
  Matrix b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) b.at(i, j) = a.at(i, j).evaluate(*pt.field, pt.coords);
  }
  return b;
}

SolutionSpace solutions_at_point(const GammaSheaf& root, const RationalPoint& pt) {
  const Field& L = *pt.field;
  for (const auto& r : root.relations().vectors()) {
    for (std::size_t j = 0; j < r.rank(); ++j) {
      if (!L.is_zero(r[j].evaluate(L, pt.coords))) {
        throw InvalidArgument("relation " + r.to_string() + " does not vanish at the point");
      }
    }
  }
  const std::size_t s = root.rank();
  const std::size_t e = L.degree();
  const Matrix b = evaluate_matrix(root.matrix(), pt);
  const FieldPtr fp = Field::prime(L.characteristic());
  // Columns: images of the F_p basis vectors t^l e_j under w -> w - B^T w^{[p]}.
  Matrix system(s * e, s * e);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t l = 0; l < e; ++l) {
      std::vector<std::uint32_t> digit(e, 0);
      digit[l] = 1;
      const FieldElement u = L.from_coeffs(digit);
      const FieldElement up = L.frobenius(u);
      for (std::size_t r = 0; r < s; ++r) {
        // (B^T w^{[p]})_r = sum_i B_ir w_i^p, and only w_j = u is nonzero.
        FieldElement val = L.neg(L.mul(b.at(j, r), up));
        if (r == j) val = L.add(val, u);
        const auto coords = L.coeffs(val);
        for (std::size_t c = 0; c < e; ++c) system.at(r * e + c, j * e + l) = fp->element(coords[c]);
      }
    }
  }
  SolutionSpace out{pt.field, 0, {}};
  for (const auto& v : kernel(*fp, system)) {
    std::vector<FieldElement> w(s);
    for (std::size_t j = 0; j < s; ++j) {
      std::vector<std::uint32_t> digits(e);
      for (std::size_t c = 0; c < e; ++c) digits[c] = static_cast<std::uint32_t>(v[j * e + c].code);
      w[j] = L.from_coeffs(digits);
    }
    out.basis.push_back(std::move(w));
  }
  out.dim = out.basis.size();
  return out;
}

std::size_t artin_schreier_kernel(std::uint64_t q, const Budget& budget) {
  if (q < 2 || q > budget.point_guard) throw InvalidArgument("field order out of range");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1 || !Field::is_prime(p)) throw InvalidArgument("order is not a prime power");
  const FieldPtr L = m == 1 ? Field::prime(p) : Field::extension(p, m);
  const FieldPtr fp = Field::prime(p);
  Matrix a = frobenius_matrix(*L, *fp, 1);
  for (std::size_t i = 0; i < m; ++i) a.at(i, i) = fp->sub(a.at(i, i), fp->one());
  return kernel(*fp, a).size();
}

std::vector<ProfileRow> solution_profile(const GammaSheaf& root, std::uint32_t m_max, const Budget& budget) {
  std::vector<ProfileRow> out;
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    for (auto& pt : enumerate_points(root.context(), m, budget)) {
      const std::size_t d = solutions_at_point(root, pt).dim;
      out.push_back({m, std::move(pt), d});
    }
  }
  return out;
}

}  // namespace frobkit
