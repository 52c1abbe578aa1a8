#include "frobkit/verify/oracles.hpp"

#include <algorithm>
#include <set>

#include "frobkit/error.hpp"

namespace frobkit::verify {

namespace {

// Calls fn on every vector of L^len.
template <typename Fn>
void for_each_vector(const Field& L, std::size_t len, Fn&& fn) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= L.order();
  Point v(len);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t x = c;
    for (std::size_t i = 0; i < len; ++i) {
      v[i] = FieldElement{x % L.order()};
      x /= L.order();
    }
    fn(v);
  }
}

}  // namespace

FieldElement brute_frobenius_root(const Field& k, FieldElement a) {
  for (std::uint64_t c = 0; c < k.order(); ++c) {
    if (k.pow(FieldElement{c}, k.characteristic()) == a) return FieldElement{c};
  }
  throw InvalidArgument("no p-th root found");
}

std::vector<Point> brute_solutions(const GammaSheaf& root, const RationalPoint& pt) {
  const Field& L = *pt.field;
  const Matrix b = evaluate_matrix(root.matrix(), pt);
  const std::size_t s = root.rank();
  std::vector<Point> out;
  for_each_vector(L, s, [&](const Point& w) {
    for (std::size_t j = 0; j < s; ++j) {
      FieldElement rhs = L.zero();
      for (std::size_t i = 0; i < s; ++i) rhs = L.add(rhs, L.mul(b.at(i, j), L.pow(w[i], L.characteristic())));
      if (rhs != w[j]) return;
    }
    out.push_back(w);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> prime_span(const Field& L, std::size_t s, const std::vector<Point>& basis) {
  const std::uint32_t p = L.characteristic();
  std::set<Point> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= p;
  for (std::uint64_t c = 0; c < total; ++c) {
    Point v(s, L.zero());
    std::uint64_t x = c;
    for (const auto& b : basis) {
      const FieldElement coeff = L.from_int(static_cast<std::int64_t>(x % p));
      x /= p;
      for (std::size_t j = 0; j < s; ++j) v[j] = L.add(v[j], L.mul(coeff, b[j]));
    }
    out.insert(v);
  }
  return {out.begin(), out.end()};
}

std::uint64_t brute_hom_count(const SemilinearEndo& m, const SemilinearEndo& n) {
  const Field& k = *m.field;
  const std::size_t rows = n.dim(), cols = m.dim();
  std::vector<Point> vectors;
  for_each_vector(k, cols, [&](const Point& v) { vectors.push_back(v); });
  std::uint64_t count = 0;
  for_each_vector(k, rows * cols, [&](const Point& entries) {
    Matrix phi(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) phi.at(i, j) = entries[i * cols + j];
    }
    for (const auto& v : vectors) {
      if (multiply(k, phi, m.apply(v)) != n.apply(multiply(k, phi, v))) return;
    }
    ++count;
  });
  return count;
}

NilpotenceResult brute_semilinear_nilpotent(const SemilinearEndo& t) {
  const Field& k = *t.field;
  std::set<Point> current;
  for_each_vector(k, t.dim(), [&](const Point& v) { current.insert(v); });
  const Point zero(t.dim(), k.zero());
  for (std::size_t i = 0;; ++i) {
    if (current.size() == 1 && *current.begin() == zero) return {NilVerdict::Nilpotent, i};
    std::set<Point> next;
    for (const auto& v : current) next.insert(t.apply(v));
    if (next == current) return {NilVerdict::NotNilpotent, i};
    current = std::move(next);
  }
}

std::vector<Point> brute_points(const RingPtr& ring, const std::vector<Polynomial>& gens, std::uint32_t m) {
  const FieldPtr L = point_field(ring->field(), m);
  std::vector<Point> out;
  for_each_vector(*L, ring->nvars(), [&](const Point& v) {
    for (const auto& g : gens) {
      if (!L->is_zero(g.evaluate(*L, v))) return;
    }
    out.push_back(v);
  });
  return out;
}

std::uint64_t brute_fixed_points(const Field& L) {
  std::uint64_t count = 0;
  for (std::uint64_t c = 0; c < L.order(); ++c) {
    if (L.pow(FieldElement{c}, L.characteristic()) == FieldElement{c}) ++count;
  }
  return count;
}

}  // namespace frobkit::verify
