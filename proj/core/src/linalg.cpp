#include "frobkit/linalg.hpp"

#include "frobkit/error.hpp"

namespace frobkit {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement{1};
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool Matrix::is_zero() const noexcept {
  for (auto c : data_) {
    if (c.code) return false;
  }
  return true;
}

Matrix multiply(const Field& k, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw RankMismatch("matrix product dimension mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const FieldElement x = a.at(i, l);
      if (k.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) = k.add(r.at(i, j), k.mul(x, b.at(l, j)));
    }
  }
  return r;
}

Vec multiply(const Field& k, const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw RankMismatch("matrix-vector dimension mismatch");
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    FieldElement s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s = k.add(s, k.mul(a.at(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

namespace {
FieldElement frob_times(const Field& k, FieldElement a, int times) {
  if (times >= 0) {
    for (int t = 0; t < times; ++t) a = k.frobenius(a);
  } else {
    for (int t = 0; t < -times; ++t) a = k.frobenius_root(a);
  }
  return a;
}
}  // namespace

Matrix frobenius_entries(const Field& k, const Matrix& a, int times) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = frob_times(k, a.at(i, j), times);
  }
  return r;
}

Vec frobenius_entries(const Field& k, const Vec& v, int times) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = frob_times(k, v[i], times);
  return r;
}

Echelon row_echelon(const Field& k, Matrix a) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && k.is_zero(a.at(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    }
    const FieldElement inv = k.inv(a.at(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(row, j) = k.mul(a.at(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const FieldElement f = a.at(i, col);
      if (k.is_zero(f)) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rref = std::move(a);
  return out;
}

std::size_t rank(const Field& k, const Matrix& a) { return row_echelon(k, a).pivots.size(); }

std::vector<Vec> kernel(const Field& k, const Matrix& a) {
  const Echelon e = row_echelon(k, a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols());
    v[free] = k.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = k.neg(e.rref.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Field& k, const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw RankMismatch("right-hand side has the wrong length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const Echelon e = row_echelon(k, aug);
  Vec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rref.at(r, a.cols());
  }
  return x;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldElement f = v[pivots_[r]];
    if (k_->is_zero(f)) continue;
    for (std::size_t j = 0; j < dim_; ++j) v[j] = k_->sub(v[j], k_->mul(f, rows_[r][j]));
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  const Vec r = reduce(v);
  for (auto c : r) {
    if (!k_->is_zero(c)) return false;
  }
  return true;
}

bool Subspace::insert(const Vec& v) {
  if (v.size() != dim_) throw RankMismatch("vector does not match subspace dimension");
  Vec r = reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && k_->is_zero(r[piv])) ++piv;
  if (piv == dim_) return false;
  const FieldElement inv = k_->inv(r[piv]);
  for (auto& c : r) c = k_->mul(c, inv);
  for (auto& row : rows_) {
    const FieldElement f = row[piv];
    if (k_->is_zero(f)) continue;
    for (std::size_t j = 0; j < dim_; ++j) row[j] = k_->sub(row[j], k_->mul(f, r[j]));
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.rows_) {
    if (!contains(v)) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_coordinates(const Field& k, FieldElement a) { return k.coeffs(a); }

Matrix multiplication_matrix(const Field& k, const Field& fp, FieldElement c) {
  const std::size_t e = k.degree();
  Matrix m(e, e);
  for (std::size_t i = 0; i < e; ++i) {
    std::vector<std::uint32_t> unit(e, 0);
    unit[i] = 1;
    const auto img = k.coeffs(k.mul(c, k.from_coeffs(unit)));
    for (std::size_t r = 0; r < e; ++r) m.at(r, i) = fp.element(img[r]);
  }
  return m;
}

Matrix frobenius_matrix(const Field& k, const Field& fp, int times) {
  const std::size_t e = k.degree();
  Matrix m(e, e);
  for (std::size_t i = 0; i < e; ++i) {
    std::vector<std::uint32_t> unit(e, 0);
    unit[i] = 1;
    const auto img = k.coeffs(frob_times(k, k.from_coeffs(unit), times));
    for (std::size_t r = 0; r < e; ++r) m.at(r, i) = fp.element(img[r]);
  }
  return m;
}

}  // namespace frobkit
