#pragma once

#include <optional>
#include <vector>

#include "frobkit/field.hpp"

namespace frobkit {

using Vec = std::vector<FieldElement>;

/// Dense matrix over a finite field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);
  bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

Matrix multiply(const Field& k, const Matrix& a, const Matrix& b);
Vec multiply(const Field& k, const Matrix& a, const Vec& v);
/// Entrywise field Frobenius applied `times` times (negative: roots).
Matrix frobenius_entries(const Field& k, const Matrix& a, int times);
Vec frobenius_entries(const Field& k, const Vec& v, int times);

/// Reduced row echelon form; `pivots` lists the pivot column of each row.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
};
Echelon row_echelon(const Field& k, Matrix a);
std::size_t rank(const Field& k, const Matrix& a);
/// Basis of { x : a x = 0 }.
std::vector<Vec> kernel(const Field& k, const Matrix& a);
/// Some x with a x = b, or nullopt.
std::optional<Vec> solve(const Field& k, const Matrix& a, const Vec& b);

/// A k-subspace of k^dim kept as a fully reduced echelon basis.
class Subspace {
 public:
  Subspace(const Field& k, std::size_t dim) : k_(&k), dim_(dim) {}

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vec>& basis() const noexcept { return rows_; }

  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v; returns whether the dimension grew.
  bool insert(const Vec& v);
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.contains(b);
  }

 private:
  const Field* k_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Restriction of scalars from k = F_{p^e} to F_p. Coordinates of an element
// are the base-p digits of its code.
std::vector<std::uint32_t> prime_coordinates(const Field& k, FieldElement a);
/// e x e matrix over F_p of the map a -> c * a.
Matrix multiplication_matrix(const Field& k, const Field& fp, FieldElement c);
/// e x e matrix over F_p of the Frobenius a -> a^p (times < 0 for roots).
Matrix frobenius_matrix(const Field& k, const Field& fp, int times);

}  // namespace frobkit
