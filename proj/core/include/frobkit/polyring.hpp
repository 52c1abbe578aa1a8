#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobkit/field.hpp"

namespace frobkit {

inline constexpr std::size_t kMaxVars = 12;

// Exponent vector. Entries past the ring's variable count stay zero, so
// equality and the lexicographic <=> below are independent of the ring.
struct Monomial {
  std::array<std::uint32_t, kMaxVars> exp{};

  std::uint32_t& operator[](std::size_t i) { return exp[i]; }
  std::uint32_t operator[](std::size_t i) const { return exp[i]; }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_one() const noexcept {
    for (auto e : exp) {
      if (e) return false;
    }
    return true;
  }
  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp[i] > other.exp[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp[i] && other.exp[i]) return false;
    }
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] + b.exp[i];
    return r;
  }
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] - b.exp[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class MonomialOrder { Lex, GRevLex };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// RingContext: P = k[x_1..x_n] with a term order. A ring may carry an
/// elimination block: its first `elimination_block()` variables are compared
/// first (by degree, then lex) and dominate every other variable.
class Ring {
 public:
  static RingPtr create(FieldPtr field, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::GRevLex);

  Ring(FieldPtr field, std::vector<std::string> vars, MonomialOrder order, std::size_t elim);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  MonomialOrder order() const noexcept { return order_; }
  std::size_t elimination_block() const noexcept { return elim_; }
  std::optional<std::size_t> var_index(const std::string& name) const;

  /// Copy of this ring with one fresh variable prepended as an elimination
  /// block. Monomials of this ring map in by shifting exponents one place.
  RingPtr with_elimination_variable() const;
  /// The ring obtained by dropping the elimination block.
  RingPtr base_ring() const;

  /// -1, 0, 1 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    if (elim_) {
      const int c = compare_block(a, b);
      if (c) return c;
    }
    return compare_rest(a, b);
  }
  int compare_block(const Monomial& a, const Monomial& b) const noexcept;
  int compare_rest(const Monomial& a, const Monomial& b) const noexcept;

  /// Same field, variables, order and elimination layout.
  bool compatible(const Ring& other) const noexcept;

 private:
  FieldPtr field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::size_t elim_;
};

struct Term {
  Monomial mono;
  FieldElement coeff;
};

/// Sparse polynomial; terms are kept sorted by the ring order, largest first,
/// with no zero coefficients. A default-constructed Polynomial is an unbound
/// zero that adopts the ring of whatever it is combined with.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, FieldElement c);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, FieldElement c);
  /// Sorts the terms and merges duplicates.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  std::uint64_t total_degree() const noexcept;
  /// Coefficient of m (zero if absent).
  FieldElement coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  Polynomial scaled(FieldElement c) const;
  Polynomial times_term(const Monomial& m, FieldElement c) const;
  Polynomial pow(std::uint64_t n) const;

  /// The ring Frobenius f -> f^p applied `times` times: coefficients go
  /// through the field Frobenius and exponents are multiplied by p.
  Polynomial frobenius_twist(std::uint32_t times = 1) const;

  /// Evaluate at a point of the field L, which must be k itself or an
  /// extension of a prime field k (coefficients embed by their code).
  FieldElement evaluate(const Field& L, std::span<const FieldElement> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical text, e.g. "x^2*y + 2*y^3"; "0" for zero.
  std::string to_string(const std::string& gen = "t") const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Element of the free module P^s.
class FreeVector {
 public:
  FreeVector() = default;
  FreeVector(const RingPtr& ring, std::size_t rank);
  explicit FreeVector(std::vector<Polynomial> comps) : comps_(std::move(comps)) {}

  static FreeVector unit(const RingPtr& ring, std::size_t rank, std::size_t j);

  std::size_t rank() const noexcept { return comps_.size(); }
  Polynomial& operator[](std::size_t j) { return comps_[j]; }
  const Polynomial& operator[](std::size_t j) const { return comps_[j]; }
  const std::vector<Polynomial>& components() const noexcept { return comps_; }
  bool is_zero() const noexcept;

  friend FreeVector operator+(const FreeVector& a, const FreeVector& b);
  friend FreeVector operator-(const FreeVector& a, const FreeVector& b);
  friend FreeVector operator*(const Polynomial& f, const FreeVector& v);
  FreeVector& operator+=(const FreeVector& b) { return *this = *this + b; }
  FreeVector frobenius_twist(std::uint32_t times = 1) const;

  friend bool operator==(const FreeVector& a, const FreeVector& b);

  /// "[f_0, f_1, ...]".
  std::string to_string(const std::string& gen = "t") const;

 private:
  std::vector<Polynomial> comps_;
};

/// Dense matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const RingPtr& ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(const RingPtr& ring, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Polynomial& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FreeVector column(std::size_t j) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend FreeVector operator*(const PolyMatrix& a, const FreeVector& v);
  PolyMatrix frobenius_twist(std::uint32_t times = 1) const;
  /// Determinant by cofactor expansion (square matrices of small size).
  Polynomial determinant() const;
  bool is_zero() const noexcept;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

}  // namespace frobkit
