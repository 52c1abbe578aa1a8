#pragma once

#include <utility>
#include <vector>

#include "frobkit/polyring.hpp"

namespace frobkit {

// Exponent vectors a in [0,p)^n index the basis {x^a} of F_*P over P. They
// are stored as Monomials and enumerated by the integer sum_i a_i p^i.
std::uint64_t basis_size(std::uint32_t p, std::size_t n);
std::uint64_t exponent_index(const Monomial& a, std::uint32_t p, std::size_t n);
Monomial exponent_from_index(std::uint64_t index, std::uint32_t p, std::size_t n);
/// The all-(p-1) exponent.
Monomial top_exponent(std::uint32_t p, std::size_t n);

/// f = sum_a g_a^p x^a; only nonzero parts are kept, sorted by index.
struct FrobeniusDecomposition {
  RingPtr ring;
  std::vector<std::pair<Monomial, Polynomial>> parts;

  Polynomial part(const Monomial& a) const;
  Polynomial recompose() const;
};

FrobeniusDecomposition pth_root_decompose(const Polynomial& f);

/// Coefficient of kappa_X(f dx_1 ^ ... ^ dx_n), i.e. g_{(p-1,...,p-1)}.
Polynomial cartier_volume(const Polynomial& f);
/// The same operator evaluated term by term from the closed formula
/// c x^i -> c^{1/p} x^{(i+1)/p - 1}, zero unless p | i_k + 1 for all k.
Polynomial cartier_volume_formula(const Polynomial& f);

/// phi_a(f) = g_a.
Polynomial dual_basis_eval(const Monomial& a, const Polynomial& f);

/// An element of the top forms, f dx_1 ^ ... ^ dx_n.
struct VolumeForm {
  Polynomial coefficient;
};
VolumeForm kappa_x(const VolumeForm& w);

/// sum_a phi_a (x) v_a: a functional on F_*P with values in a free module,
/// written in the tensor form of the dual basis. Zero values are dropped.
struct TensorForm {
  std::size_t rank = 0;
  std::vector<std::pair<Monomial, FreeVector>> terms;
};

TensorForm can_inverse_table(std::size_t rank, const std::vector<std::pair<Monomial, FreeVector>>& phi_values);
/// Evaluates the tensor at s: sum_a phi_a(s) * v_a.
FreeVector can_apply(const TensorForm& form, const RingPtr& ring, const Polynomial& s);
/// The table a -> value(x^a), recovered from the tensor form.
std::vector<std::pair<Monomial, FreeVector>> can_table(const TensorForm& form, const RingPtr& ring);

}  // namespace frobkit
