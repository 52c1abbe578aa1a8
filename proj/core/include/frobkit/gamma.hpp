#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frobkit/cartier.hpp"

namespace frobkit {

/// gamma-sheaf N = P^s / relations over R = P/I with gamma(e_j) = sum_i A_ij (x) e_i.
class GammaSheaf {
 public:
  /// Throws InvalidArgument if gamma does not respect the relations.
  static GammaSheaf create(QuotientContext ctx, std::size_t rank, std::vector<FreeVector> relations,
                           PolyMatrix a, const Budget& budget = {});
  /// (O, A = (1)).
  static GammaSheaf unit(const QuotientContext& ctx);

  const QuotientContext& context() const noexcept { return ctx_; }
  const RingPtr& ring() const noexcept { return ctx_.ring; }
  std::size_t rank() const noexcept { return rank_; }
  const GroebnerBasis& relations() const noexcept { return rel_; }
  const std::vector<FreeVector>& relation_generators() const noexcept { return rel_gens_; }
  const PolyMatrix& matrix() const noexcept { return a_; }

  /// Relations of F^{e*}N: the relations twisted by p^e, plus I P^s.
  GroebnerBasis twisted_relations(std::uint32_t e, const Budget& budget = {}) const;

  friend bool operator==(const GammaSheaf& a, const GammaSheaf& b);

 private:
  GammaSheaf() = default;

  QuotientContext ctx_;
  std::size_t rank_ = 0;
  std::vector<FreeVector> rel_gens_;
  GroebnerBasis rel_;
  PolyMatrix a_;
};

/// Columns A rho (rho a relation) that are nonzero in F*N; empty when gamma
/// is well defined.
std::vector<std::size_t> gamma_violations(const QuotientContext& ctx, const GroebnerBasis& relations,
                                          const PolyMatrix& a, const Budget& budget = {});

struct GammaIterate {
  std::uint32_t level = 1;
  PolyMatrix matrix;  // gamma_e(e_j) = sum_i matrix(i, j) e_i in F^{e*}N
};

/// Gamma_1 = A, Gamma_{e+1} = A^{[p^e]} Gamma_e, entries reduced modulo I.
GammaIterate gamma_iterate(const GammaSheaf& n, std::uint32_t e);

NilpotenceResult gamma_is_nilpotent(const GammaSheaf& n, std::uint32_t e_max, const Budget& budget = {});

/// The Cartier module N (x) omega. Over a quotient ring the regular sequence
/// presenting I supplies the dualizing factor (f_1 ... f_c)^{p-1}.
CartierModule twist_to_cartier(const GammaSheaf& n, std::span<const Polynomial> sequence = {},
                               const Budget& budget = {});
/// The same module computed through the dual basis of F_*P and the tensor
/// form of the functional kappa_X.
CartierModule twist_to_cartier_dual_basis(const GammaSheaf& n, std::span<const Polynomial> sequence = {},
                                          const Budget& budget = {});
/// M (x) omega^{-1}; ambient ring only.
GammaSheaf twist_to_gamma(const CartierModule& m, const Budget& budget = {});

/// (F*N, F*gamma).
GammaSheaf frobenius_twist_root(const GammaSheaf& n, const Budget& budget = {});

/// k-dimension of Gen(N), the eventual rank of gamma_e.
std::size_t gen_stable_dimension(const GammaSheaf& n, const Budget& budget = {});

/// gamma on the localization N_h; the matrix is unchanged.
class LocalizedGamma {
 public:
  LocalizedGamma(GammaSheaf n, Polynomial h, std::vector<Polynomial> sequence);

  const GammaSheaf& sheaf() const noexcept { return n_; }
  const Polynomial& denominator() const noexcept { return h_; }
  /// The twisted Cartier operator on (N (x) omega)_h evaluated directly from A.
  Fraction twisted_kappa(const Fraction& f) const;

 private:
  GammaSheaf n_;
  Polynomial h_;
  std::vector<Polynomial> sequence_;
};

LocalizedGamma gamma_restrict_open(const GammaSheaf& n, const Polynomial& h,
                                   std::span<const Polynomial> sequence = {});

}  // namespace frobkit
