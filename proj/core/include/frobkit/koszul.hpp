#pragma once

#include <span>
#include <vector>

#include "frobkit/gamma.hpp"

namespace frobkit {

/// Spec(R / (f)) -> Spec(R) for a sequence f regular on R = P/J.
class ClosedImmersion {
 public:
  /// Throws InvalidArgument unless the sequence is regular on the ambient.
  static ClosedImmersion create(QuotientContext ambient, std::vector<Polynomial> sequence, const Budget& budget = {});

  const QuotientContext& ambient() const noexcept { return ambient_; }
  const std::vector<Polynomial>& sequence() const noexcept { return seq_; }
  /// R / (J + (f)).
  const QuotientContext& target() const noexcept { return target_; }
  /// (f_1 ... f_c)^{p-1}.
  const Polynomial& koszul_factor() const noexcept { return factor_; }

 private:
  ClosedImmersion() = default;

  QuotientContext ambient_;
  std::vector<Polynomial> seq_;
  QuotientContext target_;
  Polynomial factor_;
};

/// kappa'(m) = kappa((f_1 ... f_c)^{p-1} m) on M / (f) M.
CartierModule cartier_pullback(const CartierModule& m, const ClosedImmersion& im, const Budget& budget = {});

struct TransitionMatrix {
  PolyMatrix c;     // g_i = sum_j c(i, j) f_j modulo the ambient ideal
  Polynomial det;   // det(c) modulo the ideal generated by the sequences
};

TransitionMatrix transition_factor(std::span<const Polynomial> f, std::span<const Polynomial> g,
                                   const QuotientContext& ctx, const Budget& budget = {});

/// omega of the target with its Cartier structure; the ambient must be P itself.
CartierModule dualizing_module(const ClosedImmersion& im, const Budget& budget = {});

GammaSheaf gamma_pullback(const GammaSheaf& n, const ClosedImmersion& im, const Budget& budget = {});

struct CommutationDiscrepancy {
  std::uint32_t j;
  Monomial a;
  FreeVector pullback_of_twist;
  FreeVector twist_of_pullback;
};

struct CommutationReport {
  bool equal = true;
  std::vector<CommutationDiscrepancy> discrepancies;
};

/// Compares cartier_pullback(twist_to_cartier(N)) with
/// twist_to_cartier(gamma_pullback(N)) entry by entry. N lives on P.
CommutationReport check_pullback_commutation(const GammaSheaf& n, const ClosedImmersion& im,
                                             const Budget& budget = {});

/// Multiplication by det intertwines the two raw pullbacks:
/// det * kappa_f(x^a e_j) == kappa_g(det * x^a e_j) for all generators.
bool intertwined_by(const CartierModule& along_f, const CartierModule& along_g, const Polynomial& det);

/// prod(g)^{p-1} - det^{p-1} prod(f)^{p-1} lies in J + (f_1^p, ..., f_c^p).
bool koszul_factors_congruent(const ClosedImmersion& f, const ClosedImmersion& g, const Polynomial& det,
                              const Budget& budget = {});

}  // namespace frobkit
