#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frobkit/frobenius.hpp"
#include "frobkit/groebner.hpp"
#include "frobkit/linalg.hpp"

namespace frobkit {

struct KappaEntry {
  std::uint32_t j = 0;
  Monomial a;
  FreeVector value;
};

/// Cartier module over R = P/I presented as P^s / relations, with kappa given
/// by its values on the F_*-generators x^a e_j.
class CartierModule {
 public:
  /// Relations are closed under I e_j automatically; entries not listed are
  /// zero. Table values are stored in normal form.
  static CartierModule create(QuotientContext ctx, std::size_t rank, std::vector<FreeVector> relations,
                              const std::vector<KappaEntry>& entries, const Budget& budget = {});
  /// (omega_P, kappa_X) on the ambient ring, identified with P e.
  static CartierModule omega(const RingPtr& ring);
  static CartierModule zero(QuotientContext ctx, std::size_t rank, std::vector<FreeVector> relations = {},
                            const Budget& budget = {});
  /// The k-vector space k^d (as P^d / (x_i e_j)) with kappa(e_j) = column j of U.
  static CartierModule from_matrix(const RingPtr& ring, const Matrix& u);

  const QuotientContext& context() const noexcept { return ctx_; }
  const RingPtr& ring() const noexcept { return ctx_.ring; }
  std::size_t rank() const noexcept { return rank_; }
  const GroebnerBasis& relations() const noexcept { return rel_; }
  const std::vector<FreeVector>& relation_generators() const noexcept { return rel_gens_; }
  std::uint64_t basis_size() const noexcept { return basis_size_; }

  const FreeVector& entry(std::uint32_t j, const Monomial& a) const;
  const FreeVector& entry(std::uint32_t j, std::uint64_t index) const { return table_[j * basis_size_ + index]; }
  /// All nonzero entries, ordered by (j, index).
  std::vector<KappaEntry> entries() const;

  FreeVector reduce(const FreeVector& v) const { return rel_.normal_form(v); }
  /// kappa of v without normal-forming v first; equals kappa_apply when the
  /// structure is well defined.
  FreeVector apply_raw(const FreeVector& v) const;

  /// Same rank, relation module and table.
  friend bool operator==(const CartierModule& a, const CartierModule& b);

 private:
  CartierModule() = default;

  QuotientContext ctx_;
  std::size_t rank_ = 0;
  std::vector<FreeVector> rel_gens_;
  GroebnerBasis rel_;
  std::uint64_t basis_size_ = 0;
  std::vector<FreeVector> table_;
};

struct Violation {
  std::size_t relation;  // index into relations().elements()
  Monomial a;
  FreeVector residue;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate_cartier_structure(const CartierModule& m);

FreeVector kappa_apply(const CartierModule& m, const FreeVector& v);
FreeVector kappa_power(const CartierModule& m, std::size_t e, const FreeVector& v);

struct StableImageResult {
  std::vector<GroebnerBasis> chain;  // level 0, 1, ..., index + 1
  std::size_t index = 0;
  GroebnerBasis stable;
};

StableImageResult stable_image(const CartierModule& m, const Budget& budget = {});

enum class NilVerdict { Nilpotent, NotNilpotent, NotNilpotentUpTo };

struct NilpotenceResult {
  NilVerdict verdict = NilVerdict::NotNilpotent;
  std::size_t index = 0;  // level for Nilpotent, bound for NotNilpotentUpTo
};

const char* to_string(NilVerdict v) noexcept;

NilpotenceResult is_nilpotent(const CartierModule& m, const Budget& budget = {});
/// A coherent Cartier module vanishes as a crystal iff it is nilpotent.
NilpotenceResult crystal_is_zero(const CartierModule& m, const Budget& budget = {});

/// Every stable generator is killed by a power of each generator of J.
bool is_crystal_supported_on(const CartierModule& m, std::span<const Polynomial> j, const Budget& budget = {});

/// m / h^s in M_h.
struct Fraction {
  FreeVector numerator;
  std::uint32_t exponent = 0;
};

/// Cartier structure on the localization M_h.
class LocalizedCartier {
 public:
  LocalizedCartier(CartierModule m, Polynomial h, Budget budget);

  const CartierModule& module() const noexcept { return m_; }
  const Polynomial& denominator() const noexcept { return h_; }

  /// kappa(m / h^s) = kappa(h^{pt - s} m) / h^t with t = ceil(s / p).
  Fraction kappa(const Fraction& f) const;
  /// Equality in M_h, decided in P^s / saturate(relations, h).
  bool equal(const Fraction& a, const Fraction& b) const;

 private:
  CartierModule m_;
  Polynomial h_;
  Budget budget_;
  mutable std::optional<GroebnerBasis> saturated_;
};

/// Throws InvalidArgument when h lies in I.
LocalizedCartier restrict_to_principal_open(const CartierModule& m, const Polynomial& h, const Budget& budget = {});

/// k-basis of P^s / N given by the standard monomials of N.
class StaircaseBasis {
 public:
  /// Throws InfiniteDimensional if the staircase is infinite.
  explicit StaircaseBasis(const GroebnerBasis& relations);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::pair<std::uint32_t, Monomial>>& elements() const noexcept { return basis_; }
  FreeVector element(std::size_t l) const;
  /// Coordinates of the normal form of v.
  Vec coordinates(const FreeVector& v) const;
  FreeVector vector(const Vec& coords) const;

 private:
  GroebnerBasis rel_;
  std::vector<std::pair<std::uint32_t, Monomial>> basis_;
};

enum class Direction { Inverse, Forward };

/// T(v) = U v^{[1/p]} (inverse) or U v^{[p]} (forward) on k^d.
struct SemilinearEndo {
  FieldPtr field;
  Matrix u;
  Direction direction = Direction::Inverse;

  std::size_t dim() const noexcept { return u.rows(); }
  Vec apply(const Vec& v) const;
  /// k-span of T(W).
  Subspace image(const Subspace& w) const;
};

SemilinearEndo to_semilinear(const CartierModule& m);
NilpotenceResult semilinear_nilpotent(const SemilinearEndo& t);

/// F_p-basis of the k-linear maps phi: M -> N with phi T_M = T_N phi.
std::vector<Matrix> hom_commuting(const SemilinearEndo& m, const SemilinearEndo& n);
/// Whether phi (dim N x dim M) has nilpotent kernel and cokernel.
/// Throws InvalidArgument if phi does not commute with the operators.
bool nil_isomorphism_test(const Matrix& phi, const SemilinearEndo& m, const SemilinearEndo& n);

/// The stable subspace S = T^infinity(k^d) with the restricted operator and
/// the inclusion S -> k^d.
struct StableSubspace {
  SemilinearEndo op;
  Matrix inclusion;
};
StableSubspace stable_subspace(const SemilinearEndo& t);

}  // namespace frobkit
