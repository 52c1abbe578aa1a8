#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frobkit/error.hpp"
#include "frobkit/polyring.hpp"

namespace frobkit {

// Term of an element of P^s: coefficient * mono * e_pos.
struct ModuleTerm {
  Monomial mono;
  std::uint32_t pos = 0;
  FieldElement coeff;
};

// Sparse element of P^s, sorted by the module order, largest first.
using ModuleElement = std::vector<ModuleTerm>;

/// Reduced Groebner basis of a submodule of P^s (an ideal when s == 1).
///
/// The module order is position-over-term with e_0 > e_1 > ...; when the
/// ring carries an elimination block that block is compared before the
/// position, which makes intersections with the block-free part computable.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::size_t rank, std::vector<ModuleElement> reduced);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool is_zero() const noexcept { return elems_.empty(); }
  /// Whether the submodule is all of P^s.
  bool is_full() const noexcept;

  const std::vector<ModuleElement>& elements() const noexcept { return elems_; }
  std::vector<FreeVector> vectors() const;
  /// Generators as polynomials; requires rank 1.
  std::vector<Polynomial> polynomials() const;

  FreeVector normal_form(const FreeVector& v) const;
  Polynomial normal_form(const Polynomial& f) const;
  ModuleElement normal_form(const ModuleElement& v) const;
  bool contains(const FreeVector& v) const { return normal_form(v).is_zero(); }
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Standard monomials (position, monomial) of P^s / M sorted by position
  /// then decreasing monomial; nullopt if the quotient is infinite
  /// dimensional over k.
  std::optional<std::vector<std::pair<std::uint32_t, Monomial>>> staircase() const;

 private:
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<ModuleElement> elems_;
};

// Conversions between the public vector types and module elements.
ModuleElement to_module_element(const FreeVector& v);
ModuleElement to_module_element(const Polynomial& f, std::uint32_t pos = 0);
FreeVector to_free_vector(const RingPtr& ring, std::size_t rank, const ModuleElement& v);

/// Ideal Groebner basis; rank 1.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens, const Budget& budget = {});
/// Submodule of P^rank generated by the vectors.
GroebnerBasis module_buchberger(const RingPtr& ring, std::span<const FreeVector> gens, std::size_t rank,
                                const Budget& budget = {});

/// A == B as submodules. Throws RankMismatch on differing ranks.
bool submodule_equal(const GroebnerBasis& a, const GroebnerBasis& b);
/// B is contained in A.
bool submodule_contains(const GroebnerBasis& a, const GroebnerBasis& b);

/// (I : g) through the elimination of t from t*I + (1 - t)*(g).
GroebnerBasis ideal_quotient(const GroebnerBasis& ideal, const Polynomial& g, const Budget& budget = {});
/// (N : h) = { v : h v in N } for a submodule N.
GroebnerBasis module_quotient(const GroebnerBasis& module, const Polynomial& h, const Budget& budget = {});
/// N : h^infinity, iterating module_quotient until the submodule is stable.
GroebnerBasis saturate(const GroebnerBasis& module, const Polynomial& h, const Budget& budget = {});

/// Expresses g in terms of the generators: returns c with g = sum c_k gens_k,
/// or nullopt when g is not in the ideal they generate.
std::optional<std::vector<Polynomial>> lift(const RingPtr& ring, std::span<const Polynomial> gens,
                                            const Polynomial& g, const Budget& budget = {});

/// Exact quotient f / g; throws InvalidArgument if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Every S-polynomial of the basis elements reduces to zero.
bool verify_groebner(const GroebnerBasis& gb);

/// QuotientContext: R = P / I together with the reduced basis of I.
struct QuotientContext {
  RingPtr ring;
  GroebnerBasis ideal;
  std::vector<Polynomial> generators;  // as supplied

  static QuotientContext ambient(const RingPtr& ring);
  static QuotientContext create(const RingPtr& ring, std::vector<Polynomial> generators,
                                const Budget& budget = {});

  bool is_ambient() const noexcept { return ideal.is_zero(); }
  Polynomial reduce(const Polynomial& f) const { return ideal.normal_form(f); }
  std::uint32_t characteristic() const noexcept { return ring->field().characteristic(); }
  std::size_t nvars() const noexcept { return ring->nvars(); }
};

/// f_1..f_m is regular on P / base: each (J_{i-1} : f_i) = J_{i-1} with
/// J_i = base + (f_1..f_i), and J_m is a proper ideal.
bool is_regular_sequence(std::span<const Polynomial> seq, const QuotientContext& base,
                         const Budget& budget = {});
bool is_regular_sequence(std::span<const Polynomial> seq, const RingPtr& ring, const Budget& budget = {});

}  // namespace frobkit
