#include "frobkit/koszul.hpp"

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

void require_same_context(const QuotientContext& a, const QuotientContext& b, const char* what) {
  if (!a.ring->compatible(*b.ring) || !submodule_equal(a.ideal, b.ideal)) {
    throw InvalidArgument(std::string(what) + " does not live on the ambient of the immersion");
  }
}

std::vector<FreeVector> with_sequence_relations(const std::vector<FreeVector>& rel,
                                                std::span<const Polynomial> seq, const RingPtr& ring,
                                                std::size_t rank) {
  std::vector<FreeVector> out = rel;
  for (const auto& f : seq) {
    for (std::size_t j = 0; j < rank; ++j) out.push_back(f * FreeVector::unit(ring, rank, j));
  }
  return out;
}

Polynomial product_power(const RingPtr& ring, std::span<const Polynomial> seq) {
  Polynomial prod = Polynomial::constant(ring, ring->field().one());
  for (const auto& f : seq) prod *= f;
  return prod.pow(ring->field().characteristic() - 1);
}

}  // namespace

ClosedImmersion ClosedImmersion::create(QuotientContext ambient, std::vector<Polynomial> sequence,
                                        const Budget& budget) {
  if (sequence.empty()) throw InvalidArgument("closed immersion needs a nonempty sequence");
  if (!is_regular_sequence(sequence, ambient, budget)) throw InvalidArgument("sequence is not regular");
  ClosedImmersion im;
  std::vector<Polynomial> gens = ambient.ideal.polynomials();
  gens.insert(gens.end(), sequence.begin(), sequence.end());
  im.target_ = QuotientContext::create(ambient.ring, std::move(gens), budget);
  im.factor_ = product_power(ambient.ring, sequence);
  im.seq_ = std::move(sequence);
  im.ambient_ = std::move(ambient);
  return im;
}

CartierModule cartier_pullback(const CartierModule& m, const ClosedImmersion& im, const Budget& budget) {
  require_same_context(m.context(), im.ambient(), "Cartier module");
  const RingPtr& ring = m.ring();
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t nv = ring->nvars();
  std::vector<KappaEntry> entries;
  for (std::uint32_t j = 0; j < m.rank(); ++j) {
    const FreeVector base = im.koszul_factor() * FreeVector::unit(ring, m.rank(), j);
    for (std::uint64_t idx = 0; idx < m.basis_size(); ++idx) {
      const Monomial a = exponent_from_index(idx, p, nv);
      FreeVector v = kappa_apply(m, Polynomial::monomial(ring, a, ring->field().one()) * base);
      if (!v.is_zero()) entries.push_back({j, a, std::move(v)});
    }
  }
  return CartierModule::create(im.target(), m.rank(),
                               with_sequence_relations(m.relations().vectors(), im.sequence(), ring, m.rank()),
                               entries, budget);
}

TransitionMatrix transition_factor(std::span<const Polynomial> f, std::span<const Polynomial> g,
                                   const QuotientContext& ctx, const Budget& budget) {
  if (f.size() != g.size()) throw InvalidArgument("sequences of different lengths");
  if (!is_regular_sequence(f, ctx, budget) || !is_regular_sequence(g, ctx, budget)) {
    throw InvalidArgument("sequence is not regular");
  }
  const RingPtr& ring = ctx.ring;
  std::vector<Polynomial> fgens(f.begin(), f.end());
  std::vector<Polynomial> ggens(g.begin(), g.end());
  const auto base = ctx.ideal.polynomials();
  fgens.insert(fgens.end(), base.begin(), base.end());
  ggens.insert(ggens.end(), base.begin(), base.end());
  const GroebnerBasis fi = buchberger(ring, fgens, budget);
  if (!submodule_equal(fi, buchberger(ring, ggens, budget))) throw InvalidArgument("sequences generate different ideals");
  const std::size_t c = f.size();
  TransitionMatrix t{PolyMatrix(ring, c, c), Polynomial(ring)};
  for (std::size_t i = 0; i < c; ++i) {
    const auto coeffs = lift(ring, fgens, g[i], budget);
    if (!coeffs) throw InvalidArgument("sequences generate different ideals");
    for (std::size_t j = 0; j < c; ++j) t.c.at(i, j) = (*coeffs)[j];
  }
  t.det = fi.normal_form(t.c.determinant());
  return t;
}

CartierModule dualizing_module(const ClosedImmersion& im, const Budget& budget) {
  if (!im.ambient().is_ambient()) throw InvalidArgument("dualizing_module needs the polynomial ring as ambient");
  return cartier_pullback(CartierModule::omega(im.ambient().ring), im, budget);
}

GammaSheaf gamma_pullback(const GammaSheaf& n, const ClosedImmersion& im, const Budget& budget) {
  require_same_context(n.context(), im.ambient(), "gamma-sheaf");
  return GammaSheaf::create(im.target(), n.rank(),
                            with_sequence_relations(n.relations().vectors(), im.sequence(), n.ring(), n.rank()),
                            n.matrix(), budget);
}

CommutationReport check_pullback_commutation(const GammaSheaf& n, const ClosedImmersion& im, const Budget& budget) {
  if (!n.context().is_ambient()) throw InvalidArgument("the gamma-sheaf must live on the polynomial ring");
  const CartierModule route_a = cartier_pullback(twist_to_cartier(n, {}, budget), im, budget);
  const CartierModule route_b = twist_to_cartier(gamma_pullback(n, im, budget), im.sequence(), budget);
  CommutationReport report;
  if (!submodule_equal(route_a.relations(), route_b.relations())) {
    report.equal = false;
    return report;
  }
  const std::uint32_t p = n.ring()->field().characteristic();
  for (std::uint32_t j = 0; j < n.rank(); ++j) {
    for (std::uint64_t idx = 0; idx < route_a.basis_size(); ++idx) {
      const FreeVector& va = route_a.entry(j, idx);
      const FreeVector& vb = route_b.entry(j, idx);
      if (!(va == vb)) {
        report.equal = false;
        report.discrepancies.push_back({j, exponent_from_index(idx, p, n.ring()->nvars()), va, vb});
      }
    }
  }
  return report;
}

bool intertwined_by(const CartierModule& along_f, const CartierModule& along_g, const Polynomial& det) {
  if (along_f.rank() != along_g.rank() || !submodule_equal(along_f.relations(), along_g.relations())) return false;
  const RingPtr& ring = along_f.ring();
  const std::uint32_t p = ring->field().characteristic();
  for (std::uint32_t j = 0; j < along_f.rank(); ++j) {
    for (std::uint64_t idx = 0; idx < along_f.basis_size(); ++idx) {
      const FreeVector x = Polynomial::monomial(ring, exponent_from_index(idx, p, ring->nvars()), ring->field().one()) *
                           FreeVector::unit(ring, along_f.rank(), j);
      const FreeVector lhs = along_g.reduce(det * along_f.entry(j, idx));
      const FreeVector rhs = kappa_apply(along_g, det * x);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool koszul_factors_congruent(const ClosedImmersion& f, const ClosedImmersion& g, const Polynomial& det,
                              const Budget& budget) {
  const RingPtr& ring = f.ambient().ring;
  const std::uint32_t p = ring->field().characteristic();
  std::vector<Polynomial> gens = f.ambient().ideal.polynomials();
  for (const auto& fi : f.sequence()) gens.push_back(fi.pow(p));
  const GroebnerBasis frob = buchberger(ring, gens, budget);
  return frob.contains(g.koszul_factor() - det.pow(p - 1) * f.koszul_factor());
}

}  // namespace frobkit
