#include "frobkit/gamma.hpp"

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

PolyMatrix reduce_entries(const QuotientContext& ctx, PolyMatrix m) {
  if (ctx.is_ambient()) return m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = ctx.reduce(m.at(i, j));
  }
  return m;
}

std::vector<FreeVector> ideal_multiples(const QuotientContext& ctx, std::size_t rank) {
  std::vector<FreeVector> out;
  for (const auto& g : ctx.ideal.polynomials()) {
    for (std::size_t j = 0; j < rank; ++j) out.push_back(g * FreeVector::unit(ctx.ring, rank, j));
  }
  return out;
}

GroebnerBasis twisted(const QuotientContext& ctx, const GroebnerBasis& rel, std::uint32_t e, const Budget& budget) {
  std::vector<FreeVector> gens = ideal_multiples(ctx, rel.rank());
  for (const auto& r : rel.vectors()) gens.push_back(r.frobenius_twist(e));
  return module_buchberger(ctx.ring, gens, rel.rank(), budget);
}

// (f_1 ... f_c)^{p-1}, after checking that the sequence is regular and
// presents the ideal of the context.
Polynomial dualizing_factor(const QuotientContext& ctx, std::span<const Polynomial> sequence,
                            const Budget& budget) {
  const RingPtr& ring = ctx.ring;
  const Polynomial one = Polynomial::constant(ring, ring->field().one());
  if (sequence.empty()) {
    if (!ctx.is_ambient()) throw InvalidArgument("a regular sequence presenting the ideal is required");
    return one;
  }
  if (!is_regular_sequence(sequence, ring, budget)) throw InvalidArgument("sequence is not regular");
  if (!submodule_equal(buchberger(ring, sequence, budget), ctx.ideal)) {
    throw InvalidArgument("sequence does not generate the ideal");
  }
  Polynomial prod = one;
  for (const auto& f : sequence) prod *= f;
  return prod.pow(ring->field().characteristic() - 1);
}

template <typename Volume>
CartierModule twist_with(const GammaSheaf& n, std::span<const Polynomial> sequence, const Budget& budget,
                         Volume&& volume) {
  const RingPtr& ring = n.ring();
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t nv = ring->nvars();
  const Polynomial factor = dualizing_factor(n.context(), sequence, budget);
  std::vector<Polynomial> weighted;  // factor * A_ij, row-major
  for (std::size_t i = 0; i < n.rank(); ++i) {
    for (std::size_t j = 0; j < n.rank(); ++j) weighted.push_back(factor * n.matrix().at(i, j));
  }
  std::vector<KappaEntry> entries;
  const std::uint64_t size = basis_size(p, nv);
  for (std::uint32_t j = 0; j < n.rank(); ++j) {
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      const Monomial a = exponent_from_index(idx, p, nv);
      FreeVector v(ring, n.rank());
      for (std::size_t i = 0; i < n.rank(); ++i) {
        const Polynomial& w = weighted[i * n.rank() + j];
        if (!w.is_zero()) v[i] = volume(w.times_term(a, ring->field().one()));
      }
      if (!v.is_zero()) entries.push_back({j, a, std::move(v)});
    }
  }
  return CartierModule::create(n.context(), n.rank(), n.relations().vectors(), entries, budget);
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::size_t> gamma_violations(const QuotientContext& ctx, const GroebnerBasis& relations,
                                          const PolyMatrix& a, const Budget& budget) {
  const GroebnerBasis tw = twisted(ctx, relations, 1, budget);
  std::vector<std::size_t> bad;
  const auto rels = relations.vectors();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    if (!tw.contains(a * rels[r])) bad.push_back(r);
  }
  return bad;
}

GammaSheaf GammaSheaf::create(QuotientContext ctx, std::size_t rank, std::vector<FreeVector> relations,
                              PolyMatrix a, const Budget& budget) {
  if (rank == 0) throw InvalidArgument("gamma-sheaf rank must be positive");
  if (a.rows() != rank || a.cols() != rank) throw RankMismatch("structural matrix must be rank x rank");
  for (const auto& r : relations) {
    if (r.rank() != rank) throw RankMismatch("relation of the wrong rank");
  }
  GammaSheaf n;
  n.rank_ = rank;
  n.rel_gens_ = std::move(relations);
  std::vector<FreeVector> all = n.rel_gens_;
  for (auto& v : ideal_multiples(ctx, rank)) all.push_back(std::move(v));
  n.rel_ = module_buchberger(ctx.ring, all, rank, budget);
  // Unbound zero entries adopt the ring here.
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) a.at(i, j) = a.at(i, j) + Polynomial(ctx.ring);
  }
  n.a_ = reduce_entries(ctx, std::move(a));
  n.ctx_ = std::move(ctx);
  const auto bad = gamma_violations(n.ctx_, n.rel_, n.a_, budget);
  if (!bad.empty()) {
    throw InvalidArgument("structural matrix does not respect relation " + n.rel_.vectors()[bad.front()].to_string());
  }
  return n;
}

GammaSheaf GammaSheaf::unit(const QuotientContext& ctx) {
  return create(ctx, 1, {}, PolyMatrix::identity(ctx.ring, 1));
}

GroebnerBasis GammaSheaf::twisted_relations(std::uint32_t e, const Budget& budget) const {
  return twisted(ctx_, rel_, e, budget);
}

bool operator==(const GammaSheaf& a, const GammaSheaf& b) {
  if (a.rank_ != b.rank_ || !a.ring()->compatible(*b.ring())) return false;
  return submodule_equal(a.rel_, b.rel_) && a.a_ == b.a_;
}

GammaIterate gamma_iterate(const GammaSheaf& n, std::uint32_t e) {
  if (e == 0) throw InvalidArgument("gamma_iterate needs e >= 1");
  GammaIterate it{1, n.matrix()};
  for (std::uint32_t level = 1; level < e; ++level) {
    const PolyMatrix step = reduce_entries(n.context(), n.matrix().frobenius_twist(level));
    it.matrix = reduce_entries(n.context(), step * it.matrix);
    it.level = level + 1;
  }
  return it;
}

NilpotenceResult gamma_is_nilpotent(const GammaSheaf& n, std::uint32_t e_max, const Budget& budget) {
  if (e_max == 0) throw InvalidArgument("e_max must be at least 1");
  PolyMatrix g = n.matrix();
  for (std::uint32_t e = 1; e <= e_max; ++e) {
    if (e > 1) {
      g = reduce_entries(n.context(), reduce_entries(n.context(), n.matrix().frobenius_twist(e - 1)) * g);
    }
    const GroebnerBasis tw = n.twisted_relations(e, budget);
    bool zero = true;
    for (std::size_t j = 0; j < n.rank() && zero; ++j) zero = tw.contains(g.column(j));
    if (zero) return {NilVerdict::Nilpotent, e};
  }
  const auto st = n.relations().staircase();
  if (st && e_max >= st->size()) return {NilVerdict::NotNilpotent, e_max};
  return {NilVerdict::NotNilpotentUpTo, e_max};
}

CartierModule twist_to_cartier(const GammaSheaf& n, std::span<const Polynomial> sequence, const Budget& budget) {
  return twist_with(n, sequence, budget, [](const Polynomial& f) { return cartier_volume(f); });
}

CartierModule twist_to_cartier_dual_basis(const GammaSheaf& n, std::span<const Polynomial> sequence,
                                          const Budget& budget) {
  const RingPtr& ring = n.ring();
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t nv = ring->nvars();
  // phi_m = kappa_X(- dx) written as sum_b phi_b (x) kappa_X(x^b dx).
  std::vector<std::pair<Monomial, FreeVector>> values;
  for (std::uint64_t idx = 0; idx < basis_size(p, nv); ++idx) {
    const Monomial b = exponent_from_index(idx, p, nv);
    values.emplace_back(b, FreeVector({cartier_volume_formula(Polynomial::monomial(ring, b, ring->field().one()))}));
  }
  const TensorForm form = can_inverse_table(1, values);
  return twist_with(n, sequence, budget, [&](const Polynomial& f) { return can_apply(form, ring, f)[0]; });
}

GammaSheaf twist_to_gamma(const CartierModule& m, const Budget& budget) {
  if (!m.context().is_ambient()) throw InvalidArgument("twist_to_gamma is only available over the ambient ring");
  const RingPtr& ring = m.ring();
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t nv = ring->nvars();
  const Monomial top = top_exponent(p, nv);
  PolyMatrix a(ring, m.rank(), m.rank());
  for (std::uint32_t j = 0; j < m.rank(); ++j) {
    for (std::uint64_t idx = 0; idx < m.basis_size(); ++idx) {
      const FreeVector& v = m.entry(j, idx);
      if (v.is_zero()) continue;
      const Monomial co = top / exponent_from_index(idx, p, nv);
      for (std::size_t i = 0; i < m.rank(); ++i) {
        a.at(i, j) += v[i].frobenius_twist().times_term(co, ring->field().one());
      }
    }
  }
  return GammaSheaf::create(m.context(), m.rank(), m.relations().vectors(), std::move(a), budget);
}

GammaSheaf frobenius_twist_root(const GammaSheaf& n, const Budget& budget) {
  return GammaSheaf::create(n.context(), n.rank(), n.twisted_relations(1, budget).vectors(),
                            n.matrix().frobenius_twist(1), budget);
}

std::size_t gen_stable_dimension(const GammaSheaf& n, const Budget& budget) {
  const StaircaseBasis source(n.relations());
  const std::size_t d = source.dim();
  if (d == 0) return 0;
  const Field& k = n.ring()->field();
  PolyMatrix g = n.matrix();
  std::size_t r = d;
  for (std::uint32_t e = 1; e <= d + 1; ++e) {
    if (e > 1) {
      g = reduce_entries(n.context(), reduce_entries(n.context(), n.matrix().frobenius_twist(e - 1)) * g);
    }
    const StaircaseBasis target(n.twisted_relations(e, budget));
    Matrix m(target.dim(), d);
    for (std::size_t l = 0; l < d; ++l) {
      const auto& [j, mono] = source.elements()[l];
      m.set_column(l, target.coordinates(Polynomial::monomial(n.ring(), mono, k.one()) * g.column(j)));
    }
    r = rank(k, m);
    if (r == 0) return 0;
  }
  return r;
}

// ---------------------------------------------------------------------------

LocalizedGamma::LocalizedGamma(GammaSheaf n, Polynomial h, std::vector<Polynomial> sequence)
    : n_(std::move(n)), h_(std::move(h)), sequence_(std::move(sequence)) {}

Fraction LocalizedGamma::twisted_kappa(const Fraction& f) const {
  const RingPtr& ring = n_.ring();
  const std::uint32_t p = ring->field().characteristic();
  const Polynomial factor = dualizing_factor(n_.context(), sequence_, {});
  const std::uint32_t t = (f.exponent + p - 1) / p;
  const FreeVector v = h_.pow(static_cast<std::uint64_t>(p) * t - f.exponent) * f.numerator;
  FreeVector out(ring, n_.rank());
  for (std::size_t i = 0; i < n_.rank(); ++i) {
    for (std::size_t j = 0; j < n_.rank(); ++j) {
      if (!v[j].is_zero()) out[i] += cartier_volume(factor * n_.matrix().at(i, j) * v[j]);
    }
  }
  return {n_.relations().normal_form(out), t};
}

LocalizedGamma gamma_restrict_open(const GammaSheaf& n, const Polynomial& h, std::span<const Polynomial> sequence) {
  if (n.context().ideal.contains(h)) throw InvalidArgument("localizing at an element of the ideal");
  return LocalizedGamma(n, h, std::vector<Polynomial>(sequence.begin(), sequence.end()));
}

}  // namespace frobkit
