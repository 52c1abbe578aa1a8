#include "frobkit/cartier.hpp"

#include <map>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

FreeVector monomial_times(const RingPtr& ring, const Monomial& a, const FreeVector& v) {
  return Polynomial::monomial(ring, a, ring->field().one()) * v;
}

FreeVector constant_vector(const RingPtr& ring, const Vec& column) {
  FreeVector v(ring, column.size());
  for (std::size_t i = 0; i < column.size(); ++i) v[i] = Polynomial::constant(ring, column[i]);
  return v;
}

bool same_field(const Field& a, const Field& b) { return &a == &b || a.spec() == b.spec(); }

}  // namespace

// ---------------------------------------------------------------------------
// CartierModule

CartierModule CartierModule::create(QuotientContext ctx, std::size_t rank, std::vector<FreeVector> relations,
                                    const std::vector<KappaEntry>& entries, const Budget& budget) {
  if (rank == 0) throw InvalidArgument("Cartier module rank must be positive");
  const RingPtr ring = ctx.ring;
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t n = ring->nvars();
  CartierModule m;
  m.rank_ = rank;
  m.basis_size_ = frobkit::basis_size(p, n);
  if (m.basis_size_ * rank > kTableLimit) throw BudgetExceeded("kappa table too large");
  for (const auto& r : relations) {
    if (r.rank() != rank) throw RankMismatch("relation of rank " + std::to_string(r.rank()) + " in a rank " +
                                             std::to_string(rank) + " module");
  }
  m.rel_gens_ = std::move(relations);
  std::vector<FreeVector> all = m.rel_gens_;
  for (const auto& g : ctx.ideal.polynomials()) {
    for (std::size_t j = 0; j < rank; ++j) all.push_back(g * FreeVector::unit(ring, rank, j));
  }
  m.rel_ = module_buchberger(ring, all, rank, budget);
  m.ctx_ = std::move(ctx);
  m.table_.assign(rank * m.basis_size_, FreeVector(ring, rank));
  std::vector<char> seen(m.table_.size(), 0);
  for (const auto& e : entries) {
    if (e.j >= rank) throw InvalidArgument("kappa entry for generator " + std::to_string(e.j) + " out of range");
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if ((i < n && e.a[i] >= p) || (i >= n && e.a[i] != 0)) {
        throw InvalidArgument("kappa entry exponent outside [0,p)^n");
      }
    }
    if (e.value.rank() != rank) throw RankMismatch("kappa value of the wrong rank");
    const std::uint64_t slot = e.j * m.basis_size_ + exponent_index(e.a, p, n);
    if (seen[slot]) throw InvalidArgument("duplicate kappa entry");
    seen[slot] = 1;
    m.table_[slot] = m.rel_.normal_form(e.value);
  }
  return m;
}

CartierModule CartierModule::omega(const RingPtr& ring) {
  const Monomial top = top_exponent(ring->field().characteristic(), ring->nvars());
  return create(QuotientContext::ambient(ring), 1, {}, {{0, top, FreeVector::unit(ring, 1, 0)}});
}

CartierModule CartierModule::zero(QuotientContext ctx, std::size_t rank, std::vector<FreeVector> relations,
                                  const Budget& budget) {
  return create(std::move(ctx), rank, std::move(relations), {}, budget);
}

CartierModule CartierModule::from_matrix(const RingPtr& ring, const Matrix& u) {
  if (u.rows() != u.cols()) throw InvalidArgument("operator matrix must be square");
  const std::size_t d = u.rows();
  std::vector<FreeVector> rel;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    for (std::size_t j = 0; j < d; ++j) rel.push_back(Polynomial::variable(ring, i) * FreeVector::unit(ring, d, j));
  }
  std::vector<KappaEntry> entries;
  for (std::size_t j = 0; j < d; ++j) {
    entries.push_back({static_cast<std::uint32_t>(j), Monomial{}, constant_vector(ring, u.column(j))});
  }
  return create(QuotientContext::ambient(ring), d, std::move(rel), entries);
}

const FreeVector& CartierModule::entry(std::uint32_t j, const Monomial& a) const {
  if (j >= rank_) throw InvalidArgument("generator index out of range");
  return entry(j, exponent_index(a, ring()->field().characteristic(), ring()->nvars()));
}

std::vector<KappaEntry> CartierModule::entries() const {
  std::vector<KappaEntry> out;
  const std::uint32_t p = ring()->field().characteristic();
  for (std::uint32_t j = 0; j < rank_; ++j) {
    for (std::uint64_t i = 0; i < basis_size_; ++i) {
      const FreeVector& v = entry(j, i);
      if (!v.is_zero()) out.push_back({j, exponent_from_index(i, p, ring()->nvars()), v});
    }
  }
  return out;
}

FreeVector CartierModule::apply_raw(const FreeVector& v) const {
  if (v.rank() != rank_) throw RankMismatch("vector rank differs from module rank");
  const std::uint32_t p = ring()->field().characteristic();
  const std::size_t n = ring()->nvars();
  FreeVector total(ring(), rank_);
  for (std::uint32_t j = 0; j < rank_; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [a, g] : pth_root_decompose(v[j]).parts) {
      const FreeVector& value = entry(j, exponent_index(a, p, n));
      if (!value.is_zero()) total += g * value;
    }
  }
  return reduce(total);
}

bool operator==(const CartierModule& a, const CartierModule& b) {
  if (a.rank_ != b.rank_ || !a.ring()->compatible(*b.ring())) return false;
  if (!submodule_equal(a.rel_, b.rel_)) return false;
  return a.table_ == b.table_;
}

// ---------------------------------------------------------------------------

ValidationReport validate_cartier_structure(const CartierModule& m) {
  ValidationReport report;
  const RingPtr& ring = m.ring();
  const std::uint32_t p = ring->field().characteristic();
  const auto rels = m.relations().vectors();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (std::uint64_t i = 0; i < m.basis_size(); ++i) {
      const Monomial a = exponent_from_index(i, p, ring->nvars());
      FreeVector residue = m.apply_raw(monomial_times(ring, a, rels[r]));
      if (!residue.is_zero()) {
        report.ok = false;
        report.violations.push_back({r, a, std::move(residue)});
      }
    }
  }
  return report;
}

FreeVector kappa_apply(const CartierModule& m, const FreeVector& v) {
  if (v.rank() != m.rank()) throw RankMismatch("vector rank differs from module rank");
  return m.apply_raw(m.reduce(v));
}

FreeVector kappa_power(const CartierModule& m, std::size_t e, const FreeVector& v) {
  FreeVector r = e == 0 ? m.reduce(v) : v;
  for (std::size_t i = 0; i < e; ++i) r = kappa_apply(m, r);
  return r;
}

StableImageResult stable_image(const CartierModule& m, const Budget& budget) {
  const RingPtr& ring = m.ring();
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t n = ring->nvars();
  StableImageResult out;
  std::vector<FreeVector> units;
  for (std::size_t j = 0; j < m.rank(); ++j) units.push_back(FreeVector::unit(ring, m.rank(), j));
  out.chain.push_back(module_buchberger(ring, units, m.rank(), budget));
  const auto relation_vectors = m.relations().vectors();
  for (std::size_t level = 0; level < budget.chain_limit; ++level) {
    std::vector<FreeVector> gens = relation_vectors;
    for (const auto& u : out.chain.back().vectors()) {
      const FreeVector base = m.reduce(u);
      if (base.is_zero()) continue;
      for (std::uint64_t i = 0; i < m.basis_size(); ++i) {
        FreeVector img = m.apply_raw(monomial_times(ring, exponent_from_index(i, p, n), base));
        if (!img.is_zero()) gens.push_back(std::move(img));
      }
    }
    GroebnerBasis next = module_buchberger(ring, gens, m.rank(), budget);
    const bool stable = submodule_equal(out.chain.back(), next);
    out.chain.push_back(std::move(next));
    if (stable) {
      out.index = level;
      out.stable = out.chain[level];
      return out;
    }
  }
  throw BudgetExceeded("stable-image chain did not stabilize within " + std::to_string(budget.chain_limit) +
                       " levels");
}

const char* to_string(NilVerdict v) noexcept {
  switch (v) {
    case NilVerdict::Nilpotent: return "Nilpotent";
    case NilVerdict::NotNilpotent: return "NotNilpotent";
    case NilVerdict::NotNilpotentUpTo: return "NotNilpotentUpTo";
  }
  return "?";
}

NilpotenceResult is_nilpotent(const CartierModule& m, const Budget& budget) {
  const StableImageResult s = stable_image(m, budget);
  if (submodule_equal(s.stable, m.relations())) return {NilVerdict::Nilpotent, s.index};
  return {NilVerdict::NotNilpotent, s.index};
}

NilpotenceResult crystal_is_zero(const CartierModule& m, const Budget& budget) { return is_nilpotent(m, budget); }

bool is_crystal_supported_on(const CartierModule& m, std::span<const Polynomial> j, const Budget& budget) {
  const StableImageResult s = stable_image(m, budget);
  for (const auto& h : j) {
    if (h.is_zero()) continue;
    const GroebnerBasis sat = saturate(m.relations(), h, budget);
    if (!submodule_contains(sat, s.stable)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Localization

LocalizedCartier::LocalizedCartier(CartierModule m, Polynomial h, Budget budget)
    : m_(std::move(m)), h_(std::move(h)), budget_(budget) {}

Fraction LocalizedCartier::kappa(const Fraction& f) const {
  const std::uint32_t p = m_.ring()->field().characteristic();
  const std::uint32_t t = (f.exponent + p - 1) / p;
  const Polynomial lift = h_.pow(static_cast<std::uint64_t>(p) * t - f.exponent);
  return {kappa_apply(m_, lift * f.numerator), t};
}

bool LocalizedCartier::equal(const Fraction& a, const Fraction& b) const {
  if (!saturated_) saturated_ = saturate(m_.relations(), h_, budget_);
  const FreeVector diff = h_.pow(b.exponent) * a.numerator - h_.pow(a.exponent) * b.numerator;
  return saturated_->contains(diff);
}

LocalizedCartier restrict_to_principal_open(const CartierModule& m, const Polynomial& h, const Budget& budget) {
  if (m.context().ideal.contains(h)) throw InvalidArgument("localizing at an element of the ideal");
  return LocalizedCartier(m, h, budget);
}

// ---------------------------------------------------------------------------
// Finite-dimensional tier

StaircaseBasis::StaircaseBasis(const GroebnerBasis& relations) : rel_(relations) {
  auto st = relations.staircase();
  if (!st) throw InfiniteDimensional("quotient module is not finite dimensional over k");
  basis_ = std::move(*st);
}

FreeVector StaircaseBasis::element(std::size_t l) const {
  FreeVector v(rel_.ring(), rel_.rank());
  v[basis_[l].first] = Polynomial::monomial(rel_.ring(), basis_[l].second, rel_.ring()->field().one());
  return v;
}

Vec StaircaseBasis::coordinates(const FreeVector& v) const {
  const FreeVector nf = rel_.normal_form(v);
  Vec c(basis_.size());
  for (std::uint32_t j = 0; j < nf.rank(); ++j) {
    for (const auto& t : nf[j].terms()) {
      const std::pair<std::uint32_t, Monomial> key{j, t.mono};
      // basis_ is sorted by position, then decreasing monomial.
      const auto it = std::lower_bound(basis_.begin(), basis_.end(), key, [&](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return rel_.ring()->compare(x.second, y.second) > 0;
      });
      if (it == basis_.end() || *it != key) throw InvalidArgument("normal form outside the staircase");
      c[static_cast<std::size_t>(it - basis_.begin())] = t.coeff;
    }
  }
  return c;
}

FreeVector StaircaseBasis::vector(const Vec& coords) const {
  const RingPtr& ring = rel_.ring();
  FreeVector v(ring, rel_.rank());
  for (std::size_t l = 0; l < coords.size(); ++l) {
    if (coords[l].code == 0) continue;
    v[basis_[l].first] += Polynomial::monomial(ring, basis_[l].second, coords[l]);
  }
  return v;
}

Vec SemilinearEndo::apply(const Vec& v) const {
  return multiply(*field, u, frobenius_entries(*field, v, direction == Direction::Inverse ? -1 : 1));
}

Subspace SemilinearEndo::image(const Subspace& w) const {
  Subspace out(*field, dim());
  for (const auto& b : w.basis()) out.insert(apply(b));
  return out;
}

namespace {
Subspace full_space(const Field& k, std::size_t d) {
  Subspace s(k, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d);
    e[i] = k.one();
    s.insert(e);
  }
  return s;
}
}  // namespace

SemilinearEndo to_semilinear(const CartierModule& m) {
  const StaircaseBasis basis(m.relations());
  const std::size_t d = basis.dim();
  Matrix u(d, d);
  for (std::size_t l = 0; l < d; ++l) u.set_column(l, basis.coordinates(kappa_apply(m, basis.element(l))));
  return {m.ring()->field_ptr(), std::move(u), Direction::Inverse};
}

NilpotenceResult semilinear_nilpotent(const SemilinearEndo& t) {
  Subspace w = full_space(*t.field, t.dim());
  if (w.dim() == 0) return {NilVerdict::Nilpotent, 0};
  for (std::size_t i = 1;; ++i) {
    Subspace next = t.image(w);
    if (next.dim() == 0) return {NilVerdict::Nilpotent, i};
    if (next.dim() == w.dim()) return {NilVerdict::NotNilpotent, i - 1};
    w = std::move(next);
  }
}

namespace {

int twist_of(Direction d) { return d == Direction::Inverse ? -1 : 1; }

Matrix commutator(const Field& k, const Matrix& phi, const SemilinearEndo& m, const SemilinearEndo& n) {
  Matrix lhs = multiply(k, phi, m.u);
  const Matrix rhs = multiply(k, n.u, frobenius_entries(k, phi, twist_of(n.direction)));
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) lhs.at(i, j) = k.sub(lhs.at(i, j), rhs.at(i, j));
  }
  return lhs;
}

void check_compatible(const SemilinearEndo& m, const SemilinearEndo& n) {
  if (m.direction != n.direction) throw InvalidArgument("semilinear operators of different directions");
  if (!same_field(*m.field, *n.field)) throw InvalidArgument("semilinear operators over different fields");
}

}  // namespace

std::vector<Matrix> hom_commuting(const SemilinearEndo& m, const SemilinearEndo& n) {
  check_compatible(m, n);
  const Field& k = *m.field;
  const FieldPtr fp = Field::prime(k.characteristic());
  const std::size_t e = k.degree();
  const std::size_t rows = n.dim(), cols = m.dim();
  const std::size_t unknowns = rows * cols * e;
  Matrix system(rows * cols * e, unknowns);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t i = 0; i < e; ++i) {
        std::vector<std::uint32_t> digit(e, 0);
        digit[i] = 1;
        Matrix phi(rows, cols);
        phi.at(r, c) = k.from_coeffs(digit);
        const Matrix img = commutator(k, phi, m, n);
        const std::size_t col = (r * cols + c) * e + i;
        for (std::size_t a = 0; a < rows; ++a) {
          for (std::size_t b = 0; b < cols; ++b) {
            const auto coords = k.coeffs(img.at(a, b));
            for (std::size_t l = 0; l < e; ++l) system.at((a * cols + b) * e + l, col) = fp->element(coords[l]);
          }
        }
      }
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel(*fp, system)) {
    Matrix phi(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::vector<std::uint32_t> digits(e);
        for (std::size_t i = 0; i < e; ++i) digits[i] = static_cast<std::uint32_t>(v[(r * cols + c) * e + i].code);
        phi.at(r, c) = k.from_coeffs(digits);
      }
    }
    out.push_back(std::move(phi));
  }
  return out;
}

bool nil_isomorphism_test(const Matrix& phi, const SemilinearEndo& m, const SemilinearEndo& n) {
  check_compatible(m, n);
  const Field& k = *m.field;
  if (phi.rows() != n.dim() || phi.cols() != m.dim()) throw RankMismatch("map has the wrong shape");
  if (!commutator(k, phi, m, n).is_zero()) throw InvalidArgument("map does not commute with the operators");

  Subspace ker(k, m.dim());
  for (const auto& v : kernel(k, phi)) ker.insert(v);
  while (ker.dim() > 0) {
    Subspace next = m.image(ker);
    if (next.dim() == ker.dim()) return false;
    ker = std::move(next);
  }

  Subspace im(k, n.dim());
  for (std::size_t j = 0; j < phi.cols(); ++j) im.insert(phi.column(j));
  Subspace w = full_space(k, n.dim());
  while (w.dim() > im.dim()) {
    Subspace next = n.image(w);
    for (const auto& b : im.basis()) next.insert(b);
    if (next.dim() == w.dim()) return false;
    w = std::move(next);
  }
  return true;
}

StableSubspace stable_subspace(const SemilinearEndo& t) {
  const Field& k = *t.field;
  Subspace w = full_space(k, t.dim());
  while (true) {
    Subspace next = t.image(w);
    if (next.dim() == w.dim()) break;
    w = std::move(next);
  }
  const std::size_t r = w.dim();
  Matrix b(t.dim(), r);
  for (std::size_t l = 0; l < r; ++l) b.set_column(l, w.basis()[l]);
  Matrix us(r, r);
  for (std::size_t l = 0; l < r; ++l) {
    const auto c = solve(k, b, t.apply(w.basis()[l]));
    if (!c) throw InvalidArgument("stable subspace is not invariant");
    us.set_column(l, *c);
  }
  return {{t.field, std::move(us), t.direction}, std::move(b)};
}

}  // namespace frobkit
