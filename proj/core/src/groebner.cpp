#include "frobkit/groebner.hpp"

#include <algorithm>
#include <set>

namespace frobkit {

namespace {

int compare_terms(const Ring& ring, const ModuleTerm& a, const ModuleTerm& b) noexcept {
  if (ring.elimination_block()) {
    const int c = ring.compare_block(a.mono, b.mono);
    if (c) return c;
  }
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return ring.compare_rest(a.mono, b.mono);
}

void canonicalize(const Ring& ring, ModuleElement& v) {
  std::sort(v.begin(), v.end(),
            [&](const ModuleTerm& x, const ModuleTerm& y) { return compare_terms(ring, x, y) > 0; });
  const Field& k = ring.field();
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    ModuleTerm t = v[i];
    std::size_t j = i + 1;
    while (j < v.size() && v[j].pos == t.pos && v[j].mono == t.mono) {
      t.coeff = k.add(t.coeff, v[j].coeff);
      ++j;
    }
    if (!k.is_zero(t.coeff)) v[out++] = t;
    i = j;
  }
  v.resize(out);
}

// h[hs..] - c * m * g[gs..]
ModuleElement sub_scaled(const Ring& ring, const ModuleElement& h, std::size_t hs, FieldElement c,
                         const Monomial& m, const ModuleElement& g, std::size_t gs) {
  const Field& k = ring.field();
  ModuleElement r;
  r.reserve(h.size() - hs + g.size() - gs);
  std::size_t i = hs, j = gs;
  const bool unit_m = m.is_one();
  while (i < h.size() && j < g.size()) {
    ModuleTerm gt = g[j];
    if (!unit_m) gt.mono = gt.mono * m;
    const int cmp = compare_terms(ring, h[i], gt);
    if (cmp > 0) {
      r.push_back(h[i++]);
    } else if (cmp < 0) {
      gt.coeff = k.neg(k.mul(c, gt.coeff));
      r.push_back(gt);
      ++j;
    } else {
      const FieldElement s = k.sub(h[i].coeff, k.mul(c, gt.coeff));
      if (!k.is_zero(s)) r.push_back({h[i].mono, h[i].pos, s});
      ++i;
      ++j;
    }
  }
  for (; i < h.size(); ++i) r.push_back(h[i]);
  for (; j < g.size(); ++j) {
    ModuleTerm gt = g[j];
    if (!unit_m) gt.mono = gt.mono * m;
    gt.coeff = k.neg(k.mul(c, gt.coeff));
    r.push_back(gt);
  }
  return r;
}

void make_monic(const Ring& ring, ModuleElement& v) {
  if (v.empty()) return;
  const Field& k = ring.field();
  if (k.is_one(v[0].coeff)) return;
  const FieldElement inv = k.inv(v[0].coeff);
  for (auto& t : v) t.coeff = k.mul(t.coeff, inv);
}

// Full reduction of h against monic basis elements (optionally skipping one).
ModuleElement reduce_full(const Ring& ring, ModuleElement h, const std::vector<ModuleElement>& basis,
                          std::size_t skip = static_cast<std::size_t>(-1)) {
  ModuleElement rem;
  std::size_t start = 0;
  while (start < h.size()) {
    const ModuleTerm& lt = h[start];
    std::size_t found = basis.size();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (b == skip) continue;
      const ModuleTerm& bl = basis[b][0];
      if (bl.pos == lt.pos && bl.mono.divides(lt.mono)) {
        found = b;
        break;
      }
    }
    if (found == basis.size()) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const ModuleElement& g = basis[found];
    const Monomial m = lt.mono / g[0].mono;
    h = sub_scaled(ring, h, start + 1, lt.coeff, m, g, 1);
    start = 0;
  }
  return rem;
}

ModuleElement spoly(const Ring& ring, const ModuleElement& a, const ModuleElement& b) {
  const Monomial l = Monomial::lcm(a[0].mono, b[0].mono);
  ModuleElement left = a;
  const Monomial ma = l / a[0].mono;
  for (auto& t : left) t.mono = t.mono * ma;
  return sub_scaled(ring, left, 1, ring.field().one(), l / b[0].mono, b, 1);
}

struct PairKey {
  std::uint64_t degree;
  std::uint32_t i;
  std::uint32_t j;
  friend bool operator<(const PairKey& x, const PairKey& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
  }
};

GroebnerBasis run_buchberger(const RingPtr& ring_ptr, std::size_t rank, std::vector<ModuleElement> input,
                             const Budget& budget) {
  const Ring& ring = *ring_ptr;
  std::vector<ModuleElement> G;
  for (auto& f : input) {
    canonicalize(ring, f);
    if (f.empty()) continue;
    for (const auto& t : f) {
      if (t.pos >= rank) throw RankMismatch("generator has a component beyond the module rank");
    }
    make_monic(ring, f);
    G.push_back(std::move(f));
  }

  std::set<PairKey> queue;
  std::vector<std::vector<char>> pending;  // pending[j][i] for i < j
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    return pending[a][b] != 0;
  };
  auto add_pairs = [&](std::size_t j) {
    pending.emplace_back(j, 0);
    for (std::size_t i = 0; i < j; ++i) {
      if (G[i][0].pos != G[j][0].pos) continue;
      const Monomial l = Monomial::lcm(G[i][0].mono, G[j][0].mono);
      queue.insert({l.degree(), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      pending[j][i] = 1;
    }
  };
  for (std::size_t j = 0; j < G.size(); ++j) add_pairs(j);

  std::size_t processed = 0;
  while (!queue.empty()) {
    const PairKey pr = *queue.begin();
    queue.erase(queue.begin());
    pending[pr.j][pr.i] = 0;
    const ModuleTerm& li = G[pr.i][0];
    const ModuleTerm& lj = G[pr.j][0];
    if (rank == 1 && li.mono.coprime(lj.mono)) continue;
    const Monomial l = Monomial::lcm(li.mono, lj.mono);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k][0].pos != li.pos || !G[k][0].mono.divides(l)) continue;
      if (is_pending(pr.i, k) || is_pending(pr.j, k)) continue;
      chain = true;
    }
    if (chain) continue;
    if (++processed > budget.spair_limit) {
      throw BudgetExceeded("Buchberger S-pair budget of " + std::to_string(budget.spair_limit) + " exceeded");
    }
    ModuleElement r = reduce_full(ring, spoly(ring, G[pr.i], G[pr.j]), G);
    if (r.empty()) continue;
    make_monic(ring, r);
    G.push_back(std::move(r));
    add_pairs(G.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<char> keep(G.size(), 1);
  for (std::size_t a = 0; a < G.size(); ++a) {
    for (std::size_t b = 0; b < G.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      const ModuleTerm& la = G[a][0];
      const ModuleTerm& lb = G[b][0];
      if (la.pos != lb.pos || !lb.mono.divides(la.mono)) continue;
      if (lb.mono != la.mono || b < a) keep[a] = 0;
    }
  }
  std::vector<ModuleElement> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    if (keep[a]) minimal.push_back(std::move(G[a]));
  }
  std::vector<ModuleElement> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    ModuleElement head{minimal[a][0]};
    ModuleElement tail(minimal[a].begin() + 1, minimal[a].end());
    ModuleElement rest = reduce_full(ring, std::move(tail), minimal, a);
    head.insert(head.end(), rest.begin(), rest.end());
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModuleElement& x, const ModuleElement& y) {
    return compare_terms(ring, x[0], y[0]) > 0;
  });
  return GroebnerBasis(ring_ptr, rank, std::move(reduced));
}

// Embeds into the ring with one extra elimination variable in front.
ModuleElement shift_up(const ModuleElement& v) {
  ModuleElement r = v;
  for (auto& t : r) {
    for (std::size_t i = kMaxVars - 1; i > 0; --i) t.mono[i] = t.mono[i - 1];
    t.mono[0] = 0;
  }
  return r;
}

ModuleElement shift_down(const ModuleElement& v) {
  ModuleElement r = v;
  for (auto& t : r) {
    for (std::size_t i = 0; i + 1 < kMaxVars; ++i) t.mono[i] = t.mono[i + 1];
    t.mono[kMaxVars - 1] = 0;
  }
  return r;
}

// (poly given by terms) * v
ModuleElement multiply(const Ring& ring, const std::vector<Term>& f, const ModuleElement& v) {
  const Field& k = ring.field();
  ModuleElement r;
  r.reserve(f.size() * v.size());
  for (const auto& a : f) {
    for (const auto& b : v) r.push_back({a.mono * b.mono, b.pos, k.mul(a.coeff, b.coeff)});
  }
  canonicalize(ring, r);
  return r;
}

// Generators of A intersect h*P^s, computed in the ring with an extra
// elimination variable t from t*A + (1 - t)*h*P^s.
std::vector<ModuleElement> intersect_with_multiples(const GroebnerBasis& a, const Polynomial& h,
                                                    const Budget& budget) {
  const RingPtr& ring = a.ring();
  if (ring->elimination_block()) throw InvalidArgument("nested elimination is not supported");
  const RingPtr big = ring->with_elimination_variable();
  const Field& k = ring->field();
  Monomial t;
  t[0] = 1;
  const std::vector<Term> t_poly{{t, k.one()}};
  std::vector<Term> one_minus_t_h;
  for (const auto& term : to_module_element(h)) {
    Monomial up = shift_up({term})[0].mono;
    one_minus_t_h.push_back({up, term.coeff});
    one_minus_t_h.push_back({up * t, k.neg(term.coeff)});
  }
  std::vector<ModuleElement> gens;
  for (const auto& g : a.elements()) gens.push_back(multiply(*big, t_poly, shift_up(g)));
  for (std::uint32_t j = 0; j < a.rank(); ++j) {
    gens.push_back(multiply(*big, one_minus_t_h, ModuleElement{{Monomial{}, j, k.one()}}));
  }
  const GroebnerBasis gb = run_buchberger(big, a.rank(), std::move(gens), budget);
  std::vector<ModuleElement> out;
  for (const auto& g : gb.elements()) {
    // The block dominates, so a t-free leading term means a t-free element.
    if (g[0].mono[0] == 0) out.push_back(shift_down(g));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

GroebnerBasis::GroebnerBasis(RingPtr ring, std::size_t rank, std::vector<ModuleElement> reduced)
    : ring_(std::move(ring)), rank_(rank), elems_(std::move(reduced)) {}

bool GroebnerBasis::is_full() const noexcept {
  for (std::uint32_t j = 0; j < rank_; ++j) {
    bool found = false;
    for (const auto& g : elems_) {
      if (g[0].pos == j && g[0].mono.is_one()) found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<FreeVector> GroebnerBasis::vectors() const {
  std::vector<FreeVector> out;
  out.reserve(elems_.size());
  for (const auto& g : elems_) out.push_back(to_free_vector(ring_, rank_, g));
  return out;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (rank_ != 1) throw RankMismatch("polynomials() requires a rank-1 basis");
  std::vector<Polynomial> out;
  for (const auto& g : elems_) out.push_back(to_free_vector(ring_, 1, g)[0]);
  return out;
}

ModuleElement GroebnerBasis::normal_form(const ModuleElement& v) const {
  return reduce_full(*ring_, v, elems_);
}

FreeVector GroebnerBasis::normal_form(const FreeVector& v) const {
  if (v.rank() != rank_) {
    throw RankMismatch("vector of rank " + std::to_string(v.rank()) + " against basis of rank " +
                       std::to_string(rank_));
  }
  return to_free_vector(ring_, rank_, normal_form(to_module_element(v)));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (rank_ != 1) throw RankMismatch("polynomial normal form against a basis of rank " + std::to_string(rank_));
  return to_free_vector(ring_, 1, normal_form(to_module_element(f)))[0];
}

std::optional<std::vector<std::pair<std::uint32_t, Monomial>>> GroebnerBasis::staircase() const {
  const std::size_t n = ring_->nvars();
  std::vector<std::pair<std::uint32_t, Monomial>> out;
  constexpr std::uint64_t kBoxLimit = 1u << 22;
  for (std::uint32_t j = 0; j < rank_; ++j) {
    std::vector<Monomial> leads;
    for (const auto& g : elems_) {
      if (g[0].pos == j) leads.push_back(g[0].mono);
    }
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& m : leads) {
        bool pure = true;
        for (std::size_t l = 0; l < n; ++l) {
          if (l != i && m[l]) pure = false;
        }
        if (pure && (bound[i] == 0 || m[i] < bound[i])) bound[i] = m[i];
      }
      if (bound[i] == 0) {
        // Either no pure power (infinite) or the element 1 (empty staircase).
        const bool unit = std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); });
        if (!unit) return std::nullopt;
      }
    }
    if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    std::uint64_t box = 1;
    for (auto b : bound) {
      box *= b;
      if (box > kBoxLimit) throw BudgetExceeded("staircase enumeration too large");
    }
    std::vector<Monomial> found;
    Monomial m;
    for (std::uint64_t c = 0; c < box; ++c) {
      std::uint64_t x = c;
      for (std::size_t i = 0; i < n; ++i) {
        m[i] = static_cast<std::uint32_t>(x % bound[i]);
        x /= bound[i];
      }
      const bool standard =
          std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
      if (standard) found.push_back(m);
    }
    std::sort(found.begin(), found.end(),
              [&](const Monomial& a, const Monomial& b) { return ring_->compare(a, b) > 0; });
    for (const auto& f : found) out.emplace_back(j, f);
  }
  return out;
}

// ---------------------------------------------------------------------------

ModuleElement to_module_element(const FreeVector& v) {
  ModuleElement r;
  const Ring* ring = nullptr;
  for (std::uint32_t j = 0; j < v.rank(); ++j) {
    if (v[j].ring()) ring = v[j].ring().get();
    for (const auto& t : v[j].terms()) r.push_back({t.mono, j, t.coeff});
  }
  if (ring) canonicalize(*ring, r);
  return r;
}

ModuleElement to_module_element(const Polynomial& f, std::uint32_t pos) {
  ModuleElement r;
  r.reserve(f.size());
  for (const auto& t : f.terms()) r.push_back({t.mono, pos, t.coeff});
  return r;
}

FreeVector to_free_vector(const RingPtr& ring, std::size_t rank, const ModuleElement& v) {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : v) comps.at(t.pos).push_back({t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& c : comps) out.push_back(Polynomial::from_terms(ring, std::move(c)));
  return FreeVector(std::move(out));
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens, const Budget& budget) {
  std::vector<ModuleElement> input;
  for (const auto& g : gens) input.push_back(to_module_element(g));
  return run_buchberger(ring, 1, std::move(input), budget);
}

GroebnerBasis module_buchberger(const RingPtr& ring, std::span<const FreeVector> gens, std::size_t rank,
                                const Budget& budget) {
  if (rank == 0) throw RankMismatch("module rank must be positive");
  std::vector<ModuleElement> input;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw RankMismatch("generator rank differs from module rank");
    input.push_back(to_module_element(g));
  }
  return run_buchberger(ring, rank, std::move(input), budget);
}

bool submodule_contains(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.rank() != b.rank()) throw RankMismatch("submodules of different ranks");
  for (const auto& g : b.elements()) {
    if (!a.normal_form(g).empty()) return false;
  }
  return true;
}

bool submodule_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  return submodule_contains(a, b) && submodule_contains(b, a);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
  const RingPtr ring = f.ring() ? f.ring() : g.ring();
  const Field& k = ring->field();
  const Term& lg = g.leading_term();
  const FieldElement inv = k.inv(lg.coeff);
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!lg.mono.divides(lt.mono)) throw InvalidArgument("polynomial is not divisible");
    const Term q{lt.mono / lg.mono, k.mul(lt.coeff, inv)};
    quotient.push_back(q);
    rest = rest - g.times_term(q.mono, q.coeff);
  }
  return Polynomial::from_terms(ring, std::move(quotient));
}

GroebnerBasis ideal_quotient(const GroebnerBasis& ideal, const Polynomial& g, const Budget& budget) {
  if (ideal.rank() != 1) throw RankMismatch("ideal_quotient expects an ideal");
  return module_quotient(ideal, g, budget);
}

GroebnerBasis module_quotient(const GroebnerBasis& module, const Polynomial& h, const Budget& budget) {
  if (h.is_zero()) throw InvalidArgument("quotient by the zero polynomial");
  const RingPtr& ring = module.ring();
  // P^s is torsion free.
  if (module.is_zero()) return module;
  const auto inter = intersect_with_multiples(module, h, budget);
  std::vector<FreeVector> quotients;
  for (const auto& v : inter) {
    FreeVector fv = to_free_vector(ring, module.rank(), v);
    for (std::size_t j = 0; j < fv.rank(); ++j) fv[j] = divide_exact(fv[j], h);
    quotients.push_back(std::move(fv));
  }
  return module_buchberger(ring, quotients, module.rank(), budget);
}

GroebnerBasis saturate(const GroebnerBasis& module, const Polynomial& h, const Budget& budget) {
  GroebnerBasis current = module;
  for (std::size_t round = 0; round < budget.saturation_limit; ++round) {
    GroebnerBasis next = module_quotient(current, h, budget);
    if (submodule_equal(current, next)) return current;
    current = std::move(next);
  }
  throw BudgetExceeded("saturation did not stabilize within " + std::to_string(budget.saturation_limit) +
                       " rounds");
}

std::optional<std::vector<Polynomial>> lift(const RingPtr& ring, std::span<const Polynomial> gens,
                                            const Polynomial& g, const Budget& budget) {
  const std::size_t c = gens.size();
  std::vector<FreeVector> tagged;
  for (std::size_t k = 0; k < c; ++k) {
    FreeVector v(ring, c + 1);
    v[0] = gens[k];
    v[k + 1] = Polynomial::constant(ring, ring->field().one());
    tagged.push_back(std::move(v));
  }
  const GroebnerBasis gb = module_buchberger(ring, tagged, c + 1, budget);
  FreeVector target(ring, c + 1);
  target[0] = g;
  const FreeVector r = gb.normal_form(target);
  if (!r[0].is_zero()) return std::nullopt;
  std::vector<Polynomial> coeffs;
  for (std::size_t k = 0; k < c; ++k) coeffs.push_back(-r[k + 1]);
  return coeffs;
}

bool verify_groebner(const GroebnerBasis& gb) {
  const auto& G = gb.elements();
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (G[i][0].pos != G[j][0].pos) continue;
      if (!reduce_full(*gb.ring(), spoly(*gb.ring(), G[i], G[j]), G).empty()) return false;
    }
  }
  return true;
}

QuotientContext QuotientContext::ambient(const RingPtr& ring) {
  return QuotientContext{ring, GroebnerBasis(ring, 1, {}), {}};
}

QuotientContext QuotientContext::create(const RingPtr& ring, std::vector<Polynomial> generators,
                                        const Budget& budget) {
  GroebnerBasis gb = buchberger(ring, generators, budget);
  return QuotientContext{ring, std::move(gb), std::move(generators)};
}

bool is_regular_sequence(std::span<const Polynomial> seq, const QuotientContext& base, const Budget& budget) {
  const RingPtr& ring = base.ring;
  std::vector<Polynomial> current = base.ideal.polynomials();
  GroebnerBasis j_gb = base.ideal;
  for (const auto& f : seq) {
    if (j_gb.contains(f)) return false;
    if (!j_gb.is_zero()) {
      if (!submodule_equal(ideal_quotient(j_gb, f, budget), j_gb)) return false;
    }
    current.push_back(f);
    j_gb = buchberger(ring, current, budget);
  }
  return !j_gb.is_full();
}

bool is_regular_sequence(std::span<const Polynomial> seq, const RingPtr& ring, const Budget& budget) {
  return is_regular_sequence(seq, QuotientContext::ambient(ring), budget);
}

}  // namespace frobkit
