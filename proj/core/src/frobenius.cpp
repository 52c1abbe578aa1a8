#include "frobkit/frobenius.hpp"

#include <map>

#include "frobkit/error.hpp"

namespace frobkit {

std::uint64_t basis_size(std::uint32_t p, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    r *= p;
    if (r > (std::uint64_t{1} << 40)) throw BudgetExceeded("F_* basis too large");
  }
  return r;
}

std::uint64_t exponent_index(const Monomial& a, std::uint32_t p, std::size_t n) {
  std::uint64_t idx = 0;
  for (std::size_t i = n; i-- > 0;) idx = idx * p + a[i];
  return idx;
}

Monomial exponent_from_index(std::uint64_t index, std::uint32_t p, std::size_t n) {
  Monomial a;
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return a;
}

Monomial top_exponent(std::uint32_t p, std::size_t n) {
  Monomial a;
  for (std::size_t i = 0; i < n; ++i) a[i] = p - 1;
  return a;
}

Polynomial FrobeniusDecomposition::part(const Monomial& a) const {
  for (const auto& [exp, g] : parts) {
    if (exp == a) return g;
  }
  return Polynomial(ring);
}

Polynomial FrobeniusDecomposition::recompose() const {
  Polynomial total(ring);
  const Field& k = ring->field();
  for (const auto& [a, g] : parts) total += g.frobenius_twist().times_term(a, k.one());
  return total;
}

FrobeniusDecomposition pth_root_decompose(const Polynomial& f) {
  FrobeniusDecomposition out{f.ring(), {}};
  if (f.is_zero()) return out;
  const Ring& ring = *f.ring();
  const Field& k = ring.field();
  const std::uint32_t p = k.characteristic();
  const std::size_t n = ring.nvars();
  std::map<std::uint64_t, std::vector<Term>> groups;
  for (const auto& t : f.terms()) {
    Monomial a, q;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = t.mono[i] % p;
      q[i] = t.mono[i] / p;
    }
    groups[exponent_index(a, p, n)].push_back({q, k.frobenius_root(t.coeff)});
  }
  for (auto& [idx, terms] : groups) {
    out.parts.emplace_back(exponent_from_index(idx, p, n), Polynomial::from_terms(f.ring(), std::move(terms)));
  }
  return out;
}

Polynomial dual_basis_eval(const Monomial& a, const Polynomial& f) {
  if (!f.ring()) return f;
  const std::uint32_t p = f.ring()->field().characteristic();
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
    if (a[i] >= p) throw InvalidArgument("dual basis index outside [0,p)^n");
  }
  return pth_root_decompose(f).part(a);
}

Polynomial cartier_volume(const Polynomial& f) {
  if (!f.ring()) return f;
  return dual_basis_eval(top_exponent(f.ring()->field().characteristic(), f.ring()->nvars()), f);
}

Polynomial cartier_volume_formula(const Polynomial& f) {
  if (!f.ring()) return f;
  const Field& k = f.ring()->field();
  const std::uint32_t p = k.characteristic();
  const std::size_t n = f.ring()->nvars();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Monomial m;
    bool integral = true;
    for (std::size_t i = 0; i < n && integral; ++i) {
      if ((t.mono[i] + 1) % p != 0) integral = false;
      else m[i] = (t.mono[i] + 1) / p - 1;
    }
    if (integral) out.push_back({m, k.frobenius_root(t.coeff)});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

VolumeForm kappa_x(const VolumeForm& w) { return {cartier_volume(w.coefficient)}; }

TensorForm can_inverse_table(std::size_t rank, const std::vector<std::pair<Monomial, FreeVector>>& phi_values) {
  TensorForm out{rank, {}};
  std::map<Monomial, FreeVector> acc;
  for (const auto& [a, v] : phi_values) {
    if (v.rank() != rank) throw RankMismatch("tensor value of the wrong rank");
    auto it = acc.find(a);
    if (it == acc.end()) acc.emplace(a, v);
    else it->second += v;
  }
  for (auto& [a, v] : acc) {
    if (!v.is_zero()) out.terms.emplace_back(a, std::move(v));
  }
  return out;
}

FreeVector can_apply(const TensorForm& form, const RingPtr& ring, const Polynomial& s) {
  FreeVector total(ring, form.rank);
  const auto dec = pth_root_decompose(s);
  for (const auto& [a, v] : form.terms) {
    const Polynomial g = dec.part(a);
    if (!g.is_zero()) total += g * v;
  }
  return total;
}

std::vector<std::pair<Monomial, FreeVector>> can_table(const TensorForm& form, const RingPtr& ring) {
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t n = ring->nvars();
  std::vector<std::pair<Monomial, FreeVector>> out;
  for (std::uint64_t i = 0; i < basis_size(p, n); ++i) {
    const Monomial a = exponent_from_index(i, p, n);
    FreeVector v = can_apply(form, ring, Polynomial::monomial(ring, a, ring->field().one()));
    if (!v.is_zero()) out.emplace_back(a, std::move(v));
  }
  return out;
}

}  // namespace frobkit
