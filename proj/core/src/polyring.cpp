#include "frobkit/polyring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "frobkit/error.hpp"

namespace frobkit {

// ---------------------------------------------------------------------------
// Ring

RingPtr Ring::create(FieldPtr field, std::vector<std::string> vars, MonomialOrder order) {
  if (!field) throw InvalidArgument("ring needs a field");
  if (vars.empty()) throw InvalidArgument("ring needs at least one variable");
  if (vars.size() >= kMaxVars) {
    throw InvalidArgument("at most " + std::to_string(kMaxVars - 1) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
  }
  return std::make_shared<const Ring>(std::move(field), std::move(vars), order, 0);
}

Ring::Ring(FieldPtr field, std::vector<std::string> vars, MonomialOrder order, std::size_t elim)
    : field_(std::move(field)), vars_(std::move(vars)), order_(order), elim_(elim) {}

std::optional<std::size_t> Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr Ring::with_elimination_variable() const {
  if (vars_.size() + 1 > kMaxVars) throw InvalidArgument("too many variables for elimination");
  std::vector<std::string> v;
  v.reserve(vars_.size() + 1);
  v.push_back("_t" + std::to_string(elim_));
  v.insert(v.end(), vars_.begin(), vars_.end());
  return std::make_shared<const Ring>(field_, std::move(v), order_, elim_ + 1);
}

RingPtr Ring::base_ring() const {
  std::vector<std::string> v(vars_.begin() + static_cast<std::ptrdiff_t>(elim_), vars_.end());
  return std::make_shared<const Ring>(field_, std::move(v), order_, 0);
}

int Ring::compare_block(const Monomial& a, const Monomial& b) const noexcept {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < elim_; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < elim_; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

int Ring::compare_rest(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = vars_.size();
  if (order_ == MonomialOrder::Lex) {
    for (std::size_t i = elim_; i < n; ++i) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
    }
    return 0;
  }
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = elim_; i < n; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = n; i-- > elim_;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

bool Ring::compatible(const Ring& other) const noexcept {
  return this == &other || (field_->spec() == other.field_->spec() && vars_ == other.vars_ &&
                            order_ == other.order_ && elim_ == other.elim_);
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

const RingPtr& pick_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() && b.ring() && !a.ring()->compatible(*b.ring())) {
    throw InvalidArgument("polynomials live in different rings");
  }
  return a.ring() ? a.ring() : b.ring();
}

// Sorts descending and merges duplicate monomials, dropping zeros.
void canonicalize(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return ring.compare(x.mono, y.mono) > 0; });
  const Field& k = ring.field();
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term t = terms[i];
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == t.mono) {
      t.coeff = k.add(t.coeff, terms[j].coeff);
      ++j;
    }
    if (!k.is_zero(t.coeff)) terms[out++] = t;
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  const Field& k = ring.field();
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back({b[j].mono, subtract ? k.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      const FieldElement s = subtract ? k.sub(a[i].coeff, b[j].coeff) : k.add(a[i].coeff, b[j].coeff);
      if (!k.is_zero(s)) r.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back({b[j].mono, subtract ? k.neg(b[j].coeff) : b[j].coeff});
  return r;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, FieldElement c) {
  if (c.code == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), std::vector<Term>{{Monomial{}, c}});
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  const FieldElement e = ring->field().from_int(c);
  return constant(std::move(ring), e);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw InvalidArgument("variable index out of range");
  Monomial m;
  m[index] = 1;
  return Polynomial(std::move(ring), std::vector<Term>{{m, FieldElement{1}}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, FieldElement c) {
  if (c.code == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), std::vector<Term>{{m, c}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  canonicalize(*ring, terms);
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return FieldElement{0};
}

Polynomial Polynomial::operator-() const {
  if (!ring_) return *this;
  std::vector<Term> r = terms_;
  for (auto& t : r) t.coeff = ring_->field().neg(t.coeff);
  return Polynomial(ring_, std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const RingPtr& ring = pick_ring(a, b);
  if (a.is_zero()) return Polynomial(ring, b.terms_);
  if (b.is_zero()) return Polynomial(ring, a.terms_);
  return Polynomial(ring, merge(*ring, a.terms_, b.terms_, false));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const RingPtr& ring = pick_ring(a, b);
  if (b.is_zero()) return Polynomial(ring, a.terms_);
  return Polynomial(ring, merge(*ring, a.terms_, b.terms_, true));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const RingPtr& ring = pick_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(ring);
  const Field& k = ring->field();
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coeff);
  std::vector<Term> r;
  r.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) r.push_back({x.mono * y.mono, k.mul(x.coeff, y.coeff)});
  }
  canonicalize(*ring, r);
  return Polynomial(ring, std::move(r));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  if (!ring_ || c.code == 0) return Polynomial(ring_);
  std::vector<Term> r = terms_;
  for (auto& t : r) t.coeff = ring_->field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(r));
}

Polynomial Polynomial::times_term(const Monomial& m, FieldElement c) const {
  if (!ring_ || c.code == 0) return Polynomial(ring_);
  std::vector<Term> r = terms_;
  const Field& k = ring_->field();
  // Monomial orders are multiplicative, so the order is preserved.
  for (auto& t : r) {
    t.mono = t.mono * m;
    t.coeff = k.mul(t.coeff, c);
  }
  return Polynomial(ring_, std::move(r));
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  if (!ring_) return *this;
  Polynomial r = constant(ring_, ring_->field().one());
  Polynomial base = *this;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

Polynomial Polynomial::frobenius_twist(std::uint32_t times) const {
  if (!ring_ || times == 0) return *this;
  const Field& k = ring_->field();
  std::uint64_t scale = 1;
  for (std::uint32_t i = 0; i < times; ++i) scale *= k.characteristic();
  std::vector<Term> r = terms_;
  for (auto& t : r) {
    for (auto& e : t.mono.exp) {
      const std::uint64_t v = std::uint64_t(e) * scale;
      if (v > 0xffffffffu) throw InvalidArgument("exponent overflow in Frobenius twist");
      e = static_cast<std::uint32_t>(v);
    }
    for (std::uint32_t i = 0; i < times; ++i) t.coeff = k.frobenius(t.coeff);
  }
  return Polynomial(ring_, std::move(r));
}

FieldElement Polynomial::evaluate(const Field& L, std::span<const FieldElement> point) const {
  if (!ring_) return L.zero();
  const Field& k = ring_->field();
  if (L.characteristic() != k.characteristic()) throw InvalidArgument("evaluation field has wrong characteristic");
  if (!k.is_prime_field() && !(L.spec() == k.spec())) {
    throw InvalidArgument("points over extensions of a non-prime base field are not supported");
  }
  if (point.size() != ring_->nvars()) throw InvalidArgument("point has wrong number of coordinates");
  FieldElement acc = L.zero();
  for (const auto& t : terms_) {
    FieldElement v{t.coeff.code};
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.mono[i]) v = L.mul(v, L.pow(point[i], t.mono[i]));
    }
    acc = L.add(acc, v);
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string(const std::string& gen) const {
  if (terms_.empty()) return "0";
  const Ring& ring = *ring_;
  const Field& k = ring.field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = k.is_one(t.coeff);
    if (t.mono.is_one()) {
      os << k.to_string(t.coeff, gen);
      continue;
    }
    if (!unit) os << k.to_string(t.coeff, gen) << "*";
    bool first_var = true;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring.vars()[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FreeVector

FreeVector::FreeVector(const RingPtr& ring, std::size_t rank) : comps_(rank, Polynomial(ring)) {}

FreeVector FreeVector::unit(const RingPtr& ring, std::size_t rank, std::size_t j) {
  FreeVector v(ring, rank);
  v.comps_.at(j) = Polynomial::constant(ring, ring->field().one());
  return v;
}

bool FreeVector::is_zero() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

FreeVector operator+(const FreeVector& a, const FreeVector& b) {
  if (a.rank() != b.rank()) throw RankMismatch("vector ranks differ");
  FreeVector r = a;
  for (std::size_t j = 0; j < a.rank(); ++j) r.comps_[j] += b.comps_[j];
  return r;
}

FreeVector operator-(const FreeVector& a, const FreeVector& b) {
  if (a.rank() != b.rank()) throw RankMismatch("vector ranks differ");
  FreeVector r = a;
  for (std::size_t j = 0; j < a.rank(); ++j) r.comps_[j] -= b.comps_[j];
  return r;
}

FreeVector operator*(const Polynomial& f, const FreeVector& v) {
  FreeVector r = v;
  for (auto& c : r.comps_) c = f * c;
  return r;
}

FreeVector FreeVector::frobenius_twist(std::uint32_t times) const {
  FreeVector r = *this;
  for (auto& c : r.comps_) c = c.frobenius_twist(times);
  return r;
}

bool operator==(const FreeVector& a, const FreeVector& b) { return a.comps_ == b.comps_; }

std::string FreeVector::to_string(const std::string& gen) const {
  std::string s = "[";
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    if (j) s += ", ";
    s += comps_[j].to_string(gen);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(const RingPtr& ring, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring)) {}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ring, ring->field().one());
  return m;
}

FreeVector PolyMatrix::column(std::size_t j) const {
  std::vector<Polynomial> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return FreeVector(std::move(c));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw RankMismatch("matrix shapes do not match");
  PolyMatrix r;
  r.rows_ = a.rows_;
  r.cols_ = b.cols_;
  r.data_.assign(a.rows_ * b.cols_, Polynomial());
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial s(a.data_.empty() ? RingPtr{} : a.at(i, 0).ring());
      for (std::size_t l = 0; l < a.cols_; ++l) s += a.at(i, l) * b.at(l, j);
      r.at(i, j) = std::move(s);
    }
  }
  return r;
}

FreeVector operator*(const PolyMatrix& a, const FreeVector& v) {
  if (a.cols_ != v.rank()) throw RankMismatch("matrix and vector shapes do not match");
  std::vector<Polynomial> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Polynomial s;
    for (std::size_t l = 0; l < a.cols_; ++l) s += a.at(i, l) * v[l];
    out[i] = std::move(s);
  }
  return FreeVector(std::move(out));
}

PolyMatrix PolyMatrix::frobenius_twist(std::uint32_t times) const {
  PolyMatrix r = *this;
  for (auto& f : r.data_) f = f.frobenius_twist(times);
  return r;
}

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw RankMismatch("determinant of a non-square matrix");
  if (rows_ == 0) throw InvalidArgument("determinant of an empty matrix");
  const RingPtr ring = data_[0].ring();
  if (rows_ == 1) return data_[0];
  Polynomial det(ring);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (at(0, j).is_zero()) continue;
    PolyMatrix minor(ring, rows_ - 1, cols_ - 1);
    for (std::size_t i = 1; i < rows_; ++i) {
      for (std::size_t l = 0, c = 0; l < cols_; ++l) {
        if (l == j) continue;
        minor.at(i - 1, c++) = at(i, l);
      }
    }
    const Polynomial term = at(0, j) * minor.determinant();
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

bool PolyMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace frobkit
