#include "frobkit/field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 16;

using Poly = std::vector<std::uint32_t>;  // F_p[t], low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DivisionByZero();
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// r = a mod b over F_p, b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

// Quotient and remainder of a by b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    q[shift] = static_cast<std::uint32_t>(c);
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    }
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool Field::is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool Field::is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Exhaustive search over monic candidate factors of degree <= deg / 2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> Field::smallest_irreducible(std::uint32_t p, std::uint32_t degree) {
  if (degree < 1) throw InvalidArgument("extension degree must be >= 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly g(degree + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < degree; ++i) {
      g[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    g[degree] = 1;
    if (is_irreducible(p, g)) return g;
  }
  throw InvalidArgument("no irreducible polynomial found");  // unreachable
}

FieldPtr Field::create(const FieldSpec& spec) {
  if (!is_prime(spec.p)) throw InvalidArgument("field characteristic " + std::to_string(spec.p) + " is not prime");
  if (spec.p > kMaxPrime) throw InvalidArgument("characteristic above supported bound 97");
  if (spec.e < 1 || spec.e > kMaxDegree) throw InvalidArgument("extension degree must be in [1, 8]");
  FieldSpec s = spec;
  if (s.e == 1) {
    s.modulus.clear();
  } else {
    if (s.modulus.size() != s.e + 1 || s.modulus.back() != 1) {
      throw InvalidArgument("modulus must list e+1 coefficients of a monic polynomial, constant term first");
    }
    for (auto c : s.modulus) {
      if (c >= s.p) throw InvalidArgument("modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible(s.p, s.modulus)) throw InvalidArgument("modulus is reducible over F_p");
  }
  return std::make_shared<const Field>(std::move(s));
}

FieldPtr Field::prime(std::uint32_t p) { return create(FieldSpec{p, 1, {}}); }

FieldPtr Field::extension(std::uint32_t p, std::uint32_t degree) {
  if (degree == 1) return prime(p);
  return create(FieldSpec{p, degree, smallest_irreducible(p, degree)});
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  q_ = 1;
  for (std::uint32_t i = 0; i < spec_.e; ++i) q_ *= spec_.p;
  frob_root_exp_ = q_ / spec_.p;
  if (spec_.e > 1 && q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(n);
  FieldElement g{0};
  for (std::uint64_t code = 2; code < q_; ++code) {
    const FieldElement c{code};
    bool primitive = true;
    for (auto r : factors) {
      FieldElement x = one();
      // slow power, tables are not built yet
      FieldElement base = c;
      std::uint64_t k = n / r;
      while (k) {
        if (k & 1) x = slow_mul(x, base);
        base = slow_mul(base, base);
        k >>= 1;
      }
      if (x.code == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = c;
      break;
    }
  }
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  FieldElement x = one();
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x.code);
    exp_[i + n] = static_cast<std::uint32_t>(x.code);
    log_[x.code] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, g);
  }
  zech_.assign(n, -1);
  for (std::uint64_t i = 0; i < n; ++i) {
    const FieldElement s = slow_add(FieldElement{exp_[i]}, one(), false);
    zech_[i] = s.code == 0 ? -1 : static_cast<std::int64_t>(log_[s.code]);
  }
  tables_ = true;
}

Field::Digits Field::digits(FieldElement a) const {
  Digits d(spec_.e, 0);
  std::uint64_t c = a.code;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    d[i] = static_cast<std::uint32_t>(c % spec_.p);
    c /= spec_.p;
  }
  return d;
}

FieldElement Field::pack(const Digits& d) const {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * spec_.p + d[i];
  return {code};
}

FieldElement Field::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(spec_.p);
  if (r < 0) r += spec_.p;
  return {static_cast<std::uint64_t>(r)};
}

FieldElement Field::element(std::uint64_t code) const {
  if (code >= q_) throw InvalidArgument("field element code out of range");
  return {code};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  Poly a(coeffs.begin(), coeffs.end());
  for (auto& c : a) c %= spec_.p;
  if (spec_.e > 1) {
    a = poly_mod(a, spec_.modulus, spec_.p);
  } else {
    a = poly_mod(a, Poly{0, 1}, spec_.p);  // evaluate at t = 0
  }
  a.resize(spec_.e, 0);
  return pack(a);
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const { return digits(a); }

FieldElement Field::generator() const {
  if (spec_.e == 1) return zero();
  return {spec_.p};
}

FieldElement Field::slow_add(FieldElement a, FieldElement b, bool subtract) const {
  const std::uint32_t p = spec_.p;
  std::uint64_t code = 0, place = 1;
  std::uint64_t x = a.code, y = b.code;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    const std::uint32_t dx = x % p, dy = y % p;
    x /= p;
    y /= p;
    const std::uint32_t s = subtract ? (dx + p - dy) % p : (dx + dy) % p;
    code += s * place;
    place *= p;
  }
  return {code};
}

FieldElement Field::slow_mul(FieldElement a, FieldElement b) const {
  const Poly r = poly_mod(poly_mul(digits(a), digits(b), spec_.p), spec_.modulus, spec_.p);
  Digits d = r;
  d.resize(spec_.e, 0);
  return pack(d);
}

FieldElement Field::add(FieldElement a, FieldElement b) const noexcept {
  if (spec_.e == 1) {
    const std::uint64_t s = a.code + b.code;
    return {s >= spec_.p ? s - spec_.p : s};
  }
  if (tables_) {
    if (a.code == 0) return b;
    if (b.code == 0) return a;
    const std::uint64_t n = q_ - 1;
    const std::uint64_t la = log_[a.code], lb = log_[b.code];
    const std::uint64_t diff = (lb + n - la) % n;
    const std::int64_t z = zech_[diff];
    if (z < 0) return zero();
    return {exp_[la + static_cast<std::uint64_t>(z)]};
  }
  return slow_add(a, b, false);
}

FieldElement Field::neg(FieldElement a) const noexcept {
  if (spec_.e == 1) return {a.code == 0 ? 0 : spec_.p - a.code};
  return slow_add(zero(), a, true);
}

FieldElement Field::sub(FieldElement a, FieldElement b) const noexcept {
  if (spec_.e == 1) return {a.code >= b.code ? a.code - b.code : a.code + spec_.p - b.code};
  return add(a, neg(b));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const noexcept {
  if (spec_.e == 1) return {a.code * b.code % spec_.p};
  if (a.code == 0 || b.code == 0) return zero();
  if (tables_) return {exp_[log_[a.code] + log_[b.code]]};
  return slow_mul(a, b);
}

FieldElement Field::euclid_inverse(FieldElement a) const {
  // Extended Euclid in F_p[t] on (modulus, a).
  const std::uint32_t p = spec_.p;
  Poly r0 = spec_.modulus, r1 = digits(a);
  trim(r1);
  Poly s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1, p);
    Poly s = poly_sub(s0, poly_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint32_t c = inverse_mod(r0[0], p);
  for (auto& x : s0) x = static_cast<std::uint32_t>(std::uint64_t(x) * c % p);
  Digits d = poly_mod(s0, spec_.modulus, p);
  d.resize(spec_.e, 0);
  return pack(d);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw DivisionByZero();
  if (spec_.e == 1) return {inverse_mod(static_cast<std::uint32_t>(a.code), spec_.p)};
  return euclid_inverse(a);
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t n) const noexcept {
  if (n == 0) return one();
  if (a.code == 0) return zero();
  if (tables_) {
    const std::uint64_t m = q_ - 1;
    const std::uint64_t l = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(log_[a.code]) * (n % m) % m);
    return {exp_[l]};
  }
  FieldElement r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

FieldElement Field::frobenius(FieldElement a) const noexcept {
  if (spec_.e == 1) return a;
  return pow(a, spec_.p);
}

FieldElement Field::frobenius_root(FieldElement a) const noexcept {
  if (spec_.e == 1) return a;
  return pow(a, frob_root_exp_);
}

std::string Field::to_string(FieldElement a, const std::string& gen) const {
  if (spec_.e == 1 || a.code < spec_.p) return std::to_string(a.code);
  const Digits d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << d[i];
      continue;
    }
    if (d[i] != 1) os << d[i] << "*";
    os << gen;
    if (i > 1) os << "^" << i;
  }
  return "(" + os.str() + ")";
}

}  // namespace frobkit
