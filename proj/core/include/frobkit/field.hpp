#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace frobkit {

// Element of a finite field F_{p^e}. The code packs the coefficients of the
// representative polynomial c_0 + c_1 t + ... + c_{e-1} t^{e-1} in base p,
// so code == c_0 for prime fields and codes enumerate the field as 0..q-1.
struct FieldElement {
  std::uint64_t code = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

// {"p": int, "e": int, "modulus": [int]} in session files. The modulus lists
// the coefficients of a monic degree-e polynomial from the constant term up,
// leading 1 included; it is empty when e == 1.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The perfect field k = F_p[t]/(modulus) with Frobenius a -> a^p and its
/// inverse. Immutable after construction and safe to share across threads.
class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = 97;
  static constexpr std::uint32_t kMaxDegree = 8;

  /// Validates p, e and the modulus (p prime, modulus monic and irreducible) and throws
  /// InvalidArgument otherwise.
  static FieldPtr create(const FieldSpec& spec);
  static FieldPtr prime(std::uint32_t p);
  /// F_{p^degree} presented by the lexicographically smallest monic
  /// irreducible polynomial of that degree.
  static FieldPtr extension(std::uint32_t p, std::uint32_t degree);

  static bool is_prime(std::uint32_t n);
  static bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);
  static std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t degree);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t characteristic() const noexcept { return spec_.p; }
  std::uint32_t degree() const noexcept { return spec_.e; }
  std::uint64_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return spec_.e == 1; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement from_int(std::int64_t n) const noexcept;
  /// The element with the given code; code must be < order().
  FieldElement element(std::uint64_t code) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  /// The class of t in F_p[t]/(modulus); for prime fields this is 0.
  FieldElement generator() const;

  bool is_zero(FieldElement a) const noexcept { return a.code == 0; }
  bool is_one(FieldElement a) const noexcept { return a.code == 1; }
  bool in_prime_field(FieldElement a) const noexcept { return a.code < spec_.p; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  /// Throws DivisionByZero for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t n) const noexcept;

  /// a^p, a field automorphism.
  FieldElement frobenius(FieldElement a) const noexcept;
  /// a^{p^{e-1}}, the unique b with b^p = a.
  FieldElement frobenius_root(FieldElement a) const noexcept;

  /// "3" for prime fields; "(t^2 + 2*t)"-style for extensions when the
  /// value is not in the prime field.
  std::string to_string(FieldElement a, const std::string& gen = "t") const;

  explicit Field(FieldSpec spec);  // use create()

 private:
  using Digits = std::vector<std::uint32_t>;

  Digits digits(FieldElement a) const;
  FieldElement pack(const Digits& d) const;
  FieldElement slow_mul(FieldElement a, FieldElement b) const;
  FieldElement slow_add(FieldElement a, FieldElement b, bool subtract) const;
  FieldElement euclid_inverse(FieldElement a) const;
  void build_tables();

  FieldSpec spec_;
  std::uint64_t q_ = 0;
  std::uint64_t frob_root_exp_ = 1;  // p^{e-1}
  // Log/antilog tables and Zech logarithms for small extension fields.
  bool tables_ = false;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int64_t> zech_;   // log(1 + g^n), -1 when 1 + g^n == 0
};

}  // namespace frobkit
