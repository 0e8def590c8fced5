#pragma once

// Finite field tower F_p ⊂ F_q = F_{p^m} ⊂ F_{q^3}.
//
// GaloisField is F_p[t]/(g) with log/antilog tables; elements are encoded as
// little-endian base-p digit packings of their coefficient vectors.
// ExtensionField is F_q[x]/(h) for deg h in {1,2,3}; elements are encoded as
// little-endian base-q packings of the F_q codes of their coordinates. Both
// encodings are therefore base-p digit vectors, and addition is digit-wise.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planarq/errors.hpp"

namespace planarq::gf {

/// Bound on the number of elements an enumeration-based operation may visit.
/// Defaults to 2^24; PLANARQ_MAX_Q3 overrides.
struct SizeLimits {
  std::uint64_t max_enumeration = std::uint64_t{1} << 24;

  static SizeLimits from_env();
  void require(std::uint64_t size, std::string_view what) const;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// base^exp; throws SizeLimit on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

class GaloisField;
class ExtensionField;

class GfElement {
 public:
  GfElement() = default;
  GfElement(const GaloisField* field, std::uint32_t code) : field_(field), code_(code) {}

  const GaloisField& field() const { return *field_; }
  const GaloisField* field_ptr() const { return field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  GfElement inv() const;
  GfElement pow(std::uint64_t e) const;

  friend GfElement operator+(GfElement a, GfElement b);
  friend GfElement operator-(GfElement a, GfElement b);
  friend GfElement operator*(GfElement a, GfElement b);
  friend GfElement operator/(GfElement a, GfElement b);
  GfElement operator-() const;
  GfElement& operator+=(GfElement b) { return *this = *this + b; }
  GfElement& operator-=(GfElement b) { return *this = *this - b; }
  GfElement& operator*=(GfElement b) { return *this = *this * b; }

  friend bool operator==(GfElement a, GfElement b) {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }

 private:
  const GaloisField* field_ = nullptr;
  std::uint32_t code_ = 0;
};

class GaloisField {
 public:
  using Element = GfElement;

  /// Largest field order for which the arithmetic tables are built.
  static constexpr std::uint32_t kMaxOrder = std::uint32_t{1} << 22;

  /// F_p[t]/(modulus); modulus is monic, low-to-high F_p coefficients, and is
  /// checked for irreducibility.
  GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus);
  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

  static std::shared_ptr<const GaloisField> prime(std::uint32_t p);
  /// F_{p^m} with the lexicographically smallest monic irreducible modulus.
  static std::shared_ptr<const GaloisField> create(std::uint32_t p, unsigned m);
  static std::shared_ptr<const GaloisField> create(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t primitive_code() const { return exp_[1]; }

  GfElement element(std::uint32_t code) const;
  GfElement zero() const { return {this, 0}; }
  GfElement one() const { return {this, 1}; }
  /// Image of an integer in the prime subfield.
  GfElement from_int(std::int64_t v) const { return {this, int_code(v)}; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t int_code(std::int64_t v) const;

  /// Discrete log to the base primitive_code(); a must be nonzero.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }

  std::vector<std::uint32_t> digits(std::uint32_t code) const;
  std::string describe() const;

 private:
  std::vector<std::uint32_t> slow_mul(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) const;
  std::uint32_t pack(const std::vector<std::uint32_t>& digits) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> place_;  // p^i
  std::vector<std::uint32_t> exp_;    // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint16_t> add_table_;  // q*q entries when q <= 1024
};

/// Coordinates of an extension element over its base field, as base codes.
using Coords = std::array<std::uint32_t, 3>;

class ExtElement {
 public:
  ExtElement() = default;
  ExtElement(const ExtensionField* field, Coords c) : field_(field), c_(c) {}

  const ExtensionField& field() const { return *field_; }
  const ExtensionField* field_ptr() const { return field_; }
  const Coords& coords() const { return c_; }
  GfElement coord(unsigned i) const;
  std::uint64_t code() const;
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

  /// True when the element lies in the base field (Frobenius-fixed).
  bool in_base_field() const { return c_[1] == 0 && c_[2] == 0; }
  /// Projection to the base field; throws CoefficientNotInSubfield otherwise.
  GfElement base_part() const;

  /// x^{q^k}, k reduced modulo the extension degree.
  ExtElement frobenius(unsigned k = 1) const;
  ExtElement inv() const;
  ExtElement pow(std::uint64_t e) const;

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator/(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(GfElement s, const ExtElement& a);
  ExtElement operator-() const;
  ExtElement& operator+=(const ExtElement& b) { return *this = *this + b; }
  ExtElement& operator-=(const ExtElement& b) { return *this = *this - b; }
  ExtElement& operator*=(const ExtElement& b) { return *this = *this * b; }

  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.c_ == b.c_ && a.field_ == b.field_;
  }

 private:
  const ExtensionField* field_ = nullptr;
  Coords c_{0, 0, 0};
};

class ExtensionField {
 public:
  using Element = ExtElement;

  /// base[x]/(modulus); modulus monic of degree 1..3, low-to-high base codes.
  ExtensionField(std::shared_ptr<const GaloisField> base, std::vector<std::uint32_t> modulus);
  ExtensionField(const ExtensionField&) = delete;
  ExtensionField& operator=(const ExtensionField&) = delete;

  static std::shared_ptr<const ExtensionField> create(std::shared_ptr<const GaloisField> base,
                                                      unsigned degree);
  static std::shared_ptr<const ExtensionField> create(std::shared_ptr<const GaloisField> base,
                                                      std::vector<std::uint32_t> modulus);

  const GaloisField& base() const { return *base_; }
  const std::shared_ptr<const GaloisField>& base_ptr() const { return base_; }
  unsigned degree() const { return d_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  ExtElement element(std::uint64_t code) const;
  ExtElement zero() const { return {this, {0, 0, 0}}; }
  ExtElement one() const { return {this, {1, 0, 0}}; }
  ExtElement embed(GfElement a) const;
  ExtElement from_int(std::int64_t v) const { return {this, {base_->int_code(v), 0, 0}}; }
  ExtElement from_coords(Coords c) const { return {this, c}; }

  Coords add(const Coords& a, const Coords& b) const;
  Coords sub(const Coords& a, const Coords& b) const;
  Coords neg(const Coords& a) const;
  Coords mul(const Coords& a, const Coords& b) const;
  Coords scale(std::uint32_t s, const Coords& a) const;
  Coords inv(const Coords& a) const;
  Coords pow(const Coords& a, std::uint64_t e) const;
  /// Applies x -> x^{q^k} through the precomputed F_q-linear action.
  Coords frobenius(const Coords& a, unsigned k) const;

  std::uint64_t encode(const Coords& c) const;
  Coords decode(std::uint64_t code) const;

 private:
  std::shared_ptr<const GaloisField> base_;
  unsigned d_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  // frob_[k][i] = (x^i)^{q^k}, for k < d, i < d.
  std::array<std::array<Coords, 3>, 3> frob_{};
};

/// Polynomials over a GaloisField are low-to-high vectors of element codes.
bool is_irreducible(const GaloisField& base, std::span<const std::uint32_t> poly);

/// Lexicographically smallest monic irreducible polynomial of the given degree
/// over `base`, ordering (c_{d-1}, ..., c_0) by canonical code, c_{d-1} first.
std::vector<std::uint32_t> find_irreducible(const GaloisField& base, unsigned degree);

/// First element in code order whose conjugates form a basis over the base.
ExtElement find_normal_element(const ExtensionField& field);

/// Smaller (by code) square root of a, 0 for a = 0, nullopt for a non-square.
std::optional<GfElement> sqrt_in_fq(GfElement a);

/// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(GfElement a);

/// F_p ⊂ F_q ⊂ F_{q^3}. Immutable; copies share the underlying fields.
class FieldTower {
 public:
  static FieldTower build(std::uint32_t p, unsigned m, SizeLimits limits = SizeLimits::from_env());
  /// Explicit moduli, for cross-checking against external tables.
  static FieldTower build(std::uint32_t p, std::vector<std::uint32_t> mid_modulus,
                          std::vector<std::uint32_t> top_modulus,
                          SizeLimits limits = SizeLimits::from_env());

  std::uint32_t p() const { return fq_->characteristic(); }
  unsigned m() const { return fq_->degree(); }
  std::uint32_t q() const { return fq_->order(); }
  std::uint64_t order_top() const { return fq3_->order(); }

  const GaloisField& fq() const { return *fq_; }
  const ExtensionField& fq3() const { return *fq3_; }
  const std::shared_ptr<const GaloisField>& fq_ptr() const { return fq_; }
  const std::shared_ptr<const ExtensionField>& fq3_ptr() const { return fq3_; }
  const SizeLimits& limits() const { return limits_; }

  GfElement fq_element(std::uint32_t code) const { return fq_->element(code); }
  ExtElement fq3_element(std::uint64_t code) const { return fq3_->element(code); }
  ExtElement embed(GfElement a) const { return fq3_->embed(a); }
  const ExtElement& normal_element() const { return normal_; }

  /// Throws SizeLimit when q^3 exceeds the enumeration bound.
  void require_enumerable(std::string_view what) const;

 private:
  FieldTower(std::shared_ptr<const GaloisField> fq, std::shared_ptr<const ExtensionField> fq3,
             SizeLimits limits);

  std::shared_ptr<const GaloisField> fq_;
  std::shared_ptr<const ExtensionField> fq3_;
  SizeLimits limits_;
  ExtElement normal_;
};

}  // namespace planarq::gf
