#pragma once

// Planarity of f_{A,B}(x) = x^{q^2+1} + A x^{q+1} + B x^2 over F_{q^3}, and
// brute-force planarity of arbitrary polynomials over a finite field.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planarq/gf.hpp"

namespace planarq::planar {

using gf::ExtElement;
using gf::FieldTower;
using gf::GfElement;

/// Polynomial function on a finite field of order N. Exponents are reduced
/// modulo x^N - x on insertion; zero coefficients are never stored.
template <class Field>
class SparsePoly {
 public:
  using Element = typename Field::Element;

  explicit SparsePoly(const Field& field) : field_(&field) {}

  const Field& field() const { return *field_; }
  const std::map<std::uint64_t, Element>& terms() const { return terms_; }

  static std::uint64_t reduce_exponent(std::uint64_t e, std::uint64_t order) {
    return e == 0 ? 0 : (e - 1) % (order - 1) + 1;
  }

  SparsePoly& add_term(std::uint64_t exponent, Element coeff) {
    if (coeff.field_ptr() != field_) throw LevelMismatch("coefficient not in the ambient field");
    const auto e = reduce_exponent(exponent, field_->order());
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
    return *this;
  }

  Element operator()(const Element& x) const {
    Element acc = field_->zero();
    for (const auto& [e, c] : terms_) acc = acc + c * x.pow(e);
    return acc;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  const Field* field_;
  std::map<std::uint64_t, Element> terms_;
};

/// Digit-wise addition of base-p codes with `digits` digits.
class DigitAdder {
 public:
  DigitAdder(std::uint32_t p, unsigned digits);

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (split_ == 0) return slow(a, b, false);
    const std::uint32_t al = a % split_, ah = a / split_, bl = b % split_, bh = b / split_;
    return add_lo_[al * split_ + bl] + add_hi_[ah * hi_size_ + bh];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (split_ == 0) return slow(a, b, true);
    const std::uint32_t al = a % split_, ah = a / split_, bl = b % split_, bh = b / split_;
    return sub_lo_[al * split_ + bl] + sub_hi_[ah * hi_size_ + bh];
  }
  std::uint64_t order() const { return order_; }

 private:
  std::uint32_t slow(std::uint32_t a, std::uint32_t b, bool subtract) const;

  std::uint32_t p_;
  unsigned digits_;
  std::uint64_t order_;
  std::uint32_t split_ = 0;  // p^lo; 0 selects the per-digit path
  std::uint32_t hi_size_ = 0;
  std::vector<std::uint32_t> add_lo_, sub_lo_, add_hi_, sub_hi_;  // hi entries premultiplied by split_
};

/// values[x] = f(x) by code. True iff every x -> f(x + a) - f(x), a != 0, is
/// injective. Stops at the first failing a.
bool brute_is_planar_values(std::span<const std::uint32_t> values, const DigitAdder& adder);

template <class Field>
std::vector<std::uint32_t> value_table(const SparsePoly<Field>& f);

/// Throws SizeLimit when the field order exceeds `limits`.
template <class Field>
bool brute_is_planar(const SparsePoly<Field>& f, const gf::SizeLimits& limits);

SparsePoly<gf::ExtensionField> f_poly(const FieldTower& tower, GfElement A, GfElement B);
/// f_{A,B} on every element of F_{q^3}, via the Frobenius action.
std::vector<std::uint32_t> f_table(const FieldTower& tower, GfElement A, GfElement B);
bool brute_is_planar_ab(const FieldTower& tower, GfElement A, GfElement B);

struct DetVerdict {
  bool planar;
  std::optional<ExtElement> witness;  // first C != 0 in code order with a singular matrix
};

/// Sweeps every C != 0. Throws SizeLimit.
DetVerdict is_planar_det(const FieldTower& tower, GfElement A, GfElement B, bool want_witness = false);

enum class Branch { None, BZero, Cubic, Square };
std::string_view branch_name(Branch b);

struct PairClass {
  bool planar;
  Branch branch;
  std::optional<ExtElement> witness;
};

/// Closed-form classification, evaluated in F_q. Branch priority BZero, Cubic,
/// Square. A witness is looked up by a determinant sweep only on request.
PairClass classify_pair(const FieldTower& tower, GfElement A, GfElement B, bool want_witness = false);
Branch theorem_branch(GfElement A, GfElement B);

/// 1 + A^3 + B^3 - 3AB != 0.
bool prop1_necessary(GfElement A, GfElement B);

/// 3q - 2 - 4 gcd(3, q - 1).
std::uint64_t count_formula(std::uint64_t q);
inline std::uint64_t count_formula(const FieldTower& tower) { return count_formula(tower.q()); }

struct Methods {
  bool theorem = false;
  bool det = false;
  bool brute = false;

  /// Comma-separated subset of theorem, det, brute.
  static Methods parse(std::string_view list);
  std::string to_string() const;
  bool any() const { return theorem || det || brute; }
};

struct PairRecord {
  std::uint32_t A = 0, B = 0;
  std::optional<bool> theorem, det, brute;
  Branch branch = Branch::None;
  bool prop1 = false;
  std::optional<std::uint64_t> witness;
};

struct Disagreement {
  std::uint32_t A, B;
  std::string detail;
};

struct ScanOptions {
  Methods methods;
  unsigned workers = 1;
  bool want_witness = true;
};

struct ScanReport {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::uint32_t q = 0;
  Methods methods;
  std::vector<PairRecord> pairs;  // ordered by (A, B) code
  std::uint64_t planar_count = 0;  // det if run, else brute, else theorem
  std::optional<std::uint64_t> theorem_count, det_count, brute_count;
  std::uint64_t expected_count = 0;
  bool count_asserted = false;  // false for q = 3
  std::vector<Disagreement> disagreements;
  /// q = 3 only: pairs planar under an exact method but not by the theorem.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> converse_gaps;
  double elapsed_seconds = 0;

  bool count_matches() const { return planar_count == expected_count; }
  bool ok() const { return disagreements.empty() && (!count_asserted || count_matches()); }
};

ScanReport scan(const FieldTower& tower, const ScanOptions& options);

}  // namespace planarq::planar
