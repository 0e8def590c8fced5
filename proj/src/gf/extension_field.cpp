#include "planarq/gf.hpp"

namespace planarq::gf {

namespace {

void check_same(const ExtensionField* a, const ExtensionField* b) {
  if (a != b) throw LevelMismatch("operands belong to different extension fields");
}

}  // namespace

GfElement ExtElement::coord(unsigned i) const { return field_->base().element(c_[i]); }

std::uint64_t ExtElement::code() const { return field_->encode(c_); }

GfElement ExtElement::base_part() const {
  if (!in_base_field()) throw CoefficientNotInSubfield("element is not in the base field");
  return field_->base().element(c_[0]);
}

ExtElement ExtElement::frobenius(unsigned k) const { return {field_, field_->frobenius(c_, k)}; }

ExtElement ExtElement::inv() const { return {field_, field_->inv(c_)}; }

ExtElement ExtElement::pow(std::uint64_t e) const { return {field_, field_->pow(c_, e)}; }

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_->add(a.c_, b.c_)};
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_->sub(a.c_, b.c_)};
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.c_, b.c_)};
}

ExtElement operator/(const ExtElement& a, const ExtElement& b) {
  check_same(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.c_, a.field_->inv(b.c_))};
}

ExtElement operator*(GfElement s, const ExtElement& a) {
  if (s.field_ptr() != &a.field_->base()) throw LevelMismatch("scalar is not in the base field");
  return {a.field_, a.field_->scale(s.code(), a.c_)};
}

ExtElement ExtElement::operator-() const { return {field_, field_->neg(c_)}; }

ExtensionField::ExtensionField(std::shared_ptr<const GaloisField> base,
                               std::vector<std::uint32_t> modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2 || modulus_.size() > 4 || modulus_.back() != 1) {
    throw InvalidModulus("extension modulus must be monic of degree 1, 2 or 3");
  }
  for (auto c : modulus_) {
    if (c >= base_->order()) throw InvalidModulus("modulus coefficient out of range");
  }
  d_ = static_cast<unsigned>(modulus_.size() - 1);
  if (!is_irreducible(*base_, modulus_)) throw InvalidModulus("extension modulus is reducible");
  order_ = checked_pow(base_->order(), d_);

  for (unsigned i = 0; i < 3; ++i) frob_[0][i] = Coords{0, 0, 0};
  frob_[0][0][0] = 1;
  if (d_ > 1) {
    frob_[0][1] = Coords{0, 1, 0};
    if (d_ > 2) frob_[0][2] = Coords{0, 0, 1};
    Coords xq = pow(Coords{0, 1, 0}, base_->order());
    for (unsigned k = 1; k < d_; ++k) {
      // (x^i)^{q^k} = (x^{q^k})^i
      Coords xk = k == 1 ? xq : pow(xq, checked_pow(base_->order(), k - 1));
      frob_[k][0] = Coords{1, 0, 0};
      for (unsigned i = 1; i < d_; ++i) frob_[k][i] = mul(frob_[k][i - 1], xk);
    }
  }
}

std::shared_ptr<const ExtensionField> ExtensionField::create(std::shared_ptr<const GaloisField> base,
                                                             unsigned degree) {
  auto modulus = find_irreducible(*base, degree);
  return std::make_shared<const ExtensionField>(std::move(base), std::move(modulus));
}

std::shared_ptr<const ExtensionField> ExtensionField::create(std::shared_ptr<const GaloisField> base,
                                                             std::vector<std::uint32_t> modulus) {
  return std::make_shared<const ExtensionField>(std::move(base), std::move(modulus));
}

ExtElement ExtensionField::element(std::uint64_t code) const {
  if (code >= order_) throw Error("code " + std::to_string(code) + " out of range for extension");
  return {this, decode(code)};
}

ExtElement ExtensionField::embed(GfElement a) const {
  if (a.field_ptr() != base_.get()) throw LevelMismatch("element is not in the base field");
  return {this, {a.code(), 0, 0}};
}

Coords ExtensionField::add(const Coords& a, const Coords& b) const {
  const auto& f = *base_;
  return {f.add(a[0], b[0]), f.add(a[1], b[1]), f.add(a[2], b[2])};
}

Coords ExtensionField::sub(const Coords& a, const Coords& b) const {
  const auto& f = *base_;
  return {f.sub(a[0], b[0]), f.sub(a[1], b[1]), f.sub(a[2], b[2])};
}

Coords ExtensionField::neg(const Coords& a) const {
  const auto& f = *base_;
  return {f.neg(a[0]), f.neg(a[1]), f.neg(a[2])};
}

Coords ExtensionField::scale(std::uint32_t s, const Coords& a) const {
  const auto& f = *base_;
  return {f.mul(s, a[0]), f.mul(s, a[1]), f.mul(s, a[2])};
}

Coords ExtensionField::mul(const Coords& a, const Coords& b) const {
  const auto& f = *base_;
  std::array<std::uint32_t, 5> r{0, 0, 0, 0, 0};
  for (unsigned i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d_; ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  for (unsigned k = 2 * d_ - 2; k >= d_; --k) {
    const std::uint32_t c = r[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < d_; ++j) r[k - d_ + j] = f.sub(r[k - d_ + j], f.mul(c, modulus_[j]));
    r[k] = 0;
  }
  return {r[0], d_ > 1 ? r[1] : 0, d_ > 2 ? r[2] : 0};
}

Coords ExtensionField::frobenius(const Coords& a, unsigned k) const {
  k %= d_;
  if (k == 0) return a;
  const auto& f = *base_;
  Coords r{0, 0, 0};
  for (unsigned i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d_; ++j) r[j] = f.add(r[j], f.mul(a[i], frob_[k][i][j]));
  }
  return r;
}

Coords ExtensionField::inv(const Coords& a) const {
  if (a[0] == 0 && a[1] == 0 && a[2] == 0) throw DivisionByZero("inverse of zero in extension");
  // a^{-1} = (a^q ... a^{q^{d-1}}) / N(a), with N(a) in the base field.
  Coords y{1, 0, 0};
  for (unsigned k = 1; k < d_; ++k) y = mul(y, frobenius(a, k));
  const Coords n = mul(a, y);
  return scale(base_->inv(n[0]), y);
}

Coords ExtensionField::pow(const Coords& a, std::uint64_t e) const {
  const bool zero = a[0] == 0 && a[1] == 0 && a[2] == 0;
  if (zero) return e == 0 ? Coords{1, 0, 0} : Coords{0, 0, 0};
  e %= (order_ - 1);
  Coords r{1, 0, 0};
  Coords b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t ExtensionField::encode(const Coords& c) const {
  const std::uint64_t q = base_->order();
  std::uint64_t r = 0;
  for (unsigned i = d_; i-- > 0;) r = r * q + c[i];
  return r;
}

Coords ExtensionField::decode(std::uint64_t code) const {
  const std::uint64_t q = base_->order();
  Coords c{0, 0, 0};
  for (unsigned i = 0; i < d_; ++i) {
    c[i] = static_cast<std::uint32_t>(code % q);
    code /= q;
  }
  return c;
}

}  // namespace planarq::gf
