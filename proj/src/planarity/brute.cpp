#include "planarq/planarity.hpp"

namespace planarq::planar {

namespace {

constexpr std::uint64_t kMaxSplitTable = std::uint64_t{1} << 22;

std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, std::uint32_t p, unsigned digits, bool subtract) {
  std::uint32_t r = 0, place = 1;
  for (unsigned i = 0; i < digits; ++i) {
    const std::uint32_t x = a % p, y = b % p;
    r += (subtract ? (x + p - y) % p : (x + y) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return r;
}

}  // namespace

DigitAdder::DigitAdder(std::uint32_t p, unsigned digits)
    : p_(p), digits_(digits), order_(gf::checked_pow(p, digits)) {
  if (order_ > (std::uint64_t{1} << 32)) throw SizeLimit("code space exceeds 32 bits");
  const unsigned lo = (digits + 1) / 2, hi = digits - lo;
  const std::uint64_t s = gf::checked_pow(p, lo), h = gf::checked_pow(p, hi);
  if (s * s > kMaxSplitTable) return;
  split_ = static_cast<std::uint32_t>(s);
  hi_size_ = static_cast<std::uint32_t>(h);
  add_lo_.resize(s * s);
  sub_lo_.resize(s * s);
  for (std::uint32_t a = 0; a < s; ++a) {
    for (std::uint32_t b = 0; b < s; ++b) {
      add_lo_[a * s + b] = digitwise(a, b, p, lo, false);
      sub_lo_[a * s + b] = digitwise(a, b, p, lo, true);
    }
  }
  add_hi_.resize(h * h);
  sub_hi_.resize(h * h);
  for (std::uint32_t a = 0; a < h; ++a) {
    for (std::uint32_t b = 0; b < h; ++b) {
      add_hi_[a * h + b] = digitwise(a, b, p, hi, false) * split_;
      sub_hi_[a * h + b] = digitwise(a, b, p, hi, true) * split_;
    }
  }
}

std::uint32_t DigitAdder::slow(std::uint32_t a, std::uint32_t b, bool subtract) const {
  return digitwise(a, b, p_, digits_, subtract);
}

bool brute_is_planar_values(std::span<const std::uint32_t> values, const DigitAdder& adder) {
  const std::size_t n = values.size();
  if (n != adder.order()) throw Error("value table does not cover the field");
  std::vector<std::uint32_t> stamp(n, 0);
  for (std::uint32_t a = 1; a < n; ++a) {
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t d = adder.sub(values[adder.add(x, a)], values[x]);
      if (stamp[d] == a) return false;
      stamp[d] = a;
    }
  }
  return true;
}

namespace {

unsigned digit_count(const gf::GaloisField& f) { return f.degree(); }
unsigned digit_count(const gf::ExtensionField& f) { return f.base().degree() * f.degree(); }
std::uint32_t characteristic(const gf::GaloisField& f) { return f.characteristic(); }
std::uint32_t characteristic(const gf::ExtensionField& f) { return f.base().characteristic(); }

}  // namespace

template <class Field>
std::vector<std::uint32_t> value_table(const SparsePoly<Field>& f) {
  const std::uint64_t n = f.field().order();
  std::vector<std::uint32_t> values(n);
  for (std::uint64_t c = 0; c < n; ++c) {
    values[c] = static_cast<std::uint32_t>(f(f.field().element(static_cast<std::uint32_t>(c))).code());
  }
  return values;
}

template <class Field>
bool brute_is_planar(const SparsePoly<Field>& f, const gf::SizeLimits& limits) {
  limits.require(f.field().order(), "brute planarity");
  const DigitAdder adder(characteristic(f.field()), digit_count(f.field()));
  return brute_is_planar_values(value_table(f), adder);
}

template std::vector<std::uint32_t> value_table(const SparsePoly<gf::GaloisField>&);
template std::vector<std::uint32_t> value_table(const SparsePoly<gf::ExtensionField>&);
template bool brute_is_planar(const SparsePoly<gf::GaloisField>&, const gf::SizeLimits&);
template bool brute_is_planar(const SparsePoly<gf::ExtensionField>&, const gf::SizeLimits&);

SparsePoly<gf::ExtensionField> f_poly(const FieldTower& tower, GfElement A, GfElement B) {
  const std::uint64_t q = tower.q();
  SparsePoly<gf::ExtensionField> f(tower.fq3());
  f.add_term(q * q + 1, tower.fq3().one());
  f.add_term(q + 1, tower.embed(A));
  f.add_term(2, tower.embed(B));
  return f;
}

std::vector<std::uint32_t> f_table(const FieldTower& tower, GfElement A, GfElement B) {
  tower.require_enumerable("f_{A,B} value table");
  const auto& k = tower.fq3();
  const std::uint32_t a = A.code(), b = B.code();
  std::vector<std::uint32_t> values(tower.order_top());
  for (std::uint64_t c = 0; c < values.size(); ++c) {
    const auto x = k.decode(c);
    const auto inner = k.add(k.add(k.frobenius(x, 2), k.scale(a, k.frobenius(x, 1))), k.scale(b, x));
    values[c] = static_cast<std::uint32_t>(k.encode(k.mul(x, inner)));
  }
  return values;
}

bool brute_is_planar_ab(const FieldTower& tower, GfElement A, GfElement B) {
  const DigitAdder adder(tower.p(), 3 * tower.m());
  return brute_is_planar_values(f_table(tower, A, B), adder);
}

}  // namespace planarq::planar
