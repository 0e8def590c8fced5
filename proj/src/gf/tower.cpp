#include "planarq/gf.hpp"

namespace planarq::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly rem_monic(const GaloisField& f, Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() > db) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
    trim(a);
  }
  return a;
}

bool has_root(const GaloisField& f, std::span<const std::uint32_t> poly) {
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    std::uint32_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
    if (acc == 0) return true;
  }
  return false;
}

template <class Field>
auto det_small(const std::array<std::array<typename Field::Element, 3>, 3>& m, unsigned d) {
  if (d == 1) return m[0][0];
  if (d == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

bool is_irreducible(const GaloisField& base, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  if (f[0] == 0) return false;
  if (d <= 3) return !has_root(base, f);

  // Trial division by every monic polynomial of degree <= d/2.
  const Poly monic = [&] {
    Poly g = f;
    const std::uint32_t lead_inv = base.inv(g.back());
    for (auto& c : g) c = base.mul(c, lead_inv);
    return g;
  }();
  const std::uint64_t q = base.order();
  for (std::size_t k = 1; k <= d / 2; ++k) {
    const std::uint64_t count = checked_pow(q, static_cast<unsigned>(k));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(k + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t j = 0; j < k; ++j) {
        g[j] = static_cast<std::uint32_t>(t % q);
        t /= q;
      }
      g[k] = 1;
      if (rem_monic(base, monic, g).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(const GaloisField& base, unsigned degree) {
  if (degree == 0) throw InvalidModulus("degree must be positive");
  const std::uint64_t q = base.order();
  const std::uint64_t count = checked_pow(q, degree);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly g(degree + 1, 0);
    std::uint64_t t = idx;
    for (unsigned j = 0; j < degree; ++j) {
      g[j] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    g[degree] = 1;
    if (is_irreducible(base, g)) return g;
  }
  throw InvalidModulus("no irreducible polynomial found");  // unreachable for a field
}

ExtElement find_normal_element(const ExtensionField& field) {
  const unsigned d = field.degree();
  const auto& base = field.base();
  for (std::uint64_t code = 1; code < field.order(); ++code) {
    const ExtElement xi = field.element(code);
    std::array<std::array<GfElement, 3>, 3> m{};
    for (unsigned k = 0; k < d; ++k) {
      const ExtElement c = xi.frobenius(k);
      for (unsigned i = 0; i < d; ++i) m[k][i] = base.element(c.coords()[i]);
    }
    if (!det_small<GaloisField>(m, d).is_zero()) return xi;
  }
  throw Error("no normal element found");  // unreachable for a field
}

std::optional<GfElement> sqrt_in_fq(GfElement a) {
  const auto& f = a.field();
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    if (f.mul(x, x) == a.code()) return f.element(x);
  }
  return std::nullopt;
}

std::uint64_t multiplicative_order(GfElement a) {
  if (a.is_zero()) throw DivisionByZero("zero has no multiplicative order");
  std::uint64_t ord = a.field().order() - 1;
  for (auto r : prime_factors(ord)) {
    while (ord % r == 0 && a.pow(ord / r) == a.field().one()) ord /= r;
  }
  return ord;
}

FieldTower::FieldTower(std::shared_ptr<const GaloisField> fq, std::shared_ptr<const ExtensionField> fq3,
                       SizeLimits limits)
    : fq_(std::move(fq)), fq3_(std::move(fq3)), limits_(limits) {
  normal_ = find_normal_element(*fq3_);
}

namespace {

void check_tower_params(std::uint32_t p, unsigned m, const SizeLimits& limits) {
  if (p == 2 || !is_prime(p)) throw NotOddPrime(std::to_string(p) + " is not an odd prime");
  if (m == 0) throw InvalidModulus("m must be positive");
  const std::uint64_t q = checked_pow(p, m);
  if (q > GaloisField::kMaxOrder) throw SizeLimit("q = " + std::to_string(q) + " is too large");
  const std::uint64_t q3 = checked_pow(q, 3);
  limits.require(q3, "F_{q^3} with q = " + std::to_string(q));
}

}  // namespace

FieldTower FieldTower::build(std::uint32_t p, unsigned m, SizeLimits limits) {
  check_tower_params(p, m, limits);
  auto fq = GaloisField::create(p, m);
  auto fq3 = ExtensionField::create(fq, 3);
  return FieldTower(std::move(fq), std::move(fq3), limits);
}

FieldTower FieldTower::build(std::uint32_t p, std::vector<std::uint32_t> mid_modulus,
                             std::vector<std::uint32_t> top_modulus, SizeLimits limits) {
  if (mid_modulus.size() < 2) throw InvalidModulus("mid modulus must have degree >= 1");
  check_tower_params(p, static_cast<unsigned>(mid_modulus.size() - 1), limits);
  auto fq = GaloisField::create(p, std::move(mid_modulus));
  if (top_modulus.size() != 4) throw InvalidModulus("top modulus must have degree 3");
  auto fq3 = ExtensionField::create(fq, std::move(top_modulus));
  return FieldTower(std::move(fq), std::move(fq3), limits);
}

void FieldTower::require_enumerable(std::string_view what) const {
  limits_.require(order_top(), what);
}

}  // namespace planarq::gf
