#include <sstream>

#include "planarq/curves.hpp"
#include "planarq/linearized.hpp"
#include "planarq/parallel.hpp"

namespace planarq::curves {

Cubic cyclic_shift(const Cubic& f) { return f.rename({1, 2, 0}); }

Cubic swap_xy(const Cubic& f) { return f.rename({1, 0, 2}); }

Cubic build_F_det(const FieldTower& tower, GfElement A, GfElement B) {
  const auto& k = tower.fq();
  const auto zero = k.zero(), one = k.one();
  const std::array<Cubic, 3> c{Cubic::linear(k, B + B, A, one), Cubic::linear(k, A, zero, zero),
                               Cubic::linear(k, one, zero, zero)};
  const auto m = lin::dickson_matrix(c, [](const Cubic& f, unsigned i) {
    Cubic r = f;
    for (unsigned s = 0; s < i; ++s) r = cyclic_shift(r);
    return r;
  });
  return lin::det3(m);
}

Cubic build_F_det_closed(const FieldTower& tower, GfElement A, GfElement B) {
  const auto& k = tower.fq();
  const auto n = [&](int v) { return k.from_int(v); };
  const auto ab = n(2) * A * B;
  const auto g1 = n(2) * A * A * B + n(4) * B * B;
  const auto g2 = n(4) * A * B * B + n(2) * B;
  const auto xyt = n(2) * A * A * A + n(8) * B * B * B + n(2);
  Cubic f(k, 3);
  f.set(3, 0, 0, ab);
  f.set(0, 3, 0, ab);
  f.set(0, 0, 3, ab);
  f.set(2, 0, 1, g1);
  f.set(1, 2, 0, g1);
  f.set(0, 1, 2, g1);
  f.set(2, 1, 0, g2);
  f.set(0, 2, 1, g2);
  f.set(1, 0, 2, g2);
  f.set(1, 1, 1, xyt);
  return f;
}

Cubic build_F_swapped(const FieldTower& tower, GfElement A, GfElement B) {
  const auto& k = tower.fq();
  const auto n = [&](int v) { return k.from_int(v); };
  const auto ab = n(2) * A * B;
  const auto g1 = n(2) * A * A * B + n(4) * B * B;  // X + Y^2 + X^2Y
  const auto g2 = n(4) * A * B * B + n(2) * B;      // X^2 + Y + XY^2
  const auto xy = n(2) * A * A * A + n(8) * B * B * B + n(2);
  Cubic f(k, 3);
  f.set(3, 0, 0, ab);
  f.set(0, 3, 0, ab);
  f.set(0, 0, 3, ab);
  f.set(1, 0, 2, g1);
  f.set(0, 2, 1, g1);
  f.set(2, 1, 0, g1);
  f.set(2, 0, 1, g2);
  f.set(0, 1, 2, g2);
  f.set(1, 2, 0, g2);
  f.set(1, 1, 1, xy);
  return f;
}

DetIdentityCheck check_det_identity(const FieldTower& tower, GfElement A, GfElement B, const ExtElement& C) {
  DetIdentityCheck out;
  out.det = lin::det3(lin::dickson_matrix(lin::difference_triple(tower, A, B, C)));
  const auto& K = tower.fq3();
  const auto lifted = build_F_det(tower, A, B).map_coeffs(K, [&](const GfElement& c) { return K.embed(c); });
  out.form_value = lifted(C, C.frobenius(1), C.frobenius(2));
  out.equal = out.det == out.form_value;
  out.in_subfield = out.det.frobenius(1) == out.det && out.det.in_base_field();
  return out;
}

std::string to_string(const Cubic& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (c.code() != 1) os << c.code() << '*';
    os << Cubic::monomial_name(i, 3);
  }
  if (first) os << '0';
  return os.str();
}

std::uint64_t count_nonzero_fq_zeros(const Cubic& f, unsigned workers) {
  const auto& k = f.field();
  const std::uint32_t q = k.order();
  std::vector<std::uint64_t> per_x(q, 0);
  parallel_for(q, workers, [&](std::size_t x, unsigned) {
    const auto xv = k.element(static_cast<std::uint32_t>(x));
    std::uint64_t n = 0;
    for (std::uint32_t y = 0; y < q; ++y) {
      for (std::uint32_t t = 0; t < q; ++t) {
        if (x == 0 && y == 0 && t == 0) continue;
        n += f(xv, k.element(y), k.element(t)).is_zero();
      }
    }
    per_x[x] = n;
  });
  std::uint64_t total = 0;
  for (auto n : per_x) total += n;
  return total;
}

std::uint64_t count_det_roots(const FieldTower& tower, GfElement A, GfElement B) {
  tower.require_enumerable("determinant root count");
  std::uint64_t n = 0;
  for (std::uint64_t c = 1; c < tower.order_top(); ++c) {
    n += lin::det3(lin::dickson_matrix(lin::difference_triple(tower, A, B, tower.fq3_element(c)))).is_zero();
  }
  return n;
}

Cubic transform_H(const FieldTower& tower, GfElement A, GfElement B, const ExtElement& xi) {
  const auto& K = tower.fq3();
  const auto lifted = build_F_det(tower, A, B).map_coeffs(K, [&](const GfElement& c) { return K.embed(c); });
  const auto x0 = xi, x1 = xi.frobenius(1), x2 = xi.frobenius(2);
  const auto h = lifted.substitute(ExtCubic::linear(K, x0, x1, x2), ExtCubic::linear(K, x1, x2, x0),
                                   ExtCubic::linear(K, x2, x0, x1));
  return h.map_coeffs(tower.fq(), [](const ExtElement& c) {
    if (c.frobenius(1) != c) throw CoefficientNotInSubfield("H has a coefficient outside F_q");
    return c.base_part();
  });
}

}  // namespace planarq::curves
