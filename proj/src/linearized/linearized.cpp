#include "planarq/linearized.hpp"

namespace planarq::lin {

ExtElement LinTriple::operator()(const ExtElement& x) const {
  return c0 * x + c1 * x.frobenius(1) + c2 * x.frobenius(2);
}

LinTriple difference_triple(const FieldTower& tower, GfElement A, GfElement B, const ExtElement& C) {
  const auto a = tower.embed(A);
  const auto two_b = tower.embed(B + B);
  return {C.frobenius(2) + a * C.frobenius(1) + two_b * C, a * C, C};
}

Matrix3 dickson_matrix(const LinTriple& L) {
  return dickson_matrix(std::array<ExtElement, 3>{L.c0, L.c1, L.c2},
                        [](const ExtElement& c, unsigned k) { return c.frobenius(k); });
}

bool is_permutation(const LinTriple& L) { return !det3(dickson_matrix(L)).is_zero(); }

GfElement circulant_norm(GfElement alpha, GfElement beta, GfElement gamma) {
  const auto three = alpha.field().from_int(3);
  return alpha * alpha * alpha + beta * beta * beta + gamma * gamma * gamma -
         three * alpha * beta * gamma;
}

bool has_nonzero_root_subfield_coeffs(GfElement alpha, GfElement beta, GfElement gamma) {
  return circulant_norm(alpha, beta, gamma).is_zero();
}

std::vector<ExtElement> brute_kernel(const FieldTower& tower, const LinTriple& L) {
  tower.require_enumerable("brute kernel");
  std::vector<ExtElement> out;
  for (std::uint64_t c = 0; c < tower.order_top(); ++c) {
    const auto x = tower.fq3_element(c);
    if (L(x).is_zero()) out.push_back(x);
  }
  return out;
}

std::uint64_t brute_image_size(const FieldTower& tower, const LinTriple& L) {
  tower.require_enumerable("brute image");
  std::vector<bool> seen(tower.order_top(), false);
  std::uint64_t n = 0;
  for (std::uint64_t c = 0; c < tower.order_top(); ++c) {
    const auto y = L(tower.fq3_element(c)).code();
    if (!seen[y]) {
      seen[y] = true;
      ++n;
    }
  }
  return n;
}

}  // namespace planarq::lin
