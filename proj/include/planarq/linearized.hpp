#pragma once

// Linearized polynomials L(x) = c0 x + c1 x^q + c2 x^{q^2} over F_{q^3}.

#include <array>
#include <cstdint>
#include <vector>

#include "planarq/gf.hpp"

namespace planarq::lin {

using gf::ExtElement;
using gf::FieldTower;
using gf::GfElement;

struct LinTriple {
  ExtElement c0, c1, c2;

  ExtElement operator()(const ExtElement& x) const;
  const ExtElement& operator[](unsigned i) const { return i == 0 ? c0 : (i == 1 ? c1 : c2); }
};

template <class E>
using Mat3 = std::array<std::array<E, 3>, 3>;
using Matrix3 = Mat3<ExtElement>;

/// Coefficients of x, x^q, x^{q^2} in f(x + C) - f(x) - f(C) for
/// f = x^{q^2+1} + A x^{q+1} + B x^2.
LinTriple difference_triple(const FieldTower& tower, GfElement A, GfElement B, const ExtElement& C);

/// entry(i, j) = frob(c[(j - i) mod 3], i), for any coefficient type whose
/// Frobenius action is supplied by the caller.
template <class E, class Frob>
Mat3<E> dickson_matrix(const std::array<E, 3>& c, Frob&& frob) {
  Mat3<E> m;
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) m[i][j] = frob(c[(j + 3 - i) % 3], i);
  }
  return m;
}

Matrix3 dickson_matrix(const LinTriple& L);

/// Cofactor expansion along the first row.
template <class E>
E det3(const Mat3<E>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool is_permutation(const LinTriple& L);

/// alpha x^{q^2} + beta x^q + gamma x with coefficients in F_q has a nonzero
/// root in F_{q^3} iff alpha^3 + beta^3 + gamma^3 - 3 alpha beta gamma = 0.
GfElement circulant_norm(GfElement alpha, GfElement beta, GfElement gamma);
bool has_nonzero_root_subfield_coeffs(GfElement alpha, GfElement beta, GfElement gamma);

/// Every x with L(x) = 0, in enumeration order. Throws SizeLimit.
std::vector<ExtElement> brute_kernel(const FieldTower& tower, const LinTriple& L);
/// Number of distinct values of L over F_{q^3}. Throws SizeLimit.
std::uint64_t brute_image_size(const FieldTower& tower, const LinTriple& L);

}  // namespace planarq::lin
