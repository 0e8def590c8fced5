#pragma once

// The ternary cubic attached to f_{A,B}: det M_{A,B,C} = F(C, C^q, C^{q^2}).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "planarq/form.hpp"
#include "planarq/gf.hpp"

namespace planarq::curves {

using gf::ExtElement;
using gf::FieldTower;
using gf::GfElement;

using Cubic = Form<gf::GaloisField>;
using ExtCubic = Form<gf::ExtensionField>;

/// Cofactor expansion of the Dickson matrix of the difference triple, with
/// (X, Y, T) standing for (C, C^q, C^{q^2}) and Frobenius acting as X -> Y -> T -> X.
Cubic build_F_det(const FieldTower& tower, GfElement A, GfElement B);
/// 2AB(X^3+Y^3+T^3) + (2A^2B+4B^2)(X^2T+XY^2+YT^2) + (4AB^2+2B)(X^2Y+Y^2T+XT^2) + (2A^3+8B^3+2)XYT.
Cubic build_F_det_closed(const FieldTower& tower, GfElement A, GfElement B);
/// The same cubic in the other common labeling: build_F_det with X and Y exchanged.
Cubic build_F_swapped(const FieldTower& tower, GfElement A, GfElement B);

Cubic swap_xy(const Cubic& f);
Cubic cyclic_shift(const Cubic& f);  // (X, Y, T) -> (Y, T, X)

struct DetIdentityCheck {
  ExtElement det;         // det of the Dickson matrix
  ExtElement form_value;  // F_det(C, C^q, C^{q^2})
  bool equal = false;
  bool in_subfield = false;
  bool passed() const { return equal && in_subfield; }
};
DetIdentityCheck check_det_identity(const FieldTower& tower, GfElement A, GfElement B, const ExtElement& C);

/// True iff uX + vY + wT divides f; (u, v, w) must not all vanish.
template <class Field>
bool line_divides(const Form<Field>& f, const typename Field::Element& u, const typename Field::Element& v,
                  const typename Field::Element& w) {
  const Field& k = f.field();
  using F = Form<Field>;
  const auto X = F::variable(k, 0), Y = F::variable(k, 1), T = F::variable(k, 2);
  if (!u.is_zero()) return f.substitute(F::linear(k, k.zero(), -(v / u), -(w / u)), Y, T).is_zero();
  if (!v.is_zero()) return f.substitute(X, F::linear(k, k.zero(), k.zero(), -(w / v)), T).is_zero();
  if (!w.is_zero()) return f.substitute(X, Y, F(k, 1)).is_zero();
  throw Error("the zero triple is not a line");
}

enum class Relabel { Identity, SwapXY };
std::string_view relabel_name(Relabel r);

enum class CheckStatus { Passed, Failed, SqrtUnavailable };

struct FactorCheck {
  std::string item;   // trace_line, cubic_product, square_product, alpha_line,
                      // alpha_line_cyclotomic, b_zero_product, a_zero_line
  std::string claim;  // "divides" or "product"
  std::string line;   // the line or product in (X, Y, T), as printed
  CheckStatus status = CheckStatus::Failed;
  std::optional<Relabel> relabel;
  std::optional<GfElement> alpha;   // the square root of -3 that worked
  std::optional<GfElement> lambda;  // F_det = lambda * product
  std::string note;
};

struct FactorReport {
  std::vector<FactorCheck> checks;
  bool passed() const;
};

/// Checks every factorization claim whose locus contains (A, B). Throws
/// NotOnLocus when no locus applies, SquareRootUnavailable when every applicable
/// claim needs a square root of -3 that F_q lacks.
FactorReport verify_branch_factorization(const FieldTower& tower, GfElement A, GfElement B);

struct LineFactor {
  unsigned degree = 1;  // smallest k with coefficients in F_{q^k}
  std::shared_ptr<const gf::ExtensionField> field;  // F_{q^k} over F_q
  ExtElement u, v, w;  // first nonzero coefficient is 1
};

/// Every line over F_{q^k}, k <= max_ext, dividing f, ordered by k and then by
/// search order. nullopt when f is identically zero.
/// f must be defined over tower.fq(); each F_{q^k} is enumerated, so q^k is
/// checked against the tower's limits.
std::optional<std::vector<LineFactor>> find_linear_factors(const FieldTower& tower, const Cubic& f,
                                                           unsigned max_ext = 3);

/// F_det(L1, L2, L3) with L1 = X xi + Y xi^q + T xi^{q^2} and L2, L3 its
/// Frobenius images. Throws CoefficientNotInSubfield if a coefficient is not in F_q.
Cubic transform_H(const FieldTower& tower, GfElement A, GfElement B, const ExtElement& xi);

/// Number of nonzero (x, y, t) in F_q^3 with f(x, y, t) = 0.
std::uint64_t count_nonzero_fq_zeros(const Cubic& f, unsigned workers = 1);
/// Number of C != 0 in F_{q^3} with det M_{A,B,C} = 0.
std::uint64_t count_det_roots(const FieldTower& tower, GfElement A, GfElement B);

/// "aX^3 + bX^2Y + ..." with coefficients as canonical codes.
std::string to_string(const Cubic& f);

}  // namespace planarq::curves
