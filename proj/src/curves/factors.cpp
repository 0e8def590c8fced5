#include "planarq/curves.hpp"

namespace planarq::curves {

std::string_view relabel_name(Relabel r) { return r == Relabel::Identity ? "identity" : "swap_xy"; }

bool FactorReport::passed() const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Failed) return false;
    any |= c.status == CheckStatus::Passed;
  }
  return any;
}

namespace {

struct Verifier {
  const FieldTower& tower;
  const gf::GaloisField& k;
  Cubic F;

  GfElement n(int v) const { return k.from_int(v); }

  bool divides_as(Relabel r, GfElement u, GfElement v, GfElement w) const {
    return r == Relabel::Identity ? line_divides(F, u, v, w) : line_divides(F, v, u, w);
  }

  FactorCheck divides(std::string item, std::string line, GfElement u, GfElement v, GfElement w) const {
    FactorCheck c{std::move(item), "divides", std::move(line)};
    for (Relabel r : {Relabel::Identity, Relabel::SwapXY}) {
      if (divides_as(r, u, v, w)) {
        c.status = CheckStatus::Passed;
        c.relabel = r;
        return c;
      }
    }
    return c;
  }

  FactorCheck product(std::string item, std::string line, const Cubic& P) const {
    FactorCheck c{std::move(item), "product", std::move(line)};
    for (Relabel r : {Relabel::Identity, Relabel::SwapXY}) {
      const Cubic Q = r == Relabel::Identity ? P : swap_xy(P);
      std::size_t lead = 0;
      while (lead < Q.coeffs().size() && Q.coeffs()[lead].is_zero()) ++lead;
      if (lead == Q.coeffs().size()) continue;
      const auto lambda = F.coeffs()[lead] / Q.coeffs()[lead];
      if (lambda * Q == F) {
        c.status = CheckStatus::Passed;
        c.relabel = r;
        c.lambda = lambda;
        if (lambda.is_zero()) c.note = "cubic vanishes identically";
        return c;
      }
    }
    return c;
  }

  // 2X - Y - T + alpha (Y - T), for both square roots of -3.
  FactorCheck alpha_line(std::string item) const {
    const std::string line = "2X - Y - T + alpha(Y - T)";
    const auto root = gf::sqrt_in_fq(n(-3));
    if (!root) {
      FactorCheck c{std::move(item), "divides", line, CheckStatus::SqrtUnavailable};
      c.note = "-3 is not a square in F_q";
      return c;
    }
    FactorCheck c{std::move(item), "divides", line};
    for (Relabel r : {Relabel::Identity, Relabel::SwapXY}) {
      for (const auto alpha : {*root, -*root}) {
        if (divides_as(r, n(2), alpha - n(1), -n(1) - alpha)) {
          c.status = CheckStatus::Passed;
          c.relabel = r;
          c.alpha = alpha;
          return c;
        }
      }
    }
    return c;
  }
};

}  // namespace

FactorReport verify_branch_factorization(const FieldTower& tower, GfElement A, GfElement B) {
  const auto& k = tower.fq();
  const Verifier v{tower, k, build_F_det(tower, A, B)};
  const auto n = [&](int x) { return k.from_int(x); };
  const auto one = k.one(), zero = k.zero();
  const auto a2 = A * A, b2 = B * B, a3 = a2 * A;
  const auto lin = [&](GfElement x, GfElement y, GfElement t) { return Cubic::linear(k, x, y, t); };

  FactorReport report;
  const auto minus_half = -(one / n(2));
  if ((A - n(2) * B + one).is_zero() || (A == one && (B == one || B == minus_half))) {
    report.checks.push_back(v.divides("trace_line", "X + Y + T", one, one, one));
  }
  if ((a3 - n(2) * A * B + one).is_zero() && !(a3 + one).is_zero()) {
    const auto P = lin(A, one, a2) * lin(one, a2, A) * lin(a2, A, one);
    report.checks.push_back(v.product("cubic_product", "(A^2T + AX + Y)(A^2Y + AT + X)(A^2X + AY + T)", P));
  }
  if (A == b2) {
    const auto P = lin(one, B, b2) * lin(B, b2, one) * lin(b2, one, B);
    report.checks.push_back(v.product("square_product", "(B^2T + BY + X)(B^2Y + BX + T)(B^2X + BT + Y)", P));
  }
  if ((a2 + n(2) * A * B - A + n(4) * b2 + n(2) * B + one).is_zero()) {
    report.checks.push_back(v.alpha_line("alpha_line"));
  }
  if ((a2 + A + one).is_zero() && (B == a2 || B == -(a2 / n(2)))) {
    report.checks.push_back(v.alpha_line("alpha_line_cyclotomic"));
  }
  if (B.is_zero()) {
    report.checks.push_back(v.product("b_zero_product", "XYT", lin(one, zero, zero) * lin(zero, one, zero) *
                                                                  lin(zero, zero, one)));
  }
  if (A.is_zero() && (n(8) * b2 * B - one).is_zero()) {
    auto c = v.divides("a_zero_line", "2BX + 4B^2Y + T", n(2) * B, n(4) * b2, one);
    c.note = "locus 8B^3 = 1";
    report.checks.push_back(std::move(c));
  }

  if (report.checks.empty()) throw NotOnLocus("(A, B) lies on no factorization locus");
  bool all_sqrt = true;
  for (const auto& c : report.checks) all_sqrt &= c.status == CheckStatus::SqrtUnavailable;
  if (all_sqrt) throw SquareRootUnavailable("every applicable claim needs a square root of -3");
  return report;
}

namespace {

using UPoly = std::vector<ExtElement>;  // low-to-high; empty is zero

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly rem(UPoly a, const UPoly& b) {
  trim(a);
  const auto lead_inv = b.back().inv();
  while (a.size() >= b.size()) {
    const auto c = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - c * b[j];
    trim(a);
  }
  return a;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Common roots in K of every polynomial in the list, in code order.
std::vector<ExtElement> common_roots(const std::vector<UPoly>& polys, const gf::ExtensionField& K) {
  UPoly g;
  for (const auto& p : polys) g = gcd(g, p);
  std::vector<ExtElement> out;
  if (g.size() == 1) return out;
  for (std::uint64_t c = 0; c < K.order(); ++c) {
    const auto x = K.element(c);
    ExtElement acc = K.zero();
    for (std::size_t i = g.size(); i-- > 0;) acc = acc * x + g[i];
    if (acc.is_zero()) out.push_back(x);
  }
  return out;
}

LineFactor normalized(unsigned degree, const std::shared_ptr<const gf::ExtensionField>& K, ExtElement u,
                      ExtElement v, ExtElement w) {
  const ExtElement lead = !u.is_zero() ? u : (!v.is_zero() ? v : w);
  const auto s = lead.inv();
  return {degree, K, s * u, s * v, s * w};
}

}  // namespace

std::optional<std::vector<LineFactor>> find_linear_factors(const FieldTower& tower, const Cubic& f,
                                                           unsigned max_ext) {
  if (&f.field() != &tower.fq()) throw FieldMismatch("cubic is not defined over the tower's F_q");
  if (f.degree() != 3) throw Error("find_linear_factors expects a cubic");
  if (max_ext < 1 || max_ext > 3) throw Error("max_ext must be 1, 2 or 3");
  if (f.is_zero()) return std::nullopt;

  std::vector<LineFactor> out;
  for (unsigned deg = 1; deg <= max_ext; ++deg) {
    tower.limits().require(gf::checked_pow(tower.q(), deg), "line search");
    const auto K = deg == 3 ? tower.fq3_ptr() : gf::ExtensionField::create(tower.fq_ptr(), deg);
    const auto P = f.map_coeffs(*K, [&](const GfElement& c) { return K->embed(c); });
    std::vector<std::pair<std::array<unsigned, 3>, ExtElement>> terms;
    for (std::size_t i = 0; i < P.coeffs().size(); ++i) {
      if (!P.coeffs()[i].is_zero()) terms.emplace_back(Cubic::monomial(i, 3), P.coeffs()[i]);
    }
    const auto keep = [&](const LineFactor& l) {
      return deg == 1 || !(l.u.in_base_field() && l.v.in_base_field() && l.w.in_base_field());
    };
    const auto binom = [&](unsigned j, unsigned l) {
      static const int table[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
      return K->from_int(table[j][l]);
    };

    // Y = aX + bT: coefficient of X^n T^{3-n} as a polynomial in b.
    for (std::uint64_t ac = 0; ac < K->order(); ++ac) {
      const auto a = K->element(ac);
      std::array<ExtElement, 4> apow{K->one(), a, a * a, a * a * a};
      std::vector<UPoly> g(4, UPoly(4, K->zero()));
      for (const auto& [e, c] : terms) {
        for (unsigned l = 0; l <= e[1]; ++l) {
          auto& slot = g[e[0] + l][e[1] - l];
          slot = slot + c * binom(e[1], l) * apow[l];
        }
      }
      for (const auto& b : common_roots(g, *K)) {
        const auto line = normalized(deg, K, a, -K->one(), b);
        if (keep(line)) out.push_back(line);
      }
    }
    // X = cT: coefficient of Y^j T^{3-j} as a polynomial in c.
    {
      std::vector<UPoly> h(4, UPoly(4, K->zero()));
      for (const auto& [e, c] : terms) h[e[1]][e[0]] = h[e[1]][e[0]] + c;
      for (const auto& c : common_roots(h, *K)) {
        const auto line = normalized(deg, K, K->one(), K->zero(), -c);
        if (keep(line)) out.push_back(line);
      }
    }
    if (deg == 1) {
      bool t_divides = true;
      for (const auto& [e, c] : terms) t_divides &= e[2] != 0;
      if (t_divides) out.push_back(normalized(1, K, K->zero(), K->zero(), K->one()));
    }
  }
  return out;
}

}  // namespace planarq::curves
