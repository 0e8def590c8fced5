#include "planarq/families.hpp"

#include <numeric>
#include <sstream>

namespace planarq::families {

namespace {

using gf::checked_pow;
using gf::GaloisField;
using gf::pow_mod;

const std::vector<FamilyInfo> kCatalog = {
    {"T2.1", "x^2", "F_{p^n}", {"p", "n"}, {"p odd prime", "n >= 1"}},
    {"T2.2", "x^{p^k+1}", "F_{p^n}", {"p", "n", "k"},
     {"p odd prime", "n >= 1", "k <= n/2", "n/gcd(k,n) odd"}},
    {"T2.3", "x^10 + x^6 - x^2", "F_{3^n}", {"p", "n"}, {"p = 3", "n >= 5", "n odd"}},
    {"T2.4", "x^10 - x^6 - x^2", "F_{3^n}", {"p", "n"}, {"p = 3", "n >= 5", "n odd"}},
    {"T2.5", "x^{p^s+1} - u^{p^k-1} x^{p^k+p^{2k+s}}", "F_{p^{3k}}", {"p", "k", "s", "u"},
     {"p odd prime", "k >= 1", "gcd(k,3) = 1", "k = s (mod 3)", "s != k", "k/gcd(k,s) odd", "u primitive"}},
    {"T2.6", "x^{(3^k+1)/2}", "F_{3^n}", {"p", "n", "k"},
     {"p = 3", "n >= 1", "k >= 3", "k odd", "gcd(k,n) = 1"}},
    {"T3.1", "x^{p^s+1} - v x^{p^{2k}+p^{k+s}}", "F_{p^{3k}}", {"p", "k", "s", "v"},
     {"p odd prime", "k >= 1", "k/gcd(k,s) odd", "ord(v) = p^{2k}+p^k+1",
      "3 | (s/gcd(k,s) + k/gcd(k,s)) or p^k = p^s = 1 (mod 3)"}},
    {"T3.2", "x^{p^s+1} - v x^{p^{3k}+p^{k+s}}", "F_{p^{4k}}", {"p", "k", "s", "v"},
     {"p odd prime", "k >= 1", "2k/gcd(2k,s) odd", "ord(v) = p^{3k}+p^{2k}+p^k+1",
      "3 | (s/gcd(k,s) + k/gcd(k,s)) or p^k = p^s = 1 (mod 4)"}},
    {"T3.3", "x^{p^m+1} + omega beta x^{p^s+1} + omega beta^{p^m} x^{p^m(p^s+1)}", "F_{p^{2m}}",
     {"p", "m", "s", "omega", "beta"},
     {"p odd prime", "m >= 1", "omega + omega^{p^m} = 0", "s > 0",
      "beta^{(p^{2m}-1)/gcd(p^m+1,p^s+1)} != 1", "{a != 0 : a^{p^m} = -a = a^{p^s}} is empty"}},
    {"T3.4", "x^2 + x^{2q^m} + G(x^{q^2+1}), G(x) = h(x - x^{q^m}), q = p^e, m = 2k+1", "F_{q^{2m}}",
     {"p", "e", "k"}, {"p odd prime", "e >= 1"}},
    {"T3.5", "x^2 + x^90", "F_{3^5}", {}, {"p = 3", "n = 5"}},
};

bool odd_prime(std::uint32_t p) { return p != 2 && gf::is_prime(p); }

std::uint32_t get(const std::optional<std::uint32_t>& v, const char* name) {
  if (!v) throw Error(std::string("missing parameter ") + name);
  return *v;
}

FamilySpec with_defaults(const FamilySpec& spec) {
  const FamilySpec d = default_spec(spec.id);
  FamilySpec r = spec;
  for (auto [dst, src] : {std::pair{&r.p, &d.p}, std::pair{&r.n, &d.n}, std::pair{&r.m, &d.m},
                          std::pair{&r.k, &d.k}, std::pair{&r.s, &d.s}, std::pair{&r.e, &d.e}}) {
    if (!*dst && *src) *dst = *src;
  }
  return r;
}

// Positive exponents modulo x^N - x, given their residue modulo N - 1.
std::uint64_t as_exponent(std::uint64_t residue, std::uint64_t n_minus_1) {
  residue %= n_minus_1;
  return residue == 0 ? n_minus_1 : residue;
}

std::uint64_t target_order(const FamilySpec& s) {
  const std::uint64_t p = *s.p, k = *s.k;
  if (s.id == "T3.1") return checked_pow(p, 2 * k) + checked_pow(p, k) + 1;
  return checked_pow(p, 3 * k) + checked_pow(p, 2 * k) + checked_pow(p, k) + 1;
}

// (p^{2m} - 1) / gcd(p^m + 1, p^s + 1)
std::uint64_t beta_exponent(const FamilySpec& s) {
  const std::uint64_t pm1 = checked_pow(*s.p, *s.m) + 1;
  const std::uint64_t g = std::gcd(pm1, (pow_mod(*s.p, *s.s, pm1) + 1) % pm1);
  return (checked_pow(*s.p, 2 * *s.m) - 1) / g;
}

bool omega_ok(const GaloisField& f, std::uint32_t w, const FamilySpec& s) {
  const auto x = f.element(w);
  return (x + x.pow(checked_pow(*s.p, *s.m))).is_zero();
}

std::optional<std::uint32_t> first_code(const GaloisField& f, auto&& pred) {
  for (std::uint32_t c = 1; c < f.order(); ++c) {
    if (pred(c)) return c;
  }
  return std::nullopt;
}

void check_field(const FamilySpec& spec, const GaloisField& field) {
  const auto [p, d] = ambient(spec);
  if (field.characteristic() != p || field.degree() != d) {
    throw FieldMismatch(spec.id + " lives in F_" + std::to_string(p) + "^" + std::to_string(d) + ", not " +
                        field.describe());
  }
}

std::vector<std::string> violations_in(const FamilySpec& s, const GaloisField* field) {
  std::vector<std::string> out;
  const auto need = [&](bool ok, const char* name) {
    if (!ok) out.emplace_back(name);
  };
  const std::string& id = s.id;
  const std::uint32_t p = get(s.p, "p");
  if (id == "T2.3" || id == "T2.4" || id == "T2.6" || id == "T3.5") {
    need(p == 3, "p = 3");
  } else {
    need(odd_prime(p), "p odd prime");
  }
  if (!odd_prime(p)) return out;

  const std::uint64_t N = field ? field->order() : 0;
  if (id == "T2.1") {
    need(get(s.n, "n") >= 1, "n >= 1");
  } else if (id == "T2.2") {
    const std::uint32_t n = get(s.n, "n"), k = get(s.k, "k");
    need(n >= 1, "n >= 1");
    need(2 * k <= n, "k <= n/2");
    need(n >= 1 && (n / std::gcd(k, n)) % 2 == 1, "n/gcd(k,n) odd");
  } else if (id == "T2.3" || id == "T2.4") {
    const std::uint32_t n = get(s.n, "n");
    need(n >= 5, "n >= 5");
    need(n % 2 == 1, "n odd");
  } else if (id == "T2.5") {
    const std::uint32_t k = get(s.k, "k"), sv = get(s.s, "s");
    need(k >= 1, "k >= 1");
    need(std::gcd(k, 3u) == 1, "gcd(k,3) = 1");
    need(k % 3 == sv % 3, "k = s (mod 3)");
    need(sv != k, "s != k");
    need(k >= 1 && (k / std::gcd(k, sv)) % 2 == 1, "k/gcd(k,s) odd");
    need(field && s.u && *s.u != 0 && *s.u < N && gf::multiplicative_order(field->element(*s.u)) == N - 1,
         "u primitive");
  } else if (id == "T2.6") {
    const std::uint32_t n = get(s.n, "n"), k = get(s.k, "k");
    need(n >= 1, "n >= 1");
    need(k >= 3, "k >= 3");
    need(k % 2 == 1, "k odd");
    need(std::gcd(k, n) == 1, "gcd(k,n) = 1");
  } else if (id == "T3.1" || id == "T3.2") {
    const std::uint32_t k = get(s.k, "k"), sv = get(s.s, "s");
    need(k >= 1, "k >= 1");
    if (k == 0) return out;
    const bool t31 = id == "T3.1";
    if (t31) {
      need((k / std::gcd(k, sv)) % 2 == 1, "k/gcd(k,s) odd");
    } else {
      need((2 * k / std::gcd(2 * k, sv)) % 2 == 1, "2k/gcd(2k,s) odd");
    }
    const std::uint64_t ord = target_order(s);
    need(field && s.v && *s.v != 0 && *s.v < N && gf::multiplicative_order(field->element(*s.v)) == ord,
         t31 ? "ord(v) = p^{2k}+p^k+1" : "ord(v) = p^{3k}+p^{2k}+p^k+1");
    const std::uint32_t g = std::gcd(k, sv);
    const std::uint64_t mod = t31 ? 3 : 4;
    const bool either = (sv / g + k / g) % 3 == 0 || (pow_mod(p, k, mod) == 1 % mod && pow_mod(p, sv, mod) == 1 % mod);
    need(either, t31 ? "3 | (s/gcd(k,s) + k/gcd(k,s)) or p^k = p^s = 1 (mod 3)"
                     : "3 | (s/gcd(k,s) + k/gcd(k,s)) or p^k = p^s = 1 (mod 4)");
  } else if (id == "T3.3") {
    const std::uint32_t m = get(s.m, "m"), sv = get(s.s, "s");
    need(m >= 1, "m >= 1");
    if (m == 0) return out;
    need(field && s.omega && *s.omega < N && omega_ok(*field, *s.omega, s), "omega + omega^{p^m} = 0");
    need(sv > 0, "s > 0");
    need(field && s.beta && *s.beta < N && field->element(*s.beta).pow(beta_exponent(s)) != field->one(),
         "beta^{(p^{2m}-1)/gcd(p^m+1,p^s+1)} != 1");
    bool empty = field != nullptr;
    if (field) {
      const std::uint64_t pm = pow_mod(p, m, N - 1), ps = pow_mod(p, sv, N - 1);
      for (std::uint32_t c = 1; c < N && empty; ++c) {
        const auto a = field->element(c);
        empty = !(a.pow(pm) == -a && -a == a.pow(ps));
      }
    }
    need(empty, "{a != 0 : a^{p^m} = -a = a^{p^s}} is empty");
  } else if (id == "T3.4") {
    need(get(s.e, "e") >= 1, "e >= 1");
  } else if (id == "T3.5") {
    need(get(s.n, "n") == 5, "n = 5");
  }
  return out;
}

}  // namespace

const std::vector<FamilyInfo>& catalog() { return kCatalog; }

const FamilyInfo& family_info(std::string_view id) {
  for (const auto& f : kCatalog) {
    if (f.id == id) return f;
  }
  throw Error("unknown family '" + std::string(id) + "'");
}

FamilySpec default_spec(std::string_view id) {
  family_info(id);
  FamilySpec s;
  s.id = std::string(id);
  s.p = 3;
  if (id == "T2.1" || id == "T2.3" || id == "T2.4" || id == "T3.5") {
    s.n = 5;
  } else if (id == "T2.2") {
    s.n = 5;
    s.k = 1;
  } else if (id == "T2.5") {
    s.k = 1;
    s.s = 4;
  } else if (id == "T2.6") {
    s.k = 3;
    s.n = 5;
  } else if (id == "T3.1" || id == "T3.2") {
    s.k = 1;
    s.s = 2;
  } else if (id == "T3.3") {
    s.m = 1;
    s.s = 2;
  } else if (id == "T3.4") {
    s.e = 1;
    s.k = 1;
  }
  return s;
}

std::pair<std::uint32_t, unsigned> ambient(const FamilySpec& spec) {
  const FamilySpec s = with_defaults(spec);
  const std::uint32_t p = get(s.p, "p");
  const std::string& id = s.id;
  if (id == "T2.5" || id == "T3.1") return {p, 3 * get(s.k, "k")};
  if (id == "T3.2") return {p, 4 * get(s.k, "k")};
  if (id == "T3.3") return {p, 2 * get(s.m, "m")};
  if (id == "T3.4") return {p, 2 * get(s.e, "e") * (2 * get(s.k, "k") + 1)};
  if (id == "T3.5") return {3, 5};
  return {p, get(s.n, "n")};
}

FamilySpec resolve(const FamilySpec& spec, const GaloisField& field) {
  // Unset integer parameters are read off the field where it determines them.
  FamilySpec s = spec;
  const unsigned d = field.degree();
  if (!s.p) s.p = field.characteristic();
  const std::string& id = s.id;
  if (id == "T2.1" || id == "T2.2" || id == "T2.3" || id == "T2.4" || id == "T2.6") {
    if (!s.n) s.n = d;
  } else if ((id == "T2.5" || id == "T3.1") && !s.k && d % 3 == 0) {
    s.k = d / 3;
  } else if (id == "T3.2" && !s.k && d % 4 == 0) {
    s.k = d / 4;
  } else if (id == "T3.3" && !s.m && d % 2 == 0) {
    s.m = d / 2;
  }
  s = with_defaults(s);
  check_field(s, field);
  const std::uint64_t N = field.order();
  if (s.id == "T2.5" && !s.u) {
    s.u = first_code(field, [&](std::uint32_t c) { return gf::multiplicative_order(field.element(c)) == N - 1; });
  }
  if ((s.id == "T3.1" || s.id == "T3.2") && !s.v && *s.k >= 1) {
    const std::uint64_t ord = target_order(s);
    if ((N - 1) % ord == 0) {
      s.v = first_code(field, [&](std::uint32_t c) { return gf::multiplicative_order(field.element(c)) == ord; });
    }
  }
  if (s.id == "T3.3" && *s.m >= 1) {
    if (!s.omega) s.omega = first_code(field, [&](std::uint32_t c) { return omega_ok(field, c, s); });
    if (!s.beta) {
      const std::uint64_t e = beta_exponent(s);
      s.beta = first_code(field, [&](std::uint32_t c) { return field.element(c).pow(e) != field.one(); });
    }
  }
  return s;
}

std::vector<std::string> validate_family(const FamilySpec& spec) {
  const FamilySpec s = with_defaults(spec);
  if (!odd_prime(get(s.p, "p"))) return violations_in(s, nullptr);
  const auto [p, d] = ambient(s);
  if (d == 0) return violations_in(s, nullptr);
  const auto field = GaloisField::create(p, d);
  return violations_in(resolve(s, *field), field.get());
}

Poly instantiate_family(const FamilySpec& spec, const GaloisField& field) {
  const FamilySpec s = resolve(spec, field);
  const auto bad = violations_in(s, &field);
  if (!bad.empty()) {
    std::string msg = s.id + " parameters violate:";
    for (const auto& b : bad) msg += " [" + b + "]";
    throw ValidationFailed(msg);
  }
  const std::uint64_t N = field.order(), n1 = N - 1;
  const std::uint64_t p = *s.p;
  const auto P = [&](std::uint64_t j) { return pow_mod(p, j, n1); };  // p^j mod N-1
  const auto E = [&](std::uint64_t residue) { return as_exponent(residue, n1); };
  const auto one = field.one();
  Poly f(field);
  const std::string& id = s.id;
  if (id == "T2.1") {
    f.add_term(2, one);
  } else if (id == "T2.2") {
    f.add_term(E(P(*s.k) + 1), one);
  } else if (id == "T2.3" || id == "T2.4") {
    f.add_term(10, one).add_term(6, id == "T2.3" ? one : -one).add_term(2, -one);
  } else if (id == "T2.5") {
    const std::uint64_t k = *s.k, sv = *s.s;
    const auto coeff = field.element(*s.u).pow((P(k) + n1 - 1) % n1);
    f.add_term(E(P(sv) + 1), one).add_term(E(P(k) + P(2 * k + sv)), -coeff);
  } else if (id == "T2.6") {
    f.add_term((checked_pow(3, *s.k) + 1) / 2, one);
  } else if (id == "T3.1" || id == "T3.2") {
    const std::uint64_t k = *s.k, sv = *s.s;
    const std::uint64_t lead = id == "T3.1" ? 2 * k : 3 * k;
    f.add_term(E(P(sv) + 1), one).add_term(E(P(lead) + P(k + sv)), -field.element(*s.v));
  } else if (id == "T3.3") {
    const std::uint64_t m = *s.m, sv = *s.s;
    const auto w = field.element(*s.omega), b = field.element(*s.beta);
    f.add_term(E(P(m) + 1), one);
    f.add_term(E(P(sv) + 1), w * b);
    f.add_term(E(P(m) * (P(sv) + 1) % n1), w * b.pow(P(m)));
  } else if (id == "T3.4") {
    // G(x^{q^2+1}) = sum_{t=0}^{2k} (x^{q^{t+2}+q^t} - x^{q^{t+m+2}+q^{t+m}}), q = p^e
    const std::uint64_t e = *s.e, m = 2 * *s.k + 1;
    const auto Q = [&](std::uint64_t j) { return P(e * j); };
    f.add_term(2, one).add_term(E(2 * Q(m)), one);
    for (std::uint64_t t = 0; t <= 2 * *s.k; ++t) {
      f.add_term(E(Q(t + 2) + Q(t)), one);
      f.add_term(E(Q(t + m + 2) + Q(t + m)), -one);
    }
  } else if (id == "T3.5") {
    f.add_term(2, one).add_term(90, one);
  }
  return f;
}

bool brute_check_family(const FamilySpec& spec, const GaloisField& field, const gf::SizeLimits& limits) {
  return planar::brute_is_planar(instantiate_family(spec, field), limits);
}

std::string FamilyCheck::status() const {
  if (!violations.empty()) return "invalid";
  if (!planar) return "not desk-verifiable";
  if (flagged) return "flagged: validates but is not planar";
  return "planar";
}

FamilyCheck check_family(const FamilySpec& spec, std::uint64_t brute_budget) {
  FamilyCheck out;
  out.spec = with_defaults(spec);
  const auto [p, d] = ambient(out.spec);
  out.field = "F_" + std::to_string(p) + "^" + std::to_string(d);
  if (!odd_prime(p) || d == 0) {
    out.violations = violations_in(out.spec, nullptr);
    return out;
  }
  out.order = checked_pow(p, d);
  if (out.order > GaloisField::kMaxOrder) {
    out.violations = violations_in(out.spec, nullptr);
    return out;
  }
  const auto field = GaloisField::create(p, d);
  out.field = field->describe();
  out.spec = resolve(out.spec, *field);
  out.violations = violations_in(out.spec, field.get());
  if (!out.violations.empty()) return out;
  const Poly f = instantiate_family(out.spec, *field);
  out.polynomial = to_string(f);
  out.desk_verifiable = out.order <= brute_budget;
  if (out.desk_verifiable) {
    out.planar = planar::brute_is_planar(f, gf::SizeLimits{brute_budget});
    out.flagged = !*out.planar;
  }
  return out;
}

std::string to_string(const Poly& f) {
  if (f.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative_one = c == -f.field().one();
    if (!first) os << (negative_one ? " - " : " + ");
    else if (negative_one) os << "-";
    first = false;
    if (c != f.field().one() && !negative_one) os << c.code() << "*";
    os << "x^" << e;
  }
  return os.str();
}

}  // namespace planarq::families
