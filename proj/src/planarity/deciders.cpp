#include <chrono>
#include <numeric>

#include "planarq/linearized.hpp"
#include "planarq/parallel.hpp"
#include "planarq/planarity.hpp"

namespace planarq::planar {

DetVerdict is_planar_det(const FieldTower& tower, GfElement A, GfElement B, bool want_witness) {
  tower.require_enumerable("determinant sweep");
  for (std::uint64_t c = 1; c < tower.order_top(); ++c) {
    const auto C = tower.fq3_element(c);
    if (lin::det3(lin::dickson_matrix(lin::difference_triple(tower, A, B, C))).is_zero()) {
      return {false, want_witness ? std::optional<ExtElement>(C) : std::nullopt};
    }
  }
  return {true, std::nullopt};
}

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::BZero: return "b_zero";
    case Branch::Cubic: return "cubic";
    case Branch::Square: return "square";
    case Branch::None: break;
  }
  return "none";
}

Branch theorem_branch(GfElement A, GfElement B) {
  const auto& f = A.field();
  const auto one = f.one();
  const auto a3 = A * A * A;
  if (B.is_zero() && !(a3 + one).is_zero()) return Branch::BZero;
  if ((a3 - f.from_int(2) * A * B + one).is_zero() && a3 != one && a3 != -one) return Branch::Cubic;
  if (A == B * B && B * B * B != one) return Branch::Square;
  return Branch::None;
}

PairClass classify_pair(const FieldTower& tower, GfElement A, GfElement B, bool want_witness) {
  const Branch b = theorem_branch(A, B);
  PairClass out{b != Branch::None, b, std::nullopt};
  if (!out.planar && want_witness) out.witness = is_planar_det(tower, A, B, true).witness;
  return out;
}

bool prop1_necessary(GfElement A, GfElement B) {
  const auto& f = A.field();
  return !(f.one() + A * A * A + B * B * B - f.from_int(3) * A * B).is_zero();
}

std::uint64_t count_formula(std::uint64_t q) {
  return 3 * q - 2 - 4 * std::gcd<std::uint64_t>(3, q - 1);
}

Methods Methods::parse(std::string_view list) {
  Methods m;
  while (!list.empty()) {
    const auto comma = list.find(',');
    auto item = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "theorem") {
      m.theorem = true;
    } else if (item == "det") {
      m.det = true;
    } else if (item == "brute") {
      m.brute = true;
    } else {
      throw Error("unknown method '" + std::string(item) + "' (expected theorem, det, brute)");
    }
  }
  if (!m.any()) throw Error("no methods selected");
  return m;
}

std::string Methods::to_string() const {
  std::string s;
  for (auto [on, name] : {std::pair{theorem, "theorem"}, std::pair{det, "det"}, std::pair{brute, "brute"}}) {
    if (!on) continue;
    if (!s.empty()) s += ',';
    s += name;
  }
  return s;
}

namespace {

std::string verdict_word(bool planar) { return planar ? "planar" : "not planar"; }

}  // namespace

ScanReport scan(const FieldTower& tower, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Methods& methods = options.methods;
  if (!methods.any()) throw Error("no methods selected");
  if (methods.det) tower.require_enumerable("determinant sweep");
  if (methods.brute) tower.require_enumerable("brute planarity");

  ScanReport r;
  r.p = tower.p();
  r.m = tower.m();
  r.q = tower.q();
  r.methods = methods;
  r.expected_count = count_formula(tower);
  r.count_asserted = tower.q() > 3;
  r.pairs.resize(std::size_t{r.q} * r.q);

  std::optional<DigitAdder> adder;
  if (methods.brute) adder.emplace(tower.p(), 3 * tower.m());

  parallel_for(r.pairs.size(), options.workers, [&](std::size_t i, unsigned) {
    PairRecord& rec = r.pairs[i];
    rec.A = static_cast<std::uint32_t>(i / r.q);
    rec.B = static_cast<std::uint32_t>(i % r.q);
    const auto A = tower.fq_element(rec.A), B = tower.fq_element(rec.B);
    rec.branch = theorem_branch(A, B);
    rec.prop1 = prop1_necessary(A, B);
    if (methods.theorem) rec.theorem = rec.branch != Branch::None;
    if (methods.det) {
      const auto v = is_planar_det(tower, A, B, options.want_witness);
      rec.det = v.planar;
      if (v.witness) rec.witness = v.witness->code();
    }
    if (methods.brute) rec.brute = brute_is_planar_values(f_table(tower, A, B), *adder);
  });

  std::uint64_t tc = 0, dc = 0, bc = 0;
  for (const auto& rec : r.pairs) {
    tc += rec.theorem.value_or(false);
    dc += rec.det.value_or(false);
    bc += rec.brute.value_or(false);
    if (rec.det && rec.brute && *rec.det != *rec.brute) {
      r.disagreements.push_back({rec.A, rec.B, "det " + verdict_word(*rec.det) + ", brute " + verdict_word(*rec.brute)});
    }
    const std::optional<bool> exact = rec.det ? rec.det : rec.brute;
    if (exact && *exact && !rec.prop1) {
      r.disagreements.push_back({rec.A, rec.B, "planar pair violates 1 + A^3 + B^3 - 3AB != 0"});
    }
    if (rec.theorem && exact && *rec.theorem != *exact) {
      if (*rec.theorem || r.count_asserted) {
        r.disagreements.push_back({rec.A, rec.B, "theorem " + verdict_word(*rec.theorem) + ", exact " + verdict_word(*exact)});
      } else {
        r.converse_gaps.emplace_back(rec.A, rec.B);
      }
    }
  }
  if (methods.theorem) r.theorem_count = tc;
  if (methods.det) r.det_count = dc;
  if (methods.brute) r.brute_count = bc;
  r.planar_count = methods.det ? dc : (methods.brute ? bc : tc);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace planarq::planar
