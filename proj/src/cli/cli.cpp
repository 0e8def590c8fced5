#include "planarq/cli.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "planarq/curves.hpp"
#include "planarq/linearized.hpp"
#include "planarq/planarity.hpp"

namespace planarq::cli {

namespace {

using json = nlohmann::ordered_json;
using gf::ExtElement;
using gf::FieldTower;
using gf::GfElement;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string timing(std::string_view what, double seconds) {
  std::ostringstream os;
  os << what << ": " << seconds << " s\n";
  return os.str();
}

FieldTower make_tower(const RunConfig& c) {
  const std::uint32_t p = c.p.value_or(5);
  if (c.mid_modulus.empty() && c.top_modulus.empty()) return FieldTower::build(p, c.m.value_or(1));
  std::vector<std::uint32_t> mid = c.mid_modulus;
  if (mid.empty()) {
    if (c.m.value_or(1) != 1) throw Error("--top-modulus with m > 1 needs --mid-modulus");
    mid = {0, 1};
  }
  if (c.m && *c.m + 1 != mid.size()) throw Error("--m disagrees with the degree of --mid-modulus");
  std::vector<std::uint32_t> top = c.top_modulus;
  if (top.empty()) top = gf::find_irreducible(*gf::GaloisField::create(p, mid), 3);
  return FieldTower::build(p, std::move(mid), std::move(top));
}

GfElement decode_fq(const FieldTower& t, const std::optional<std::uint64_t>& code, const char* name) {
  if (!code) throw Error(std::string("--") + name + " is required");
  if (*code >= t.q()) {
    throw Error(std::string(name) + " = " + std::to_string(*code) + " is not a code of F_" + std::to_string(t.q()));
  }
  return t.fq_element(static_cast<std::uint32_t>(*code));
}

json element_json(const ExtElement& e) {
  const auto& c = e.coords();
  return {{"code", e.code()}, {"coords", {c[0], c[1], c[2]}}};
}

json witness_json(const FieldTower& t, const std::optional<std::uint64_t>& code) {
  if (!code) return nullptr;
  return element_json(t.fq3_element(*code));
}

json opt_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

json meta_json(const RunConfig& c, const FieldTower& t) {
  return {{"p", t.p()}, {"m", t.m()}, {"q", t.q()}, {"seed", c.seed}, {"version", kVersion}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_bool(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

std::string_view status_name(curves::CheckStatus s) {
  switch (s) {
    case curves::CheckStatus::Passed:
      return "passed";
    case curves::CheckStatus::Failed:
      return "failed";
    case curves::CheckStatus::SqrtUnavailable:
      return "sqrt_unavailable";
  }
  return "failed";
}

}  // namespace

std::vector<std::uint32_t> parse_coefficients(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error("bad coefficient list '" + text + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw Error("empty coefficient list");
  return out;
}

Outcome cmd_scan(const RunConfig& c) {
  const auto tower = make_tower(c);
  planar::ScanOptions opt;
  opt.methods = planar::Methods::parse(c.methods);
  if (!opt.methods.any()) throw Error("--methods selects nothing");
  opt.workers = c.workers;
  const auto r = planar::scan(tower, opt);

  Outcome out;
  out.exit_code = r.ok() ? kPass : kDisagreement;
  out.diagnostics = timing("scan", r.elapsed_seconds);
  if (c.format == Format::Csv) {
    std::ostringstream os;
    os << "A,B,theorem,det,brute,branch,prop1,witness\n";
    for (const auto& pr : r.pairs) {
      os << pr.A << ',' << pr.B << ',' << csv_bool(pr.theorem) << ',' << csv_bool(pr.det) << ','
         << csv_bool(pr.brute) << ',' << planar::branch_name(pr.branch) << ',' << (pr.prop1 ? "true" : "false")
         << ',' << (pr.witness ? std::to_string(*pr.witness) : "") << '\n';
    }
    out.report = os.str();
    return out;
  }
  json meta = meta_json(c, tower);
  meta["methods"] = r.methods.to_string();
  json pairs = json::array();
  for (const auto& pr : r.pairs) {
    pairs.push_back({{"A", pr.A},
                     {"B", pr.B},
                     {"verdicts", {{"theorem", opt_json(pr.theorem)}, {"det", opt_json(pr.det)}, {"brute", opt_json(pr.brute)}}},
                     {"branch", planar::branch_name(pr.branch)},
                     {"prop1", pr.prop1},
                     {"witness", witness_json(tower, pr.witness)}});
  }
  json dis = json::array();
  for (const auto& d : r.disagreements) dis.push_back({{"A", d.A}, {"B", d.B}, {"detail", d.detail}});
  json gaps = json::array();
  for (const auto& [a, b] : r.converse_gaps) gaps.push_back({{"A", a}, {"B", b}});
  const auto count = [](const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); };
  json summary = {{"planar_count", r.planar_count},
                  {"expected_count", r.expected_count},
                  {"count_asserted", r.count_asserted},
                  {"counts", {{"theorem", count(r.theorem_count)}, {"det", count(r.det_count)}, {"brute", count(r.brute_count)}}},
                  {"disagreements", dis},
                  {"converse_gaps", gaps},
                  {"ok", r.ok()}};
  out.report = dump({{"meta", meta}, {"pairs", pairs}, {"summary", summary}});
  return out;
}

Outcome cmd_verify(const RunConfig& c) {
  const Stopwatch sw;
  const auto tower = make_tower(c);
  const GfElement A = decode_fq(tower, c.A, "A"), B = decode_fq(tower, c.B, "B");
  std::optional<ExtElement> C;
  if (c.C) {
    if (*c.C == 0 || *c.C >= tower.order_top()) throw Error("C must be a nonzero code of F_{q^3}");
    C = tower.fq3_element(*c.C);
  }
  std::vector<std::string> inconsistent;
  const auto expect = [&](bool ok, const char* what) {
    if (!ok) inconsistent.emplace_back(what);
  };

  const auto cls = planar::classify_pair(tower, A, B);
  const bool prop1 = planar::prop1_necessary(A, B);
  const auto det = planar::is_planar_det(tower, A, B, true);
  std::optional<bool> brute;
  if (tower.order_top() <= c.budget) brute = planar::brute_is_planar_ab(tower, A, B);
  expect(cls.planar == det.planar, "classification agrees with the determinant sweep");
  expect(!brute || *brute == det.planar, "brute force agrees with the determinant sweep");
  expect(!cls.planar || prop1, "planar pairs satisfy the necessary condition");

  const auto F = curves::build_F_det(tower, A, B);
  expect(F == curves::build_F_det_closed(tower, A, B), "symbolic and closed-form cubics agree");

  json fact = {{"status", "checked"}, {"passed", nullptr}, {"checks", json::array()}};
  try {
    const auto rep = curves::verify_branch_factorization(tower, A, B);
    fact["passed"] = rep.passed();
    for (const auto& ch : rep.checks) {
      fact["checks"].push_back({{"item", ch.item},
                                {"claim", ch.claim},
                                {"line", ch.line},
                                {"status", status_name(ch.status)},
                                {"relabel", ch.relabel ? json(curves::relabel_name(*ch.relabel)) : json(nullptr)},
                                {"alpha", ch.alpha ? json(ch.alpha->code()) : json(nullptr)},
                                {"lambda", ch.lambda ? json(ch.lambda->code()) : json(nullptr)},
                                {"note", ch.note}});
    }
    expect(rep.passed(), "factorization claims hold");
  } catch (const NotOnLocus&) {
    fact["status"] = "not_on_locus";
  } catch (const SquareRootUnavailable&) {
    fact["status"] = "sqrt_unavailable";
  }

  json lines = nullptr;
  if (const auto lf = curves::find_linear_factors(tower, F)) {
    lines = json::array();
    for (const auto& l : *lf) {
      lines.push_back({{"degree", l.degree}, {"u", l.u.code()}, {"v", l.v.code()}, {"w", l.w.code()}});
    }
  }
  const auto H = curves::transform_H(tower, A, B, tower.normal_element());
  const std::uint64_t h_zeros = curves::count_nonzero_fq_zeros(H, c.workers);
  const std::uint64_t roots = curves::count_det_roots(tower, A, B);
  expect(h_zeros == roots, "zeros of H match roots of the determinant");
  expect(det.planar == (roots == 0), "planar exactly when the determinant has no roots");

  json at_c = nullptr;
  if (C) {
    const auto chk = curves::check_det_identity(tower, A, B, *C);
    expect(chk.passed(), "determinant identity at C");
    at_c = {{"C", element_json(*C)},
            {"det", element_json(chk.det)},
            {"form_value", element_json(chk.form_value)},
            {"identity_holds", chk.passed()}};
  }

  Outcome out;
  out.exit_code = inconsistent.empty() ? kPass : kDisagreement;
  out.diagnostics = timing("verify", sw.seconds());
  const json pair = {{"A", A.code()}, {"B", B.code()}};
  if (c.format == Format::Csv) {
    std::ostringstream os;
    os << "key,value\n"
       << "A," << A.code() << "\nB," << B.code() << "\nplanar," << (cls.planar ? "true" : "false")
       << "\nbranch," << planar::branch_name(cls.branch) << "\nprop1," << (prop1 ? "true" : "false")
       << "\ndet_planar," << (det.planar ? "true" : "false")
       << "\nwitness," << (det.witness ? std::to_string(det.witness->code()) : "")
       << "\nbrute," << csv_bool(brute) << "\nfactorization," << fact["status"].get<std::string>()
       << "\nlinear_factors," << (lines.is_null() ? std::string("zero_form") : std::to_string(lines.size()))
       << "\nh_zeros," << h_zeros << "\ndet_roots," << roots << "\nconsistent,"
       << (inconsistent.empty() ? "true" : "false") << "\n";
    out.report = os.str();
    return out;
  }
  out.report = dump({{"meta", meta_json(c, tower)},
                     {"pair", pair},
                     {"classification", {{"planar", cls.planar}, {"branch", planar::branch_name(cls.branch)}}},
                     {"prop1_necessary", prop1},
                     {"det", {{"planar", det.planar}, {"witness", det.witness ? element_json(*det.witness) : json(nullptr)}}},
                     {"brute", opt_json(brute)},
                     {"cubic", curves::to_string(F)},
                     {"factorization", fact},
                     {"linear_factors", lines},
                     {"points", {{"h_zeros", h_zeros}, {"det_roots", roots}}},
                     {"at_C", at_c},
                     {"inconsistencies", inconsistent}});
  return out;
}

Outcome cmd_identities(const RunConfig& c) {
  const Stopwatch sw;
  const auto tower = make_tower(c);
  if (!c.fault.empty() && c.fault != "det-sign") throw Error("unknown fault '" + c.fault + "'");
  const bool flip = c.fault == "det-sign";
  const std::uint64_t q = tower.q(), N = tower.order_top();
  tower.require_enumerable("identity batteries");

  struct Battery {
    std::string name;
    std::uint64_t runs = 0, failures = 0;
    json first_failure = nullptr;
  };
  std::vector<Battery> bats = {{"det_identity"}, {"closed_form"}, {"swapped_cubic"},
                               {"circulant_kernel"}, {"dickson_displayed"}, {"difference_polynomial"}};
  const auto record = [&](Battery& b, bool ok, json where) {
    ++b.runs;
    if (ok) return;
    if (b.failures++ == 0) b.first_failure = std::move(where);
  };

  // One stream, a fixed number of draws per sample.
  std::mt19937_64 rng(c.seed);
  const auto draw = [&](std::uint64_t n) { return rng() % n; };
  for (std::uint64_t i = 0; i < c.samples; ++i) {
    const GfElement A = tower.fq_element(static_cast<std::uint32_t>(draw(q)));
    const GfElement B = tower.fq_element(static_cast<std::uint32_t>(draw(q)));
    const ExtElement C = tower.fq3_element(1 + draw(N - 1));
    const ExtElement x = tower.fq3_element(draw(N));
    const GfElement al = tower.fq_element(static_cast<std::uint32_t>(draw(q)));
    const GfElement be = tower.fq_element(static_cast<std::uint32_t>(draw(q)));
    const GfElement ga = tower.fq_element(static_cast<std::uint32_t>(draw(q)));
    const json abc = {{"A", A.code()}, {"B", B.code()}, {"C", C.code()}};

    const auto chk = curves::check_det_identity(tower, A, B, C);
    const bool det_ok = flip ? chk.det == -chk.form_value && chk.in_subfield : chk.passed();
    record(bats[0], det_ok, abc);

    const auto F = curves::build_F_det(tower, A, B);
    record(bats[1], F == curves::build_F_det_closed(tower, A, B), {{"A", A.code()}, {"B", B.code()}});
    record(bats[2], curves::build_F_swapped(tower, A, B) == curves::swap_xy(F), {{"A", A.code()}, {"B", B.code()}});

    const lin::LinTriple L{tower.embed(ga), tower.embed(be), tower.embed(al)};
    const bool predicted = lin::has_nonzero_root_subfield_coeffs(al, be, ga);
    record(bats[3], predicted == (lin::brute_kernel(tower, L).size() > 1),
           {{"alpha", al.code()}, {"beta", be.code()}, {"gamma", ga.code()}});

    const auto T = lin::difference_triple(tower, A, B, C);
    const ExtElement a = tower.embed(A), b = tower.embed(B), two = tower.fq3().from_int(2);
    const ExtElement c0 = C.frobenius(2) + a * C.frobenius(1) + two * b * C, c1 = a * C, c2 = C;
    const lin::Matrix3 shown = {{{c0, c1, c2},
                                 {c2.frobenius(1), c0.frobenius(1), c1.frobenius(1)},
                                 {c1.frobenius(2), c2.frobenius(2), c0.frobenius(2)}}};
    record(bats[4], lin::dickson_matrix(T) == shown, abc);

    const auto f = planar::f_poly(tower, A, B);
    json where = abc;
    where["x"] = x.code();
    record(bats[5], f(x + C) - f(x) - f(C) == T(x), where);
  }

  bool all_ok = true;
  for (const auto& b : bats) all_ok = all_ok && b.failures == 0;
  Outcome out;
  out.exit_code = all_ok ? kPass : kDisagreement;
  out.diagnostics = timing("identities", sw.seconds());
  if (c.format == Format::Csv) {
    std::ostringstream os;
    os << "battery,runs,failures\n";
    for (const auto& b : bats) os << b.name << ',' << b.runs << ',' << b.failures << '\n';
    out.report = os.str();
    return out;
  }
  json meta = meta_json(c, tower);
  meta["samples"] = c.samples;
  json arr = json::array();
  for (const auto& b : bats) {
    arr.push_back({{"name", b.name}, {"runs", b.runs}, {"failures", b.failures}, {"first_failure", b.first_failure}});
  }
  out.report = dump({{"meta", meta}, {"batteries", arr}, {"summary", {{"passed", all_ok}}}});
  return out;
}

namespace {

json params_json(const families::FamilySpec& s) {
  json j = json::object();
  const auto put = [&](const char* k, const std::optional<std::uint32_t>& v) {
    if (v) j[k] = *v;
  };
  put("p", s.p);
  put("n", s.n);
  put("m", s.m);
  put("k", s.k);
  put("s", s.s);
  put("e", s.e);
  put("u", s.u);
  put("v", s.v);
  put("omega", s.omega);
  put("beta", s.beta);
  return j;
}

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(sep) : "") + v[i];
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

Outcome cmd_families(const RunConfig& c) {
  const Stopwatch sw;
  Outcome out;
  if (c.action == "list") {
    if (c.format == Format::Csv) {
      std::ostringstream os;
      os << "id,field,polynomial,parameters,conditions\n";
      for (const auto& f : families::catalog()) {
        os << f.id << ',' << csv_quote(f.field) << ',' << csv_quote(f.polynomial) << ','
           << csv_quote(join(f.parameters, " ")) << ',' << csv_quote(join(f.conditions, "; ")) << '\n';
      }
      out.report = os.str();
      return out;
    }
    json arr = json::array();
    for (const auto& f : families::catalog()) {
      arr.push_back({{"id", f.id},
                     {"polynomial", f.polynomial},
                     {"field", f.field},
                     {"parameters", f.parameters},
                     {"conditions", f.conditions},
                     {"defaults", params_json(families::default_spec(f.id))}});
    }
    out.report = dump({{"meta", {{"version", kVersion}}}, {"families", arr}});
    return out;
  }
  if (c.action != "check") throw Error("families needs 'list' or 'check'");

  std::vector<families::FamilySpec> specs;
  if (c.family.id.empty() || c.family.id == "all") {
    for (const auto& f : families::catalog()) specs.push_back(families::default_spec(f.id));
  } else {
    families::family_info(c.family.id);
    specs.push_back(c.family);
  }
  json arr = json::array();
  std::ostringstream csv;
  csv << "id,field,status,planar,violations,polynomial\n";
  std::uint64_t flagged = 0, invalid = 0;
  for (const auto& s : specs) {
    const auto r = families::check_family(s, c.budget);
    flagged += r.flagged;
    invalid += !r.violations.empty();
    arr.push_back({{"id", r.spec.id},
                   {"field", r.field},
                   {"order", r.order},
                   {"parameters", params_json(r.spec)},
                   {"violations", r.violations},
                   {"polynomial", r.polynomial},
                   {"desk_verifiable", r.desk_verifiable},
                   {"planar", opt_json(r.planar)},
                   {"flagged", r.flagged},
                   {"status", r.status()}});
    csv << r.spec.id << ',' << csv_quote(r.field) << ',' << csv_quote(r.status()) << ',' << csv_bool(r.planar) << ','
        << csv_quote(join(r.violations, "; ")) << ',' << csv_quote(r.polynomial) << '\n';
  }
  out.exit_code = flagged == 0 ? kPass : kDisagreement;
  out.diagnostics = timing("families", sw.seconds());
  if (c.format == Format::Csv) {
    out.report = csv.str();
  } else {
    out.report = dump({{"meta", {{"version", kVersion}, {"budget", c.budget}}},
                       {"families", arr},
                       {"summary", {{"checked", specs.size()}, {"invalid", invalid}, {"flagged", flagged}}}});
  }
  return out;
}

Outcome run(const RunConfig& config) {
  try {
    if (config.subcommand == "scan") return cmd_scan(config);
    if (config.subcommand == "verify") return cmd_verify(config);
    if (config.subcommand == "identities") return cmd_identities(config);
    if (config.subcommand == "families") return cmd_families(config);
    throw Error("unknown subcommand '" + config.subcommand + "'");
  } catch (const Error& e) {
    return {kUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace planarq::cli
