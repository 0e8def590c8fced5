// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "planarq/cli.hpp"
#include "planarq/curves.hpp"
#include "planarq/families.hpp"
#include "planarq/linearized.hpp"
#include "planarq/planarity.hpp"

namespace {

using namespace planarq;
using gf::FieldTower;

// Pinned limits. Counts and identities are exact; only wall time has slack.
constexpr double kCountingSeconds = 10.0;
constexpr double kBruteQ11Seconds = 600.0;
constexpr double kFamilySeconds = 5.0;
constexpr std::uint64_t kRandomTriples = 1000;
constexpr std::uint64_t kCurveSamples = 50;
constexpr std::uint64_t kSeed = 20240607;

struct Result {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// 1. Theorem and det counts equal the closed-form count.
Result counting_formula() {
  const std::vector<std::pair<unsigned, unsigned>> fields = {{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}};
  const std::vector<std::uint64_t> frozen = {9, 7, 21, 27, 25};
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto t = FieldTower::build(fields[i].first, fields[i].second);
    planar::ScanOptions opt;
    opt.methods = planar::Methods::parse("theorem,det");
    const auto rep = planar::scan(t, opt);
    const bool ok = rep.ok() && rep.det_count == frozen[i] && rep.theorem_count == frozen[i] &&
                    planar::count_formula(t) == frozen[i];
    r.pass = r.pass && ok;
    r.detail += "q=" + std::to_string(t.q()) + ":" + std::to_string(rep.planar_count) + " ";
  }
  const double dt = seconds_since(t0);
  r.pass = r.pass && dt < kCountingSeconds;
  r.detail += "in " + fmt(dt) + " s (limit " + fmt(kCountingSeconds) + ")";
  return r;
}

// 2. All three deciders agree on every pair.
Result triple_agreement() {
  Result r;
  for (unsigned q : {5u, 7u, 11u}) {
    const auto t = FieldTower::build(q, 1);
    planar::ScanOptions opt;
    opt.methods = planar::Methods::parse("theorem,det,brute");
    opt.workers = workers();
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = planar::scan(t, opt);
    const double dt = seconds_since(t0);
    const bool ok = rep.disagreements.empty() && rep.pairs.size() == std::size_t{q} * q &&
                    (q != 11 || dt < kBruteQ11Seconds);
    r.pass = r.pass && ok;
    r.detail += "q=" + std::to_string(q) + ": " + std::to_string(rep.disagreements.size()) + " disagreements, " +
                fmt(dt) + " s; ";
  }
  r.detail += "q=11 limit " + fmt(kBruteQ11Seconds) + " s";
  return r;
}

// 3. Theorem-planar pairs at q = 3 are brute-planar.
Result q3_sufficiency() {
  const auto t = FieldTower::build(3, 1);
  planar::ScanOptions opt;
  opt.methods = planar::Methods::parse("theorem,brute");
  const auto rep = planar::scan(t, opt);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> theorem_set, brute_set;
  for (const auto& p : rep.pairs) {
    if (*p.theorem) theorem_set.emplace_back(p.A, p.B);
    if (*p.brute) brute_set.emplace_back(p.A, p.B);
  }
  const decltype(theorem_set) frozen = {{0, 0}, {1, 0}, {1, 2}};
  bool subset = true;
  for (const auto& p : theorem_set) subset = subset && std::find(brute_set.begin(), brute_set.end(), p) != brute_set.end();
  Result r;
  r.pass = theorem_set == frozen && subset && rep.disagreements.empty();
  r.detail = "theorem " + std::to_string(theorem_set.size()) + " pairs within brute " +
             std::to_string(brute_set.size()) + " pairs (recorded, not asserted equal)";
  return r;
}

// 4. det M = F(C, C^q, C^{q^2}) and lies in F_q.
Result det_identity() {
  Result r;
  std::uint64_t checks = 0, failures = 0;
  const auto run = [&](const FieldTower& t, std::uint32_t a, std::uint32_t b, std::uint64_t c) {
    ++checks;
    failures += !curves::check_det_identity(t, t.fq_element(a), t.fq_element(b), t.fq3_element(c)).passed();
  };
  const auto t3 = FieldTower::build(3, 1);
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      for (std::uint64_t c = 0; c < 27; ++c) run(t3, a, b, c);
    }
  }
  std::mt19937_64 rng(kSeed);
  for (auto [p, m] : {std::pair{5u, 1u}, {7u, 1u}, {3u, 2u}, {5u, 2u}}) {
    const auto t = FieldTower::build(p, m);
    for (std::uint64_t i = 0; i < kRandomTriples; ++i) {
      const auto a = static_cast<std::uint32_t>(rng() % t.q()), b = static_cast<std::uint32_t>(rng() % t.q());
      run(t, a, b, rng() % t.order_top());
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(checks) + " triples (q=3 exhaustive; q=5,7,9,25 seeded), " + std::to_string(failures) +
             " failures";
  return r;
}

// 5. The swapped labeling of the cubic is F with X and Y exchanged.
Result swapped_cubic() {
  Result r;
  std::uint64_t pairs = 0, failures = 0;
  for (auto [p, m] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}}) {
    const auto t = FieldTower::build(p, m);
    for (std::uint32_t a = 0; a < t.q(); ++a) {
      for (std::uint32_t b = 0; b < t.q(); ++b) {
        ++pairs;
        const auto A = t.fq_element(a), B = t.fq_element(b);
        failures += !(curves::build_F_swapped(t, A, B) == curves::swap_xy(curves::build_F_det(t, A, B)));
      }
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(pairs) + " pairs at q=3,5,7,9, " + std::to_string(failures) + " failures";
  return r;
}

// 6. Circulant norm vanishes iff the kernel is nontrivial.
Result circulant_criterion() {
  Result r;
  std::uint64_t triples = 0, failures = 0;
  for (unsigned q : {3u, 5u, 7u}) {
    const auto t = FieldTower::build(q, 1);
    for (std::uint32_t al = 0; al < q; ++al) {
      for (std::uint32_t be = 0; be < q; ++be) {
        for (std::uint32_t ga = 0; ga < q; ++ga) {
          const auto a = t.fq_element(al), b = t.fq_element(be), g = t.fq_element(ga);
          const lin::LinTriple L{t.embed(g), t.embed(b), t.embed(a)};
          ++triples;
          failures += lin::has_nonzero_root_subfield_coeffs(a, b, g) != (lin::brute_kernel(t, L).size() > 1);
        }
      }
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(triples) + " triples at q=3,5,7, " + std::to_string(failures) + " failures";
  return r;
}

// 7. Every locus point satisfies its factorization claims.
Result branch_factorizations() {
  Result r;
  std::uint64_t points = 0, checks = 0, failed = 0, sqrt_unavailable = 0;
  for (unsigned q : {5u, 7u, 11u, 13u}) {
    const auto t = FieldTower::build(q, 1);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        try {
          const auto rep = curves::verify_branch_factorization(t, t.fq_element(a), t.fq_element(b));
          ++points;
          for (const auto& c : rep.checks) {
            ++checks;
            failed += c.status == curves::CheckStatus::Failed;
            sqrt_unavailable += c.status == curves::CheckStatus::SqrtUnavailable;
            const bool products = c.item == "cubic_product" || c.item == "square_product";
            failed += products && c.status == curves::CheckStatus::Passed && (!c.lambda || c.lambda->is_zero());
          }
        } catch (const NotOnLocus&) {
        } catch (const SquareRootUnavailable&) {
          ++points;
          ++sqrt_unavailable;
        }
      }
    }
  }
  r.pass = failed == 0 && points > 0;
  r.detail = std::to_string(points) + " locus points, " + std::to_string(checks) + " claims, " + std::to_string(failed) +
             " failed, " + std::to_string(sqrt_unavailable) + " need a missing sqrt(-3)";
  return r;
}

// 8. Roots of the determinant match zeros of the transformed cubic.
Result curve_root_correspondence() {
  Result r;
  std::mt19937_64 rng(kSeed + 8);
  std::uint64_t samples = 0, mismatches = 0, planar_nonzero = 0;
  for (unsigned q : {5u, 7u}) {
    const auto t = FieldTower::build(q, 1);
    for (std::uint64_t i = 0; i < kCurveSamples; ++i) {
      const auto A = t.fq_element(static_cast<std::uint32_t>(rng() % q));
      const auto B = t.fq_element(static_cast<std::uint32_t>(rng() % q));
      const auto roots = curves::count_det_roots(t, A, B);
      const auto zeros = curves::count_nonzero_fq_zeros(curves::transform_H(t, A, B, t.normal_element()), workers());
      ++samples;
      mismatches += roots != zeros;
      planar_nonzero += planar::classify_pair(t, A, B).planar && zeros != 0;
    }
  }
  r.pass = mismatches == 0 && planar_nonzero == 0;
  r.detail = std::to_string(samples) + " seeded pairs at q=5,7, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(planar_nonzero) + " planar pairs with zeros";
  return r;
}

// 9. Non-planar pairs without linear factors have points.
Result irreducible_points() {
  Result r;
  std::uint64_t considered = 0, empty = 0;
  for (unsigned q : {5u, 7u, 11u}) {
    const auto t = FieldTower::build(q, 1);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto A = t.fq_element(a), B = t.fq_element(b);
        if (planar::classify_pair(t, A, B).planar) continue;
        const auto lines = curves::find_linear_factors(t, curves::build_F_det(t, A, B));
        if (!lines || !lines->empty()) continue;
        ++considered;
        empty += curves::count_nonzero_fq_zeros(curves::transform_H(t, A, B, t.normal_element()), workers()) == 0;
      }
    }
  }
  r.pass = empty == 0 && considered > 0;
  r.detail = std::to_string(considered) + " non-planar pairs with no line over F_{q^k}, k<=3, at q=5,7,11; " +
             std::to_string(empty) + " without points";
  return r;
}

// 10. Named family members over F_{3^5} are planar.
Result families_check() {
  Result r;
  const auto F = gf::GaloisField::create(3, 5);
  double worst = 0;
  for (std::string id : {"T2.1", "T2.3", "T2.4", "T2.6", "T3.5"}) {
    families::FamilySpec s;
    s.id = id;
    if (id == "T2.6") s.k = 3;
    const auto t0 = std::chrono::steady_clock::now();
    const bool planar = families::brute_check_family(s, *F, gf::SizeLimits{});
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    r.pass = r.pass && planar && dt < kFamilySeconds;
    r.detail += families::to_string(families::instantiate_family(s, *F)) + (planar ? " planar; " : " NOT planar; ");
  }
  r.detail += "slowest " + fmt(worst) + " s (limit " + fmt(kFamilySeconds) + ")";
  return r;
}

// 11. Reports do not depend on the worker count.
Result determinism() {
  Result r;
  for (std::string sub : {"scan", "identities"}) {
    cli::RunConfig c;
    c.subcommand = sub;
    c.p = 7;
    c.methods = "theorem,det,brute";
    c.seed = kSeed;
    c.samples = 300;
    c.workers = 1;
    const auto a = cli::run(c);
    c.workers = 4;
    const auto b = cli::run(c);
    const bool same = a.exit_code == cli::kPass && a.report == b.report && !a.report.empty();
    r.pass = r.pass && same;
    r.detail += sub + (same ? " identical" : " DIFFERS") + " (" + std::to_string(a.report.size()) + " bytes); ";
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"counting formula", counting_formula},
      {"triple-decider agreement", triple_agreement},
      {"q=3 sufficiency", q3_sufficiency},
      {"determinant identity", det_identity},
      {"swapped cubic relation", swapped_cubic},
      {"circulant root criterion", circulant_criterion},
      {"branch factorizations", branch_factorizations},
      {"curve-root correspondence", curve_root_correspondence},
      {"points on irreducible cubics", irreducible_points},
      {"families", families_check},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    std::printf("%s %2zu %-30s %s\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
