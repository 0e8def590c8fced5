#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "planarq/cli.hpp"

namespace {

using planarq::cli::Format;
using planarq::cli::RunConfig;

void add_field_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--p", c.p, "odd prime p");
  sub->add_option("--m", c.m, "q = p^m");
  sub->add_option("--mid-modulus", c.mid_modulus, "monic modulus of F_q over F_p, low degree first")
      ->delimiter(',');
  sub->add_option("--top-modulus", c.top_modulus, "monic cubic modulus of F_{q^3} over F_q, low degree first")
      ->delimiter(',');
}

void add_output_options(CLI::App* sub, RunConfig& c, std::string& out) {
  sub->add_option("--seed", c.seed, "seed of the pseudorandom stream");
  sub->add_option("--workers", c.workers, "worker threads; never changes the output")->check(CLI::PositiveNumber);
  sub->add_option("--out", out, "report path; stdout when omitted");
  sub->add_option("--format", c.format, "json or csv")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}}));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  std::string out;
  CLI::App app{"Planarity of x^{q^2+1} + A x^{q+1} + B x^2 over F_{q^3}"};
  app.require_subcommand(1);

  auto* scan = app.add_subcommand("scan", "classify every pair (A, B) in F_q^2");
  add_field_options(scan, c);
  add_output_options(scan, c, out);
  scan->add_option("--methods", c.methods, "comma-separated subset of theorem,det,brute");

  auto* verify = app.add_subcommand("verify", "evidence dossier for one pair");
  add_field_options(verify, c);
  add_output_options(verify, c, out);
  verify->add_option("--A", c.A, "code of A in F_q")->required();
  verify->add_option("--B", c.B, "code of B in F_q")->required();
  verify->add_option("--C", c.C, "nonzero code of C in F_{q^3}");
  verify->add_option("--budget", c.budget, "largest F_{q^3} that is brute-forced");

  auto* ident = app.add_subcommand("identities", "randomized identity batteries");
  add_field_options(ident, c);
  add_output_options(ident, c, out);
  ident->add_option("--samples", c.samples, "samples per battery");
  ident->add_option("--inject-fault", c.fault)->group("");

  auto* fam = app.add_subcommand("families", "catalog of known planar families");
  fam->require_subcommand(1);
  auto* list = fam->add_subcommand("list", "print the catalog");
  add_output_options(list, c, out);
  auto* check = fam->add_subcommand("check", "validate, instantiate and brute-check");
  add_output_options(check, c, out);
  auto& f = c.family;
  f.id = "all";
  check->add_option("--id", f.id, "family id, or all");
  check->add_option("--p", f.p);
  check->add_option("--n", f.n);
  check->add_option("--m", f.m);
  check->add_option("--k", f.k);
  check->add_option("--s", f.s);
  check->add_option("--e", f.e);
  check->add_option("--u", f.u, "element code");
  check->add_option("--v", f.v, "element code");
  check->add_option("--omega", f.omega, "element code");
  check->add_option("--beta", f.beta, "element code");
  check->add_option("--budget", c.budget, "largest field that is brute-forced");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : planarq::cli::kUsage;
  }

  for (auto* sub : {scan, verify, ident, fam}) {
    if (sub->parsed()) c.subcommand = sub->get_name();
  }
  c.action = list->parsed() ? "list" : "check";

  const auto result = planarq::cli::run(c);
  std::cerr << result.diagnostics;
  if (result.exit_code == planarq::cli::kUsage) return result.exit_code;
  if (out.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream file(out, std::ios::binary);
    file << result.report;
    if (!file) {
      std::cerr << "error: cannot write " << out << "\n";
      return planarq::cli::kUsage;
    }
  }
  return result.exit_code;
}
