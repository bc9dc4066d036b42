// Command line front end: `verify` emits the proof certificate, `enumerate`
// runs a single case enumerator, `bounds` prints one exact bound.
// Exit codes: 0 success (and all leaves passed for verify), 1 failed
// verification, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbp4/certificate.hpp"

namespace {

std::string class_or_branch(const cbp4::CandidateSolution& c) {
  if (c.scroll) {
    const cbp4::Int beta = c.scroll->beta;
    std::string s = std::to_string(c.scroll->alpha) + "E";
    if (beta != 0) {
      s += beta > 0 ? "+" : "-";
      if (beta != 1 && beta != -1) s += std::to_string(beta > 0 ? beta : -beta);
      s += "F";
    }
    return s;
  }
  if (c.branch.empty()) return "-";
  std::string s;
  for (const auto& [key, value] : c.branch) {
    if (!s.empty()) s += ", ";
    s += key + "=" + std::to_string(value);
  }
  return s;
}

void print_candidates(const std::vector<cbp4::CandidateSolution>& cs) {
  if (cs.empty()) {
    std::cout << "  no survivors\n";
    return;
  }
  std::printf("  %4s %6s %5s %5s  %-15s %-24s %s\n", "d", "delta", "g", "pi", "provenance",
              "class/branch", "notes");
  for (const auto& c : cs) {
    std::string notes =
        c.forwarded_to_endgame() && c.provenance != "endgame" ? "forwarded-to-endgame" : "";
    if (c.outside_certified_region) {
      if (!notes.empty()) notes += ", ";
      notes += "outside-certified-region";
    }
    std::printf("  %4lld %6lld %5lld %5lld  %-15s %-24s %s\n", static_cast<long long>(c.d),
                static_cast<long long>(c.delta), static_cast<long long>(c.g),
                static_cast<long long>(c.pi), c.provenance.c_str(), class_or_branch(c).c_str(),
                notes.c_str());
  }
}

int run_verify(bool as_json, const std::string& out_path) {
  const auto cert = cbp4::run_full_verification();
  const auto report = cbp4::serialize_certificate(
      cert, as_json ? cbp4::CertificateFormat::json : cbp4::CertificateFormat::text);
  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
    out << report;
  }
  return cbp4::verification_exit_code(cert);
}

int run_enumerate(const std::string& case_name, cbp4::Int delta_max, bool delta_max_given) {
  using namespace cbp4;
  if (case_name == "p5-span" && !delta_max_given) delta_max = 11;
  if (case_name == "cone") {
    const auto cone = enumerate_cone_case(delta_max);
    std::cout << "cone case, d = 2*delta + 1 branch:\n";
    print_candidates(cone.survivors_odd);
    std::cout << "cone case, d = 2*delta branch (closed geometrically):\n";
    print_candidates(cone.survivors_even);
    return 0;
  }
  std::vector<CandidateSolution> cs;
  if (case_name == "cubic-scroll") cs = enumerate_cubic_scroll(kDefaultDeltaMin, delta_max);
  else if (case_name == "quartic-scroll") cs = enumerate_quartic_scroll(kDefaultDeltaMin, delta_max);
  else if (case_name == "veronese") cs = enumerate_veronese(delta_max);
  else if (case_name == "elliptic-cone") cs = enumerate_elliptic_cone(delta_max);
  else if (case_name == "p5-span") cs = enumerate_p5_span(delta_max);
  else if (case_name == "endgame") cs = enumerate_endgame();
  std::cout << case_name << " survivors (delta <= " << delta_max << "):\n";
  print_candidates(cs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic verification that a smooth conic bundle in P^4 has degree 4 or 5"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the full case analysis, emit the certificate");
  bool as_json = false;
  std::string out_path;
  verify->add_flag("--json", as_json, "emit the JSON certificate instead of the text report");
  verify->add_option("--out", out_path, "write the report to PATH instead of standard output");

  auto* enumerate = app.add_subcommand("enumerate", "run one case enumerator, print its survivors");
  std::string case_name;
  cbp4::Int delta_max = cbp4::kCertifiedDeltaMax;
  enumerate->add_option("case", case_name, "which case to enumerate")
      ->required()
      ->check(CLI::IsMember({"cone", "cubic-scroll", "quartic-scroll", "veronese", "elliptic-cone",
                             "p5-span", "endgame"}));
  enumerate->add_option("--delta-max", delta_max, "upper limit for delta (default: certified 31)");

  auto* bounds = app.add_subcommand("bounds", "print one exact bound");
  bounds->require_subcommand(1);
  cbp4::Int degree = 0;
  cbp4::Int ambient = 0;
  cbp4::Int surface = 0;
  auto* castelnuovo = bounds->add_subcommand("castelnuovo", "maximal genus in P^r");
  castelnuovo->add_option("--degree", degree, "curve degree")->required();
  castelnuovo->add_option("--ambient", ambient, "ambient projective dimension r")->required();
  auto* gp = bounds->add_subcommand("gp", "space-curve bound on pi - 1 off low-degree surfaces");
  gp->add_option("--degree", degree, "curve degree")->required();
  gp->add_option("--surface", surface, "least surface degree s in {4,5,6}")->required();
  auto* degree_max = bounds->add_subcommand("degree-max", "certified degree bound for S");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(as_json, out_path);
    if (enumerate->parsed())
      return run_enumerate(case_name, delta_max, enumerate->count("--delta-max") > 0);
    if (castelnuovo->parsed()) {
      std::cout << cbp4::castelnuovo_bound(degree, ambient) << "\n";
      return 0;
    }
    if (gp->parsed()) {
      std::cout << cbp4::gp_bound(degree, surface).str() << "\n";
      return 0;
    }
    if (degree_max->parsed()) {
      std::cout << cbp4::global_bounds().d_max << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
