// nilorb: nilpotent orbit enumeration, complexification and verification.
//
// Output is deterministic byte-for-byte for fixed inputs: JSON lines for
// lists, a single JSON document for reports. Exit codes: 2 for grammar or
// input errors, 1 for verification failures, 0 otherwise.

#include "nilorb/complexify.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/poset.hpp"
#include "nilorb/serialize.hpp"
#include "nilorb/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace nilorb;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

int run_orbits(const std::string& algebra_text) {
  const AlgebraSpec g = parse_algebra(algebra_text);
  for (const OrbitIndex& o : enumerate_orbits(g))
    std::cout << orbit_to_json(o).dump() << "\n";
  return kExitOk;
}

int run_complexify(const std::string& algebra_text) {
  const AlgebraSpec g = parse_algebra(algebra_text);
  for (const OrbitIndex& o : enumerate_orbits(g)) {
    Json line;
    line["orbit"] = orbit_to_json(o);
    line["image"] = orbit_to_json(complexify_orbit(g, o));
    std::cout << line.dump() << "\n";
  }
  return kExitOk;
}

int run_image(const std::string& algebra_text) {
  const AlgebraSpec g = parse_algebra(algebra_text);
  std::cout << surjectivity_report_to_json(g, is_surjective(g), image(g)).dump()
            << "\n";
  return kExitOk;
}

int run_fibre(const std::string& algebra_text, const std::string& orbit_text) {
  const AlgebraSpec g = parse_algebra(algebra_text);
  Json parsed;
  try {
    parsed = Json::parse(orbit_text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("orbit: not valid JSON: ") + e.what());
  }
  const OrbitIndex theta = orbit_from_json(parsed);
  for (const OrbitIndex& o : fibre(g, theta))
    std::cout << orbit_to_json(o).dump() << "\n";
  return kExitOk;
}

int run_poset(const std::string& family, int n, const std::string& format) {
  if (family == "sl") {
    const FinitePoset poset = closure_order_sl(n);
    if (format == "dot")
      std::cout << poset_to_dot(poset);
    else
      std::cout << poset_to_json(poset).dump() << "\n";
    return kExitOk;
  }
  if (family == "so") {
    const DominanceProjection proj = dominance_projection_so(n);
    if (format == "dot")
      std::cout << dominance_projection_to_dot(proj);
    else
      std::cout << dominance_projection_to_json(proj).dump() << "\n";
    return kExitOk;
  }
  throw std::invalid_argument("poset: unknown family '" + family +
                              "' (expected sl or so)");
}

int run_dim(const std::string& algebra_text, const std::string& partition_text) {
  const AlgebraSpec g = parse_algebra(algebra_text);
  if (!g.is_simple() || !g.simple().is_complex())
    throw std::invalid_argument("dim: requires a simple complex algebra, got '" +
                                algebra_text + "'");
  Json parsed;
  try {
    parsed = Json::parse(partition_text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("partition: not valid JSON: ") + e.what());
  }
  const Partition lam = partition_from_json(parsed);
  const SimpleAlgebra& member = g.simple();
  CentralizerReport report;
  if (member.family == Family::sl_complex) {
    if (lam.total() != member.p)
      throw std::invalid_argument("dim: partition does not sum to " +
                                  std::to_string(member.p));
    report = centralizer_dimension(jordan_representative(lam),
                                   MatrixFamily::special_linear);
  } else {
    report = centralizer_dimension(orthogonal_representative(lam, member.p),
                                   MatrixFamily::special_orthogonal);
  }
  std::cout << centralizer_report_to_json(report).dump() << "\n";
  return kExitOk;
}

SweepConfig parse_sweep_config(int max_n, const std::string& families, bool sums) {
  SweepConfig config;
  config.max_n = max_n;
  config.include_sums = sums;
  if (!families.empty()) {
    config.family_sl_real = false;
    config.family_su = false;
    config.family_so_real = false;
    std::stringstream stream(families);
    std::string token;
    while (std::getline(stream, token, ',')) {
      if (token == "sl_R")
        config.family_sl_real = true;
      else if (token == "su")
        config.family_su = true;
      else if (token == "so_R")
        config.family_so_real = true;
      else
        throw std::invalid_argument("verify: unknown family '" + token +
                                    "' (expected sl_R, su, so_R)");
    }
    if (!config.family_sl_real && !config.family_su && !config.family_so_real)
      throw std::invalid_argument("verify: family set must be nonempty");
  }
  if (config.max_n < 2) throw std::invalid_argument("verify: --max-n must be >= 2");
  return config;
}

int run_verify(const SweepConfig& config) {
  const std::vector<CheckResult> results = run_verification(config);
  int failures = 0;
  for (const CheckResult& r : results) {
    if (r.pass) {
      std::cout << "ok " << r.name << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
    }
  }
  std::cout << "verified " << results.size() << " checks, " << failures
            << " failures\n";
  return failures == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilpotent orbits of classical real and complex Lie algebras"};
  app.require_subcommand(1);

  std::string algebra_text;
  std::string orbit_text;
  std::string partition_text;
  std::string poset_family;
  std::string poset_format = "json";
  int poset_n = 0;
  int verify_max_n = 8;
  std::string verify_families;
  bool verify_sums = true;

  CLI::App* orbits = app.add_subcommand("orbits", "list I(g) as JSON lines");
  orbits->add_option("algebra", algebra_text, "e.g. sl(2,R), su(2,1), sl(2,R)+so(3,1)")
      ->required();

  CLI::App* complexify = app.add_subcommand(
      "complexify", "list each orbit with its complexification");
  complexify->add_option("algebra", algebra_text)->required();

  CLI::App* image_cmd = app.add_subcommand(
      "image", "image of the complexification map, with surjectivity report");
  image_cmd->add_option("algebra", algebra_text)->required();

  CLI::App* fibre_cmd =
      app.add_subcommand("fibre", "real orbits over one complex orbit");
  fibre_cmd->add_option("algebra", algebra_text)->required();
  fibre_cmd->add_option("orbit", orbit_text, "complex orbit as JSON")->required();

  CLI::App* poset = app.add_subcommand(
      "poset", "closure order for sl; dominance projection for so");
  poset->add_option("family", poset_family, "sl or so")->required();
  poset->add_option("n", poset_n, "rank parameter")->required();
  poset->add_option("--format", poset_format, "dot or json (default json)")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* dim = app.add_subcommand("dim", "orbit dimension via the exact oracle");
  dim->add_option("algebra", algebra_text, "sl(n,C) or so(m,C)")->required();
  dim->add_option("partition", partition_text, "partition as a JSON array")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the full property sweep");
  verify->add_option("--max-n", verify_max_n, "rank parameter bound (default 8)");
  verify->add_option("--families", verify_families,
                     "comma-separated subset of sl_R,su,so_R (default all)");
  verify->add_flag("--sums,!--no-sums", verify_sums,
                   "include 2-term direct sums (default on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (orbits->parsed()) return run_orbits(algebra_text);
    if (complexify->parsed()) return run_complexify(algebra_text);
    if (image_cmd->parsed()) return run_image(algebra_text);
    if (fibre_cmd->parsed()) return run_fibre(algebra_text, orbit_text);
    if (poset->parsed()) return run_poset(poset_family, poset_n, poset_format);
    if (dim->parsed()) return run_dim(algebra_text, partition_text);
    if (verify->parsed())
      return run_verify(parse_sweep_config(verify_max_n, verify_families, verify_sums));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
