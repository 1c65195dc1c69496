// Command-line front end for the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eis/report.hpp"

namespace {

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stod(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace eis::report;
  CLI::App app{"Numerical verification of Eisenstein series identities"};
  RunConfig cfg;
  std::string command = "all", group = "gl3", s = "2", z = "0.7i", lambda0 = "1.5,1.5", s1, s2;
  std::uint64_t seed = 42;
  bool quiet = false;

  std::vector<std::string> names;
  for (const auto& [name, cmd] : command_names()) names.push_back(name);
  app.add_option("--command,-c", command, "Suite to run")->check(CLI::IsMember(names));
  app.add_option("--group,-g", group, "gl2, gl3 or gln(n)");
  app.add_option("--seed", seed, "Seed for randomized test points");
  app.add_option("--json", cfg.json_path, "Write the JSON report to PATH");
  app.add_option("--csv", cfg.csv_path, "Write the suite's plot series to PATH");
  app.add_option("--s", s, "Complex s for the zeta suite (e.g. 0.5+14i)");
  app.add_option("--z", z, "Complex z on a residue line (e.g. 0.7i)");
  app.add_option("--T", cfg.T, "Truncation parameter");
  app.add_option("--beta", cfg.beta, "Gaussian width of the fixed Parseval test function")->check(CLI::PositiveNumber);
  app.add_option("--lambda0", lambda0, "GL(3) contour base \"c1,c2\"");
  app.add_option("--s1", s1, "Comma-separated s1 values for maass-selberg");
  app.add_option("--s2", s2, "Comma-separated s2 values for maass-selberg");
  app.add_flag("--quiet,-q", quiet, "Suppress the table");

  auto& t = cfg.tol;
  app.add_option("--tol-fe", t.functional_equation, "Functional equation tolerance");
  app.add_option("--tol-residue", t.residue, "Residue of L tolerance");
  app.add_option("--tol-cocycle", t.cocycle, "Cocycle tolerance");
  app.add_option("--tol-unitarity", t.unitarity, "Unitarity tolerance");
  app.add_option("--tol-rank", t.rank_one, "Rank-one minor tolerance");
  app.add_option("--tol-symmetry", t.symmetry, "N(z) symmetry tolerance");
  app.add_option("--tol-mult", t.multiplicativity, "N(z) multiplicativity tolerance");
  app.add_option("--tol-transverse", t.transverse, "Transverse residue tolerance (relative)");
  app.add_option("--tol-double", t.double_residue, "Double residue tolerance (relative)");
  app.add_option("--tol-cancel", t.cancellation, "varpi cancellation tolerance");
  app.add_option("--tol-volume", t.volume, "Volume tolerance (relative)");
  app.add_option("--tol-ms", t.maass_selberg, "Maass-Selberg tolerance (relative)");
  app.add_option("--tol-gl2", t.parseval_gl2, "GL(2) Parseval tolerance (relative)");
  app.add_option("--tol-gl3", t.parseval_gl3, "GL(3) Parseval tolerance (relative)");
  app.add_option("--tol-kappa", t.kappa_spread, "Spread tolerance of the estimated kappa constants");
  app.add_option("--tol-aform", t.a_form, "A-form agreement tolerance (relative)");
  app.add_option("--tol-bform", t.b_form, "B-form agreement tolerance (relative)");
  app.add_option("--tol-special", t.special_values, "Special value tolerance (relative)");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = parse_command(command);
    cfg.group = parse_group(group);
    cfg.seed = seed;
    cfg.s = parse_complex(s);
    cfg.z = parse_complex(z);
    cfg.lambda0 = parse_list(lambda0);
    if (cfg.lambda0.size() != 2) throw eis::DomainError("--lambda0 needs two coordinates");
    if (!s1.empty()) cfg.s1 = parse_list(s1);
    if (!s2.empty()) cfg.s2 = parse_list(s2);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  VerificationReport report;
  try {
    report = run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (!quiet) {
    report.print_table(std::cout);
    if (cfg.command == Command::volume) {
      const auto v = eis::volume_constant(eis::RootDatum(cfg.group));
      std::cout << "V(GL(" << cfg.group << ")) = " << v.expression() << " = " << std::setprecision(15) << v.value
                << '\n';
    }
    if (cfg.command == Command::nmatrix) {
      std::cout << "N(z) at z = " << eis::detail::format_complex(cfg.z) << ":\n";
      const auto n = eis::gl3::n_matrix(cfg.z);
      for (const auto& row : n) {
        for (const auto& v : row) std::cout << "  " << std::setw(34) << eis::detail::format_complex(v);
        std::cout << '\n';
      }
      std::cout << "max |2x2 minor| = " << eis::gl3::rank_one_residual(cfg.z) << '\n';
    }
  }
  try {
    if (!cfg.json_path.empty()) {
      std::ofstream f(cfg.json_path, std::ios::binary);
      if (!f) throw eis::Error("cannot open '" + cfg.json_path + "' for writing");
      f << report.to_json().dump(2) << '\n';
    }
    if (!cfg.csv_path.empty()) emit_csv(report.series, cfg.csv_path);
  } catch (const std::exception& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return 3;
  }
  return report.exit_code();
}
