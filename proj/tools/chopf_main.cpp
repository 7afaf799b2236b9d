// Command-line front end: build/export coloured R-matrices and run the
// verification suites. Exit codes: 0 success / all checks pass, 1 failed
// check or computation error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chopf/json_io.hpp"
#include "chopf/models.hpp"
#include "chopf/verify.hpp"
#include "chopf/version.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw chopf::Error("cannot open output file '" + out_path + "'");
  out << text;
}

struct RmatArgs {
  std::string model;
  std::string q = "1", s = "1", z = "1", zeta = "1";
  std::string lambda, mu;
  double spin = 0.5;
  bool renormalize = false;
  std::string out;
};

int cmd_rmat(const RmatArgs& args) {
  chopf::io::MatrixDocument doc;
  doc.model = args.model;
  doc.tool_version = chopf::version;
  doc.renormalized = args.renormalize;

  if (args.model == "gl2") {
    const chopf::gl2::Params p{chopf::parse_complex(args.q), chopf::parse_complex(args.s)};
    const chopf::cscalar la = chopf::parse_complex(args.lambda);
    const chopf::cscalar mu = chopf::parse_complex(args.mu);
    const chopf::cscalar zeta = chopf::parse_complex(args.zeta);
    if (args.renormalize && args.spin != 0.5)
      throw UsageError("--renormalize applies to spin 1/2 only");
    doc.params = p;
    doc.colours = {chopf::Colour(la), chopf::Colour(mu)};
    doc.spins = {args.spin, args.spin};
    doc.matrix = chopf::gl2::r_matrix(p, la, mu, args.spin, args.spin, zeta, args.renormalize);
  } else if (args.model == "h4") {
    const chopf::h4::Params p{chopf::parse_complex(args.z)};
    const chopf::Colour la = chopf::parse_colour(args.lambda);
    const chopf::Colour mu = chopf::parse_colour(args.mu);
    if (la.arity() != 2 || mu.arity() != 2)
      throw UsageError("h4 colours need two components, e.g. --lambda 2+0i,0.5+0i");
    doc.params = p;
    doc.colours = {la, mu};
    doc.matrix = chopf::h4::r_matrix(p, la, mu);
  } else {
    throw UsageError("unknown model '" + args.model + "' (expected gl2 or h4)");
  }

  if (!chopf::all_finite(doc.matrix)) throw chopf::Error("R-matrix has non-finite entries");
  write_output(chopf::io::to_json(doc), args.out);
  return 0;
}

struct VerifyArgs {
  std::string model;  // empty = both
  std::string suite = "all";
  int trials = 100;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  std::vector<double> spins = {0.5, 1.0, 1.5};
  std::string out;
};

int cmd_verify(const VerifyArgs& args) {
  chopf::verify::SuiteConfig cfg;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.tol = args.tol;
  cfg.spins = args.spins;
  cfg.suites = {args.suite};
  if (!args.model.empty()) {
    if (args.model != "gl2" && args.model != "h4")
      throw UsageError("unknown model '" + args.model + "' (expected gl2 or h4)");
    cfg.models = {args.model};
  }
  if (const char* env = std::getenv("COLOURED_HOPF_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("COLOURED_HOPF_SEED must be an integer");
    }
  }

  const auto reports = chopf::verify::run_suite(cfg);
  write_output(chopf::io::report_to_json(reports), args.out);

  std::size_t failed = 0;
  for (const auto& r : reports)
    if (!r.pass) ++failed;
  std::cerr << reports.size() << " checks, " << failed << " failed (seed " << cfg.seed
            << ", tol " << cfg.tol << ")\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coloured Hopf-algebra structure maps and R-matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", chopf::version);

  RmatArgs rmat;
  CLI::App* rm = app.add_subcommand("rmat", "evaluate a coloured R-matrix and write it as JSON");
  rm->add_option("--model", rmat.model, "gl2 or h4")->required();
  rm->add_option("--q", rmat.q, "gl2 deformation parameter q (complex a+bi)");
  rm->add_option("--s", rmat.s, "gl2 deformation parameter s");
  rm->add_option("--z", rmat.z, "h4 deformation parameter z");
  rm->add_option("--zeta", rmat.zeta, "gl2 eigenvalue of the central generator");
  rm->add_option("--lambda", rmat.lambda, "first colour")->required();
  rm->add_option("--mu", rmat.mu, "second colour")->required();
  rm->add_option("--spin", rmat.spin, "gl2 leg spin (half-integer)");
  rm->add_flag("--renormalize", rmat.renormalize, "multiply the spin-1/2 matrix by q^(1/2)");
  rm->add_option("--out", rmat.out, "output file (default stdout)");
  rm->set_config("--config", "", "flat key=value config file; flags win");

  VerifyArgs ver;
  CLI::App* vf = app.add_subcommand("verify", "run identity checks and write a JSON report");
  vf->add_option("--model", ver.model, "gl2 or h4 (default: both)");
  vf->add_option("--suite", ver.suite,
                 "ybe|quasi|hopf|bialgebra|cocomm|r-identities|fixed-colour|all");
  vf->add_option("--trials", ver.trials, "random draws per check")->check(CLI::PositiveNumber);
  vf->add_option("--seed", ver.seed, "suite seed (COLOURED_HOPF_SEED overrides)");
  vf->add_option("--tol", ver.tol, "residual tolerance");
  vf->add_option("--spins", ver.spins, "gl2 leg spins")->delimiter(',');
  vf->add_option("--out", ver.out, "report file (default stdout)");
  vf->set_config("--config", "", "flat key=value config file; flags win");

  try {
    app.parse(argc, argv);
    if (rm->parsed()) return cmd_rmat(rmat);
    return cmd_verify(ver);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const chopf::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
