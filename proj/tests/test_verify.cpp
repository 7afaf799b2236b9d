#include <doctest.h>

#include "chopf/json_io.hpp"
#include "chopf/verify.hpp"
#include "test_util.hpp"

using namespace chopf;
using namespace chopf::verify;
using testutil::random_colour;
using testutil::random_param;

namespace {

ModelParams sample_params(std::mt19937_64& rng, bool is_gl2, double radius) {
  if (is_gl2) return Gl2Params{random_param(rng, radius), random_param(rng, radius)};
  return H4Params{random_param(rng, std::log(2.0))};
}

}  // namespace

TEST_CASE("coloured YBE holds for both models") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 20; ++t) {
    const ModelParams pg = sample_params(rng, true, 0.2);
    const auto rg = check_coloured_ybe(pg, random_colour(rng, 1), random_colour(rng, 1),
                                       random_colour(rng, 1), {0.5, 0.5, 0.5}, 1e-10);
    CHECK(rg.pass);

    const ModelParams ph = sample_params(rng, false, 0.0);
    const auto rh = check_coloured_ybe(ph, random_colour(rng, 2), random_colour(rng, 2),
                                       random_colour(rng, 2), {0.5, 0.5, 0.5}, 1e-10);
    CHECK(rh.pass);
  }
}

TEST_CASE("coloured YBE holds at mixed gl2 spins") {
  std::mt19937_64 rng(202);
  const ModelParams p = sample_params(rng, true, 0.07);
  const auto r = check_coloured_ybe(p, random_colour(rng, 1), random_colour(rng, 1),
                                    random_colour(rng, 1), {0.5, 1.0, 1.5}, 1e-10);
  CHECK(r.pass);
  CHECK(r.residual < 1e-11);
}

TEST_CASE("a corrupted R-matrix flips the YBE check to fail") {
  std::mt19937_64 rng(303);
  const H4Params p{random_param(rng, std::log(2.0))};
  const Colour la = random_colour(rng, 2), mu = random_colour(rng, 2), nu = random_colour(rng, 2);
  CMatrix r12 = h4::r_matrix(p, la, mu);
  const CMatrix r13 = h4::r_matrix(p, la, nu);
  const CMatrix r23 = h4::r_matrix(p, mu, nu);
  const std::array<std::size_t, 3> dims{3, 3, 3};

  CHECK(ybe_residual(r12, r13, r23, dims) < 1e-10);
  r12(1, 5) += 1e-3;
  CHECK(ybe_residual(r12, r13, r23, dims) >= 1e-10);

  // sensitivity holds down to the 1e-6 perturbation scale
  r12(1, 5) -= 1e-3;
  r12(1, 5) += 1e-6;
  CHECK(ybe_residual(r12, r13, r23, dims) >= 1e-10);
}

TEST_CASE("quasitriangularity holds for both models") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 10; ++t) {
    const ModelParams pg = sample_params(rng, true, 0.2);
    const auto rg =
        check_quasitriangular(pg, random_colour(rng, 1), random_colour(rng, 1),
                              random_colour(rng, 1), random_colour(rng, 1), random_colour(rng, 1),
                              {0.5, 0.5, 0.5}, 1e-10);
    CHECK(rg.pass);

    const ModelParams ph = sample_params(rng, false, 0.0);
    const auto rh =
        check_quasitriangular(ph, random_colour(rng, 2), random_colour(rng, 2),
                              random_colour(rng, 2), random_colour(rng, 2), random_colour(rng, 2),
                              {0.5, 0.5, 0.5}, 1e-10);
    CHECK(rh.pass);
  }
}

TEST_CASE("quasitriangularity with identity colours is the uncoloured identity") {
  std::mt19937_64 rng(505);
  const ModelParams p = sample_params(rng, true, 0.2);
  const Colour one = Colour::identity(1);
  const auto r = check_quasitriangular(p, one, one, one, one, one, {0.5, 0.5, 0.5}, 1e-10);
  CHECK(r.pass);
}

TEST_CASE("almost cocommutativity holds per generator") {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 10; ++t) {
    const ModelParams pg = sample_params(rng, true, 0.2);
    CHECK(check_almost_cocommutative(pg, random_colour(rng, 1), random_colour(rng, 1),
                                     random_colour(rng, 1), 0.5, 1e-10)
              .pass);
    const ModelParams ph = sample_params(rng, false, 0.0);
    CHECK(check_almost_cocommutative(ph, random_colour(rng, 2), random_colour(rng, 2),
                                     random_colour(rng, 2), 0.5, 1e-10)
              .pass);
  }
}

TEST_CASE("cocommutative elements give zero residual outright") {
  // Delta(J3) is symmetric, so the J3 term contributes nothing; with all
  // generators included the residual is still far below tolerance.
  std::mt19937_64 rng(707);
  const ModelParams p = sample_params(rng, true, 0.2);
  const Colour one = Colour::identity(1);
  const auto r = check_almost_cocommutative(p, one, one, one, 0.5, 1e-10);
  CHECK(r.residual < 1e-13);
}

TEST_CASE("generalized Hopf axioms hold for both models") {
  std::mt19937_64 rng(808);
  for (int t = 0; t < 10; ++t) {
    const ModelParams pg = sample_params(rng, true, 0.4);
    HopfColours cg{random_colour(rng, 1), random_colour(rng, 1), random_colour(rng, 1),
                   random_colour(rng, 1), random_colour(rng, 1), random_colour(rng, 1),
                   random_colour(rng, 1), random_colour(rng, 1)};
    CHECK(check_hopf_axioms(pg, cg, 0.5, 1e-10).pass);

    const ModelParams ph = sample_params(rng, false, 0.0);
    HopfColours ch{random_colour(rng, 2), random_colour(rng, 2), random_colour(rng, 2),
                   random_colour(rng, 2), random_colour(rng, 2), random_colour(rng, 2),
                   random_colour(rng, 2), random_colour(rng, 2)};
    CHECK(check_hopf_axioms(ph, ch, 0.5, 1e-10).pass);
  }
}

TEST_CASE("bialgebra axioms hold for both models") {
  std::mt19937_64 rng(909);
  for (int t = 0; t < 10; ++t) {
    const ModelParams pg = sample_params(rng, true, 0.4);
    CHECK(check_bialgebra(pg, random_colour(rng, 1), random_colour(rng, 1), random_colour(rng, 1),
                          0.5, 1e-10)
              .pass);
    const ModelParams ph = sample_params(rng, false, 0.0);
    CHECK(check_bialgebra(ph, random_colour(rng, 2), random_colour(rng, 2), random_colour(rng, 2),
                          0.5, 1e-10)
              .pass);
  }
}

TEST_CASE("counit and antipode act on R as required") {
  std::mt19937_64 rng(1010);
  for (int t = 0; t < 10; ++t) {
    const ModelParams pg = sample_params(rng, true, 0.2);
    CHECK(check_counit_on_r(pg, random_colour(rng, 1), random_colour(rng, 1),
                            random_colour(rng, 1), random_colour(rng, 1), random_colour(rng, 1),
                            0.5, 1e-10)
              .pass);
    CHECK(check_antipode_on_r(pg, random_colour(rng, 1), random_colour(rng, 1),
                              random_colour(rng, 1), random_colour(rng, 1), 0.5, 1e-10)
              .pass);

    const ModelParams ph = sample_params(rng, false, 0.0);
    const auto rc = check_counit_on_r(ph, random_colour(rng, 2), random_colour(rng, 2),
                                      random_colour(rng, 2), random_colour(rng, 2),
                                      random_colour(rng, 2), 0.5, 1e-10);
    CHECK(rc.pass);
    CHECK(rc.residual < 1e-12);  // epsilon kills all three exponents outright
    CHECK(check_antipode_on_r(ph, random_colour(rng, 2), random_colour(rng, 2),
                              random_colour(rng, 2), random_colour(rng, 2), 0.5, 1e-10)
              .pass);
  }
}

TEST_CASE("fixed-colour Hopf structure passes and matches the uncoloured suite at nu0") {
  std::mt19937_64 rng(1111);
  for (int t = 0; t < 10; ++t) {
    const ModelParams pg = sample_params(rng, true, 0.4);
    CHECK(check_fixed_colour_hopf(pg, random_colour(rng, 1), 0.5, 1e-10).pass);
    const ModelParams ph = sample_params(rng, false, 0.0);
    CHECK(check_fixed_colour_hopf(ph, random_colour(rng, 2), 0.5, 1e-10).pass);
  }

  // nu = nu0 reproduces the plain axiom run bit for bit
  const ModelParams p = sample_params(rng, true, 0.4);
  const auto fixed = check_fixed_colour_hopf(p, Colour::identity(1), 0.5, 1e-10);
  const auto plain = check_hopf_axioms(p, HopfColours::all(Colour::identity(1)), 0.5, 1e-10);
  CHECK(fixed.residual == plain.residual);

  // h4 with nu = (2, 1/2) keeps z fixed
  const ModelParams ph = H4Params{{0.8, 0.0}};
  CHECK(check_fixed_colour_hopf(ph, Colour({2.0, 0.0}, {0.5, 0.0}), 0.5, 1e-10).pass);
}

TEST_CASE("run_suite is deterministic and canonically ordered") {
  SuiteConfig cfg;
  cfg.trials = 2;
  cfg.seed = 7;
  cfg.spins = {0.5};
  const auto a = run_suite(cfg);
  const auto b = run_suite(cfg);
  CHECK(io::report_to_json(a) == io::report_to_json(b));

  REQUIRE(!a.empty());
  for (std::size_t i = 1; i < a.size(); ++i) {
    const bool ordered = a[i - 1].check_id < a[i].check_id ||
                         (a[i - 1].check_id == a[i].check_id && a[i - 1].model <= a[i].model);
    CHECK(ordered);
  }
  for (const auto& r : a) {
    CHECK(r.pass);
    CHECK(r.seed.has_value());
  }
}

TEST_CASE("run_suite honours suite selectors and spin lists") {
  SuiteConfig cfg;
  cfg.trials = 1;
  cfg.suites = {"ybe"};
  cfg.spins = {0.5, 1.5};
  cfg.models = {"gl2"};
  const auto reports = run_suite(cfg);
  CHECK(reports.size() == 4);  // non-decreasing triples over two spins
  for (const auto& r : reports) CHECK(r.check_id.rfind("ybe", 0) == 0);

  cfg.suites = {"bogus"};
  CHECK_THROWS_AS((void)run_suite(cfg), InvalidParameter);
  cfg.suites = {"all"};
  cfg.models = {"su5"};
  CHECK_THROWS_AS((void)run_suite(cfg), InvalidParameter);
}
