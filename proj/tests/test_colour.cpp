#include <doctest.h>

#include "chopf/colour.hpp"
#include "test_util.hpp"

using namespace chopf;
using testutil::random_colour;

namespace {

double rel_diff(cscalar a, cscalar b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("colour components must be nonzero") {
  CHECK_THROWS_AS(Colour(cscalar{}), ZeroColour);
  CHECK_THROWS_AS(Colour(cscalar{1.0, 0.0}, cscalar{}), ZeroColour);
}

TEST_CASE("compose examples") {
  const ColourGroup gl2(1);
  CHECK(gl2.compose(Colour(cscalar{2.0, 0.0}), Colour(cscalar{3.0, 0.0})) ==
        Colour(cscalar{6.0, 0.0}));
  const Colour a(cscalar{0.7, 1.2});
  CHECK(gl2.compose(gl2.identity(), a) == a);

  const ColourGroup h4(2);
  CHECK(h4.compose(Colour({2.0, 0.0}, {1.0, 0.0}), Colour({1.0, 0.0}, {3.0, 0.0})) ==
        Colour({2.0, 0.0}, {3.0, 0.0}));
}

TEST_CASE("inverse examples") {
  const ColourGroup gl2(1);
  CHECK(gl2.inverse(Colour(cscalar{2.0, 0.0})) == Colour(cscalar{0.5, 0.0}));
  CHECK(gl2.inverse(gl2.identity()) == gl2.identity());

  const ColourGroup h4(2);
  CHECK(h4.inverse(Colour({2.0, 0.0}, {4.0, 0.0})) == Colour({0.5, 0.0}, {0.25, 0.0}));
}

TEST_CASE("two-index colour labels") {
  const ColourGroup gl2(1);
  CHECK(gl2.two_index(Colour(cscalar{6.0, 0.0}), Colour(cscalar{2.0, 0.0})) ==
        Colour(cscalar{3.0, 0.0}));
  const Colour a(cscalar{1.3, -0.4});
  CHECK(rel_diff(gl2.two_index(a, a)[0], {1.0, 0.0}) < 1e-15);

  const ColourGroup h4(2);
  const Colour t = h4.two_index(Colour({4.0, 0.0}, {9.0, 0.0}), Colour({2.0, 0.0}, {3.0, 0.0}));
  CHECK(rel_diff(t[0], {2.0, 0.0}) < 1e-15);
  CHECK(rel_diff(t[1], {3.0, 0.0}) < 1e-15);
}

TEST_CASE("arity mismatches are rejected") {
  const ColourGroup h4(2);
  CHECK_THROWS_AS((void)h4.compose(Colour(cscalar{1.0, 0.0}), Colour({1.0, 0.0}, {1.0, 0.0})),
                  DimensionMismatch);
  CHECK_THROWS_AS((void)act_params(Gl2Params{}, Colour({2.0, 0.0}, {2.0, 0.0})),
                  DimensionMismatch);
}

TEST_CASE("act_params: gl2 is the fixed-parameter case") {
  const ModelParams p = Gl2Params{{1.7, 0.0}, {0.6, 0.0}};
  const ModelParams moved = act_params(p, Colour(cscalar{5.0, 0.0}));
  CHECK(std::get<Gl2Params>(moved).q == cscalar{1.7, 0.0});
  CHECK(std::get<Gl2Params>(moved).s == cscalar{0.6, 0.0});
}

TEST_CASE("act_params: h4 scales z by nu+ nu-") {
  const ModelParams p = H4Params{{0.8, 0.0}};
  const ModelParams same = act_params(p, Colour({2.0, 0.0}, {0.5, 0.0}));
  CHECK(std::get<H4Params>(same).z == cscalar{0.8, 0.0});

  const ModelParams identity = act_params(p, Colour::identity(2));
  CHECK(std::get<H4Params>(identity).z == cscalar{0.8, 0.0});

  const ModelParams scaled = act_params(p, Colour({2.0, 0.0}, {3.0, 0.0}));
  CHECK(rel_diff(std::get<H4Params>(scaled).z, {4.8, 0.0}) < 1e-15);
}

TEST_CASE("group laws hold on random triples") {
  for (const std::size_t arity : {1u, 2u}) {
    const ColourGroup g(arity);
    std::mt19937_64 rng(4242 + arity);
    for (int t = 0; t < 1000; ++t) {
      const Colour a = random_colour(rng, arity);
      const Colour b = random_colour(rng, arity);
      const Colour c = random_colour(rng, arity);

      const Colour ab_c = g.compose(g.compose(a, b), c);
      const Colour a_bc = g.compose(a, g.compose(b, c));
      for (std::size_t i = 0; i < arity; ++i) {
        CHECK(rel_diff(ab_c[i], a_bc[i]) < 1e-14);
        CHECK(rel_diff(g.compose(a, g.identity())[i], a[i]) < 1e-14);
        CHECK(rel_diff(g.compose(a, g.inverse(a))[i], g.identity()[i]) < 1e-14);
      }
    }
  }
}

TEST_CASE("parameter action is compatible with composition") {
  std::mt19937_64 rng(999);
  const ColourGroup g(2);
  for (int t = 0; t < 1000; ++t) {
    const Colour a = random_colour(rng, 2);
    const Colour b = random_colour(rng, 2);
    const ModelParams p = H4Params{testutil::random_param(rng, std::log(2.0))};

    const auto lhs = std::get<H4Params>(act_params(p, g.compose(a, b))).z;
    const auto rhs = std::get<H4Params>(act_params(act_params(p, b), a)).z;
    CHECK(rel_diff(lhs, rhs) < 1e-14);
  }
}

TEST_CASE("identity colour acts trivially, bit for bit") {
  const ModelParams p = H4Params{{0.8125, -0.375}};
  const auto moved = std::get<H4Params>(act_params(p, Colour::identity(2)));
  CHECK(moved.z.real() == 0.8125);
  CHECK(moved.z.imag() == -0.375);
}

TEST_CASE("parse_complex accepts the CLI forms") {
  CHECK(parse_complex("1.7") == cscalar{1.7, 0.0});
  CHECK(parse_complex("-1.1") == cscalar{-1.1, 0.0});
  CHECK(parse_complex("2+0i") == cscalar{2.0, 0.0});
  CHECK(parse_complex("1-2i") == cscalar{1.0, -2.0});
  CHECK(parse_complex("2i") == cscalar{0.0, 2.0});
  CHECK(parse_complex("-i") == cscalar{0.0, -1.0});
  CHECK(parse_complex("1e-3+2e+4i") == cscalar{1e-3, 2e4});
  CHECK_THROWS_AS((void)parse_complex("abc"), InvalidParameter);
  CHECK_THROWS_AS((void)parse_complex(""), InvalidParameter);
}

TEST_CASE("parse_colour handles one and two components") {
  CHECK(parse_colour("0.3") == Colour(cscalar{0.3, 0.0}));
  CHECK(parse_colour("2+0i,0.5+0i") == Colour({2.0, 0.0}, {0.5, 0.0}));
  CHECK_THROWS_AS((void)parse_colour("1,2,3"), InvalidParameter);
  CHECK_THROWS_AS((void)parse_colour("0"), ZeroColour);
}
