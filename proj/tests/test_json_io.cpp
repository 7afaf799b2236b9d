#include <doctest.h>

#include "chopf/json_io.hpp"
#include "chopf/models.hpp"
#include "chopf/version.hpp"
#include "test_util.hpp"

using namespace chopf;

TEST_CASE("matrix documents round-trip bit-exactly") {
  std::mt19937_64 rng(12);
  io::MatrixDocument doc;
  doc.model = "gl2";
  doc.params = Gl2Params{{1.7, 0.3}, {0.6, -0.1}};
  doc.colours = {Colour(cscalar{0.3, 1e-17}), Colour(cscalar{-1.1, 0.0})};
  doc.spins = {0.5, 0.5};
  doc.renormalized = true;
  doc.tool_version = version;
  doc.matrix = testutil::random_matrix(rng, 4, 4, 10.0);
  doc.matrix(0, 0) = cscalar{0.1 + 0.2, 1.0 / 3.0};  // awkward decimals on purpose

  const std::string text = io::to_json(doc);
  const io::MatrixDocument back = io::matrix_document_from_json(text);

  CHECK(back.matrix == doc.matrix);  // bitwise
  CHECK(back.model == doc.model);
  CHECK(std::get<Gl2Params>(back.params).q == cscalar{1.7, 0.3});
  CHECK(back.colours == doc.colours);
  CHECK(back.spins == doc.spins);
  CHECK(back.renormalized == doc.renormalized);
  CHECK(back.tool_version == doc.tool_version);

  // a second write is byte-identical
  CHECK(io::to_json(back) == text);
}

TEST_CASE("h4 documents carry z and two-component colours") {
  io::MatrixDocument doc;
  doc.model = "h4";
  doc.params = H4Params{{0.8, 0.0}};
  doc.colours = {Colour({2.0, 0.0}, {0.5, 0.0}), Colour::identity(2)};
  doc.matrix = h4::closed_form_r9(H4Params{{0.8, 0.0}}, Colour({2.0, 0.0}, {0.5, 0.0}),
                                  Colour::identity(2));
  doc.tool_version = version;

  const io::MatrixDocument back = io::matrix_document_from_json(io::to_json(doc));
  CHECK(back.matrix == doc.matrix);
  CHECK(std::get<H4Params>(back.params).z == cscalar{0.8, 0.0});
  CHECK(back.colours[0].arity() == 2);
}

TEST_CASE("reports serialize with the expected fields") {
  verify::CheckReport r;
  r.check_id = "ybe";
  r.model = "h4";
  r.params = H4Params{{0.8, 0.0}};
  r.colours = {Colour::identity(2)};
  r.residual = 1.5e-13;
  r.tol = 1e-10;
  r.pass = true;
  r.seed = 42;

  const std::string text = io::report_to_json({r});
  CHECK(text.find("\"check_id\": \"ybe\"") != std::string::npos);
  CHECK(text.find("\"model\": \"h4\"") != std::string::npos);
  CHECK(text.find("\"pass\": true") != std::string::npos);
  CHECK(text.find("\"seed\": 42") != std::string::npos);
  CHECK(text.find("\"z\"") != std::string::npos);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS((void)io::matrix_document_from_json("{\"rows\": 2}"));
  CHECK_THROWS_AS((void)io::matrix_document_from_json(
                      "{\"rows\": 2, \"cols\": 2, \"data\": [[1,0]], \"meta\": {}}"),
                  DimensionMismatch);
}
