#include "chopf/json_io.hpp"

#include <json.hpp>

namespace chopf::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_json(cscalar v) { return ordered_json::array({v.real(), v.imag()}); }

cscalar complex_from(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidParameter("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

ordered_json params_json(const ModelParams& p) {
  ordered_json j;
  if (const auto* g = std::get_if<Gl2Params>(&p)) {
    j["q"] = complex_json(g->q);
    j["s"] = complex_json(g->s);
  } else {
    j["z"] = complex_json(std::get<H4Params>(p).z);
  }
  return j;
}

ModelParams params_from(const std::string& model, const ordered_json& j) {
  if (model == "gl2") return Gl2Params{complex_from(j.at("q")), complex_from(j.at("s"))};
  if (model == "h4") return H4Params{complex_from(j.at("z"))};
  throw InvalidParameter("unknown model '" + model + "'");
}

ordered_json colour_json(const Colour& c) {
  ordered_json j = ordered_json::array();
  for (const auto& v : c.components()) j.push_back(complex_json(v));
  return j;
}

Colour colour_from(const ordered_json& j) {
  std::vector<cscalar> comps;
  for (const auto& v : j) comps.push_back(complex_from(v));
  return Colour(std::move(comps));
}

}  // namespace

std::string to_json(const MatrixDocument& doc) {
  ordered_json j;
  j["rows"] = doc.matrix.rows();
  j["cols"] = doc.matrix.cols();
  ordered_json data = ordered_json::array();
  for (const auto& v : doc.matrix.data()) data.push_back(complex_json(v));
  j["data"] = std::move(data);

  ordered_json meta;
  meta["model"] = doc.model;
  meta["params"] = params_json(doc.params);
  ordered_json colours = ordered_json::array();
  for (const auto& c : doc.colours) colours.push_back(colour_json(c));
  meta["colours"] = std::move(colours);
  meta["spins"] = doc.spins;
  meta["renormalized"] = doc.renormalized;
  meta["tool_version"] = doc.tool_version;
  j["meta"] = std::move(meta);
  return j.dump(2) + "\n";
}

MatrixDocument matrix_document_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  MatrixDocument doc;
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const auto& data = j.at("data");
  if (data.size() != rows * cols) throw DimensionMismatch("data length must be rows*cols");
  doc.matrix = CMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) doc.matrix(i, k) = complex_from(data[i * cols + k]);

  const auto& meta = j.at("meta");
  doc.model = meta.at("model").get<std::string>();
  doc.params = params_from(doc.model, meta.at("params"));
  for (const auto& c : meta.at("colours")) doc.colours.push_back(colour_from(c));
  doc.spins = meta.at("spins").get<std::vector<double>>();
  doc.renormalized = meta.at("renormalized").get<bool>();
  doc.tool_version = meta.at("tool_version").get<std::string>();
  return doc;
}

std::string report_to_json(const std::vector<verify::CheckReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["check_id"] = r.check_id;
    j["model"] = r.model;
    j["params"] = params_json(r.params);
    ordered_json colours = ordered_json::array();
    for (const auto& c : r.colours) colours.push_back(colour_json(c));
    j["colours"] = std::move(colours);
    j["residual"] = r.residual;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    if (r.seed) j["seed"] = *r.seed;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace chopf::io
