#pragma once

#include <string>
#include <vector>

#include "chopf/cmatrix.hpp"
#include "chopf/colour.hpp"
#include "chopf/verify.hpp"

namespace chopf::io {

/// A matrix export: entries plus the inputs that produced it. Complex values
/// serialize as [re, im] pairs; round-trips are bit-exact.
struct MatrixDocument {
  CMatrix matrix;
  std::string model;
  ModelParams params;
  std::vector<Colour> colours;
  std::vector<double> spins;
  bool renormalized = false;
  std::string tool_version;
};

std::string to_json(const MatrixDocument& doc);
MatrixDocument matrix_document_from_json(const std::string& text);

/// Serialize a verification run as a JSON array of check objects.
std::string report_to_json(const std::vector<verify::CheckReport>& reports);

}  // namespace chopf::io
