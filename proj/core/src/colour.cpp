#include "chopf/colour.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace chopf {

Colour ColourGroup::compose(const Colour& a, const Colour& b) const {
  check(a);
  check(b);
  std::vector<cscalar> out(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    out[i] = a[i] * b[i];
    if (out[i] == cscalar{}) throw ZeroColour("colour product underflowed to zero");
  }
  return Colour(std::move(out));
}

Colour ColourGroup::inverse(const Colour& a) const {
  check(a);
  std::vector<cscalar> out(arity_);
  for (std::size_t i = 0; i < arity_; ++i) out[i] = 1.0 / a[i];
  return Colour(std::move(out));
}

Colour compose_colours(const Colour& a, const Colour& b) {
  return ColourGroup(a.arity()).compose(a, b);
}

Colour inverse_colour(const Colour& a) { return ColourGroup(a.arity()).inverse(a); }

Colour two_index_colour(const Colour& up, const Colour& down) {
  return ColourGroup(up.arity()).two_index(up, down);
}

ModelParams act_params(const ModelParams& p, const Colour& nu) {
  if (std::holds_alternative<Gl2Params>(p)) {
    if (nu.arity() != 1) throw DimensionMismatch("gl2 colour must have one component");
    return p;  // fixed-parameter case
  }
  if (nu.arity() != 2) throw DimensionMismatch("h4 colour must have two components");
  const auto& h = std::get<H4Params>(p);
  return H4Params{h.z * nu[0] * nu[1]};
}

std::size_t colour_arity(const ModelParams& p) {
  return std::holds_alternative<Gl2Params>(p) ? 1 : 2;
}

const char* model_name(const ModelParams& p) {
  return std::holds_alternative<Gl2Params>(p) ? "gl2" : "h4";
}

namespace {

double parse_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);  // from_chars rejects '+'
  if (text.empty()) throw InvalidParameter("empty number");
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw InvalidParameter("cannot parse number '" + std::string(text) + "'");
  return value;
}

}  // namespace

cscalar parse_complex(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw InvalidParameter("empty complex literal");

  if (t.back() != 'i' && t.back() != 'I') return {parse_double(t), 0.0};

  t.pop_back();  // drop the trailing i
  // Find the sign splitting real and imaginary parts; skip a leading sign and
  // signs that belong to an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < t.size(); ++k) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') split = k;
  }
  if (split == std::string::npos) {
    if (t.empty() || t == "+" || t == "-") return {0.0, t == "-" ? -1.0 : 1.0};
    return {0.0, parse_double(t)};
  }
  const std::string re = t.substr(0, split);
  std::string im = t.substr(split);
  if (im == "+" || im == "-") im += "1";
  return {parse_double(re), parse_double(im)};
}

Colour parse_colour(std::string_view text) {
  std::vector<cscalar> comps;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      comps.push_back(parse_complex(text.substr(start)));
      break;
    }
    comps.push_back(parse_complex(text.substr(start, comma - start)));
    start = comma + 1;
  }
  if (comps.size() > 2) throw InvalidParameter("colours have at most two components");
  return Colour(std::move(comps));
}

}  // namespace chopf
