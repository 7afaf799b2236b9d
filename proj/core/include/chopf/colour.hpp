#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chopf/cmatrix.hpp"
#include "chopf/errors.hpp"

namespace chopf {

/// A colour parameter: one nonzero complex component for the gl(2) model,
/// two components (nu_+, nu_-) for the h(4) model.
class Colour {
 public:
  Colour() = default;
  explicit Colour(cscalar c) : comps_{c} { validate(); }
  Colour(cscalar plus, cscalar minus) : comps_{plus, minus} { validate(); }
  explicit Colour(std::vector<cscalar> comps) : comps_(std::move(comps)) { validate(); }

  static Colour identity(std::size_t arity) {
    return Colour(std::vector<cscalar>(arity, cscalar{1.0, 0.0}));
  }

  std::size_t arity() const { return comps_.size(); }
  cscalar operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<cscalar>& components() const { return comps_; }

  friend bool operator==(const Colour&, const Colour&) = default;

 private:
  void validate() const {
    for (const auto& c : comps_)
      if (c == cscalar{}) throw ZeroColour("colour component is zero");
  }

  std::vector<cscalar> comps_;
};

/// The abelian colour group acting on a fixed number of components by
/// componentwise multiplication. Both concrete models use instances of this
/// (arity 1 for gl(2), arity 2 for h(4)).
class ColourGroup {
 public:
  explicit ColourGroup(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }
  Colour identity() const { return Colour::identity(arity_); }

  Colour compose(const Colour& a, const Colour& b) const;
  Colour inverse(const Colour& a) const;

  /// Label of the two-index map sigma^up_down = sigma^up o (sigma^down)^-1.
  Colour two_index(const Colour& up, const Colour& down) const {
    return compose(up, inverse(down));
  }

 private:
  void check(const Colour& a) const {
    if (a.arity() != arity_)
      throw DimensionMismatch("colour arity " + std::to_string(a.arity()) + ", group expects " +
                              std::to_string(arity_));
  }

  std::size_t arity_;
};

/// Convenience wrappers that infer the group from the operands.
Colour compose_colours(const Colour& a, const Colour& b);
Colour inverse_colour(const Colour& a);
Colour two_index_colour(const Colour& up, const Colour& down);

struct Gl2Params {
  cscalar q{1.0, 0.0};
  cscalar s{1.0, 0.0};
};

struct H4Params {
  cscalar z{1.0, 0.0};
};

using ModelParams = std::variant<Gl2Params, H4Params>;

/// Colour action on deformation parameters: identity for gl(2)
/// (fixed-parameter case), z -> nu_+ nu_- z for h(4).
ModelParams act_params(const ModelParams& p, const Colour& nu);

/// Number of colour components the model expects.
std::size_t colour_arity(const ModelParams& p);

const char* model_name(const ModelParams& p);

/// Parse "a", "a+bi", "a-bi", "bi", "i" into a complex scalar.
cscalar parse_complex(std::string_view text);

/// Parse a colour: "a+bi" (one component) or "a+bi,c+di" (two components).
Colour parse_colour(std::string_view text);

}  // namespace chopf
