#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string_view>
#include <variant>
#include <vector>

#include "chopf/cmatrix.hpp"
#include "chopf/colour.hpp"
#include "chopf/errors.hpp"

namespace chopf {

/// Generator ids across both models. A representation only defines the
/// subset belonging to its model.
enum class GenId : std::uint8_t { J3, Jp, Jm, Z, N, M, Ap, Am };

std::string_view to_string(GenId g);

/// A generator or the exponential exp(t*X) of one.
struct Atom {
  static Atom gen(GenId g) { return Atom{g, cscalar{}, false}; }
  static Atom expgen(cscalar t, GenId g) { return Atom{g, t, true}; }

  GenId id{};
  cscalar t{};    // exponent coefficient, used when exp_ is set
  bool exp_ = false;

  bool is_exp() const { return exp_; }
};

/// coeff * (ordered product of atoms); an empty atom list denotes coeff * 1.
struct Word {
  cscalar coeff{1.0, 0.0};
  std::vector<Atom> atoms;
};

Word make_word(cscalar coeff, std::initializer_list<Atom> atoms);
Word concat(const Word& a, const Word& b);

/// Finite sum of words.
struct Element {
  std::vector<Word> terms;
};

Element mul(const Element& a, const Element& b);

/// One term of a two-leg sum: coeff * (left (x) right).
struct WordPair {
  cscalar coeff{1.0, 0.0};
  Word left;
  Word right;
};

using WordPairSum = std::vector<WordPair>;

/// exp(t * X (x) Y).
struct ExpBilinear {
  cscalar t{};
  GenId left{};
  GenId right{};
};

using TensorFactor = std::variant<ExpBilinear, WordPairSum>;

/// Ordered product of two-leg factors; evaluation is the left-to-right
/// matrix product. Universal R-matrices and coproduct images live here.
struct TensorExpr {
  std::vector<TensorFactor> factors;
};

/// Matrices of the generators in one finite-dimensional representation.
class Representation {
 public:
  explicit Representation(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  void set(GenId g, CMatrix m);
  bool has(GenId g) const { return gens_.count(g) != 0; }
  const CMatrix& matrix(GenId g) const;

 private:
  std::size_t dim_;
  std::map<GenId, CMatrix> gens_;
};

/// The coloured structure maps of one model, given by their closed-form
/// images on generators and extended to atoms, words, and elements here.
///
/// Extension rules:
///  - sigma and epsilon are algebra homomorphisms; the antipode is an
///    anti-homomorphism (atom order reverses).
///  - On exponential atoms, sigma and the antipode use exp(t*X) -> exp(t*f(X)),
///    valid because every generator that appears inside an exponential is
///    mapped to a scalar multiple of itself; epsilon(exp(t*X)) = exp(t*eps(X)).
///  - The coproduct of an exponential atom is not expanded symbolically; the
///    evaluation layer applies matexp to the coproduct image of the generator.
class StructureMaps {
 public:
  virtual ~StructureMaps() = default;

  /// sigma^nu multiplies every generator by a scalar; return that scalar.
  virtual cscalar sigma_scale(const Colour& nu, GenId g) const = 0;
  virtual WordPairSum delta_gen(const Colour& la, const Colour& mu, const Colour& nu,
                                GenId g) const = 0;
  virtual cscalar epsilon_gen(const Colour& nu, GenId g) const = 0;
  virtual Element antipode_gen(const Colour& mu, const Colour& nu, GenId g) const = 0;

  virtual std::size_t arity() const = 0;

  // atom-level images
  Element sigma(const Colour& nu, const Atom& a) const;
  cscalar epsilon(const Colour& nu, const Atom& a) const;
  Element antipode(const Colour& mu, const Colour& nu, const Atom& a) const;
  WordPairSum delta(const Colour& la, const Colour& mu, const Colour& nu, const Atom& a) const;

  // word-level extensions
  Element extend_sigma(const Colour& nu, const Word& w) const;
  cscalar extend_epsilon(const Colour& nu, const Word& w) const;
  Element extend_antipode(const Colour& mu, const Colour& nu, const Word& w) const;
  Element extend_sigma(const Colour& nu, const Element& e) const;

  /// Symbolic coproduct of a word of plain generator atoms, expanded
  /// distributively. Exponential atoms are rejected (they are handled at
  /// matrix level by DeltaLeg).
  WordPairSum extend_delta(const Colour& la, const Colour& mu, const Colour& nu,
                           const Word& w) const;
};

/// Evaluate a word / element / tensor expression in representations.
CMatrix eval_word(const Word& w, const Representation& rep);
CMatrix eval_element(const Element& e, const Representation& rep);
CMatrix eval_tensor_expr(const TensorExpr& x, const Representation& repL,
                         const Representation& repR);

/// One homomorphic map applied to a tensor leg: sigma-type (target one
/// representation), Delta-type (target a pair of representations), or
/// epsilon-type (target the scalars, dimension 1).
class LegMap {
 public:
  virtual ~LegMap() = default;
  virtual std::size_t dim() const = 0;
  virtual CMatrix gen_matrix(GenId g) const = 0;

  CMatrix atom_matrix(const Atom& a) const;
  CMatrix word_matrix(const Word& w) const;
  CMatrix element_matrix(const Element& e) const;
};

/// Plain evaluation leg (sigma with the identity colour).
class RepLeg final : public LegMap {
 public:
  explicit RepLeg(const Representation& rep) : rep_(&rep) {}
  std::size_t dim() const override { return rep_->dim(); }
  CMatrix gen_matrix(GenId g) const override { return rep_->matrix(g); }

 private:
  const Representation* rep_;
};

/// sigma^up_down evaluated in a representation.
class SigmaLeg final : public LegMap {
 public:
  SigmaLeg(const StructureMaps& maps, const Colour& up, const Colour& down,
           const Representation& rep)
      : maps_(&maps), eff_(two_index_colour(up, down)), rep_(&rep) {}
  SigmaLeg(const StructureMaps& maps, const Colour& nu, const Representation& rep)
      : maps_(&maps), eff_(nu), rep_(&rep) {}

  std::size_t dim() const override { return rep_->dim(); }
  CMatrix gen_matrix(GenId g) const override {
    return maps_->sigma_scale(eff_, g) * rep_->matrix(g);
  }
  const Colour& effective_colour() const { return eff_; }

 private:
  const StructureMaps* maps_;
  Colour eff_;
  const Representation* rep_;
};

/// Delta^{la,mu}_{.,nu} evaluated on a pair of representations.
class DeltaLeg final : public LegMap {
 public:
  DeltaLeg(const StructureMaps& maps, const Colour& la, const Colour& mu, const Colour& nu,
           const Representation& repL, const Representation& repR)
      : maps_(&maps), la_(la), mu_(mu), nu_(nu), repL_(&repL), repR_(&repR) {}

  std::size_t dim() const override { return repL_->dim() * repR_->dim(); }
  CMatrix gen_matrix(GenId g) const override;

 private:
  const StructureMaps* maps_;
  Colour la_, mu_, nu_;
  const Representation* repL_;
  const Representation* repR_;
};

/// epsilon_{.,nu} as a 1x1 leg.
class EpsilonLeg final : public LegMap {
 public:
  EpsilonLeg(const StructureMaps& maps, const Colour& nu) : maps_(&maps), nu_(nu) {}
  std::size_t dim() const override { return 1; }
  CMatrix gen_matrix(GenId g) const override {
    CMatrix m(1, 1);
    m(0, 0) = maps_->epsilon_gen(nu_, g);
    return m;
  }

 private:
  const StructureMaps* maps_;
  Colour nu_;
};

/// Apply (f (x) g) to a tensor expression, factor by factor; both legs must
/// be algebra homomorphisms. exp(t*X(x)Y) maps to matexp(t * f(X) (x) g(Y)).
CMatrix apply_pair_hom(const LegMap& f, const LegMap& g, const TensorExpr& x);

/// Apply (f (x) g) to a two-leg sum.
CMatrix apply_pair_hom(const LegMap& f, const LegMap& g, const WordPairSum& s);

/// Apply (S^{s_target}_{.,s_source} (x) sigma) to a tensor expression. The
/// antipode is an anti-homomorphism, so across factors the first legs
/// multiply in reverse order; factors are combined with rev1_product. Within
/// one exponential factor only powers of a single element occur, so the
/// per-factor image is still matexp(t * S(X) (x) sigma(Y)).
CMatrix apply_antipode_pair(const StructureMaps& maps, const Colour& s_target,
                            const Colour& s_source, const Representation& repS,
                            const SigmaLeg& sigma, const TensorExpr& x);

}  // namespace chopf
