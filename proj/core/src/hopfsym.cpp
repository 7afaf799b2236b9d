#include "chopf/hopfsym.hpp"

#include <string>
#include <utility>

namespace chopf {

std::string_view to_string(GenId g) {
  switch (g) {
    case GenId::J3: return "J3";
    case GenId::Jp: return "J+";
    case GenId::Jm: return "J-";
    case GenId::Z: return "Z";
    case GenId::N: return "N";
    case GenId::M: return "M";
    case GenId::Ap: return "A+";
    case GenId::Am: return "A-";
  }
  return "?";
}

Word make_word(cscalar coeff, std::initializer_list<Atom> atoms) {
  Word w;
  w.coeff = coeff;
  w.atoms.assign(atoms);
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.coeff = a.coeff * b.coeff;
  w.atoms = a.atoms;
  w.atoms.insert(w.atoms.end(), b.atoms.begin(), b.atoms.end());
  return w;
}

Element mul(const Element& a, const Element& b) {
  Element out;
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& wa : a.terms)
    for (const auto& wb : b.terms) out.terms.push_back(concat(wa, wb));
  return out;
}

void Representation::set(GenId g, CMatrix m) {
  if (m.rows() != dim_ || m.cols() != dim_)
    throw DimensionMismatch("representation matrix must be " + std::to_string(dim_) + "x" +
                            std::to_string(dim_));
  gens_[g] = std::move(m);
}

const CMatrix& Representation::matrix(GenId g) const {
  const auto it = gens_.find(g);
  if (it == gens_.end())
    throw UnknownGenerator("generator " + std::string(to_string(g)) + " not in representation");
  return it->second;
}

// ---------------------------------------------------------------------------
// structure-map extensions

namespace {

/// If e is a single word c * [Gen(g)], return c; used to push sigma and the
/// antipode through exponential atoms.
bool pure_scaling(const Element& e, GenId g, cscalar& scale) {
  if (e.terms.size() != 1) return false;
  const Word& w = e.terms.front();
  if (w.atoms.size() != 1 || w.atoms.front().is_exp() || w.atoms.front().id != g) return false;
  scale = w.coeff;
  return true;
}

}  // namespace

Element StructureMaps::sigma(const Colour& nu, const Atom& a) const {
  const cscalar scale = sigma_scale(nu, a.id);
  if (!a.is_exp()) return Element{{make_word(scale, {Atom::gen(a.id)})}};
  return Element{{make_word(1.0, {Atom::expgen(a.t * scale, a.id)})}};
}

cscalar StructureMaps::epsilon(const Colour& nu, const Atom& a) const {
  const cscalar e = epsilon_gen(nu, a.id);
  if (!a.is_exp()) return e;
  return std::exp(a.t * e);
}

Element StructureMaps::antipode(const Colour& mu, const Colour& nu, const Atom& a) const {
  Element image = antipode_gen(mu, nu, a.id);
  if (!a.is_exp()) return image;
  cscalar scale{};
  if (!pure_scaling(image, a.id, scale))
    throw UnknownGenerator("antipode of exp(" + std::string(to_string(a.id)) +
                           ") needs a pure-scaling generator image");
  return Element{{make_word(1.0, {Atom::expgen(a.t * scale, a.id)})}};
}

WordPairSum StructureMaps::delta(const Colour& la, const Colour& mu, const Colour& nu,
                                 const Atom& a) const {
  if (a.is_exp())
    throw UnknownGenerator("symbolic coproduct of an exponential atom is not defined");
  return delta_gen(la, mu, nu, a.id);
}

Element StructureMaps::extend_sigma(const Colour& nu, const Word& w) const {
  Word out;
  out.coeff = w.coeff;
  out.atoms.reserve(w.atoms.size());
  for (const auto& a : w.atoms) {
    const cscalar scale = sigma_scale(nu, a.id);
    if (a.is_exp()) {
      out.atoms.push_back(Atom::expgen(a.t * scale, a.id));
    } else {
      out.coeff *= scale;
      out.atoms.push_back(Atom::gen(a.id));
    }
  }
  return Element{{std::move(out)}};
}

Element StructureMaps::extend_sigma(const Colour& nu, const Element& e) const {
  Element out;
  for (const auto& w : e.terms) {
    Element one = extend_sigma(nu, w);
    out.terms.insert(out.terms.end(), one.terms.begin(), one.terms.end());
  }
  return out;
}

cscalar StructureMaps::extend_epsilon(const Colour& nu, const Word& w) const {
  cscalar value = w.coeff;
  for (const auto& a : w.atoms) value *= epsilon(nu, a);
  return value;
}

Element StructureMaps::extend_antipode(const Colour& mu, const Colour& nu, const Word& w) const {
  // anti-homomorphism: images multiply in reversed atom order
  Element acc{{Word{w.coeff, {}}}};
  for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it)
    acc = mul(acc, antipode(mu, nu, *it));
  return acc;
}

WordPairSum StructureMaps::extend_delta(const Colour& la, const Colour& mu, const Colour& nu,
                                        const Word& w) const {
  WordPairSum acc{WordPair{w.coeff, Word{}, Word{}}};
  for (const auto& a : w.atoms) {
    const WordPairSum image = delta(la, mu, nu, a);
    WordPairSum next;
    next.reserve(acc.size() * image.size());
    for (const auto& p : acc)
      for (const auto& q : image)
        next.push_back(WordPair{p.coeff * q.coeff, concat(p.left, q.left),
                                concat(p.right, q.right)});
    acc = std::move(next);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// evaluation

CMatrix eval_word(const Word& w, const Representation& rep) {
  CMatrix acc = w.coeff * CMatrix::identity(rep.dim());
  for (const auto& a : w.atoms) {
    if (a.is_exp())
      acc = acc * matexp(a.t * rep.matrix(a.id));
    else
      acc = acc * rep.matrix(a.id);
  }
  return acc;
}

CMatrix eval_element(const Element& e, const Representation& rep) {
  CMatrix acc(rep.dim(), rep.dim());
  for (const auto& w : e.terms) acc += eval_word(w, rep);
  return acc;
}

CMatrix LegMap::atom_matrix(const Atom& a) const {
  if (a.is_exp()) return matexp(a.t * gen_matrix(a.id));
  return gen_matrix(a.id);
}

CMatrix LegMap::word_matrix(const Word& w) const {
  CMatrix acc = w.coeff * CMatrix::identity(dim());
  for (const auto& a : w.atoms) acc = acc * atom_matrix(a);
  return acc;
}

CMatrix LegMap::element_matrix(const Element& e) const {
  CMatrix acc(dim(), dim());
  for (const auto& w : e.terms) acc += word_matrix(w);
  return acc;
}

CMatrix DeltaLeg::gen_matrix(GenId g) const {
  const WordPairSum image = maps_->delta_gen(la_, mu_, nu_, g);
  CMatrix acc(dim(), dim());
  for (const auto& p : image)
    acc += p.coeff * kron(eval_word(p.left, *repL_), eval_word(p.right, *repR_));
  return acc;
}

CMatrix apply_pair_hom(const LegMap& f, const LegMap& g, const WordPairSum& s) {
  CMatrix acc(f.dim() * g.dim(), f.dim() * g.dim());
  for (const auto& p : s) acc += p.coeff * kron(f.word_matrix(p.left), g.word_matrix(p.right));
  return acc;
}

CMatrix apply_pair_hom(const LegMap& f, const LegMap& g, const TensorExpr& x) {
  const std::size_t n = f.dim() * g.dim();
  CMatrix acc = CMatrix::identity(n);
  for (const auto& factor : x.factors) {
    if (const auto* e = std::get_if<ExpBilinear>(&factor)) {
      acc = acc * matexp(e->t * kron(f.gen_matrix(e->left), g.gen_matrix(e->right)));
    } else {
      acc = acc * apply_pair_hom(f, g, std::get<WordPairSum>(factor));
    }
  }
  return acc;
}

CMatrix eval_tensor_expr(const TensorExpr& x, const Representation& repL,
                         const Representation& repR) {
  return apply_pair_hom(RepLeg(repL), RepLeg(repR), x);
}

CMatrix apply_antipode_pair(const StructureMaps& maps, const Colour& s_target,
                            const Colour& s_source, const Representation& repS,
                            const SigmaLeg& sigma, const TensorExpr& x) {
  const std::size_t d1 = repS.dim();
  const std::size_t d2 = sigma.dim();
  CMatrix acc = CMatrix::identity(d1 * d2);
  for (const auto& factor : x.factors) {
    CMatrix image;
    if (const auto* e = std::get_if<ExpBilinear>(&factor)) {
      const CMatrix ms = eval_element(maps.antipode_gen(s_target, s_source, e->left), repS);
      image = matexp(e->t * kron(ms, sigma.gen_matrix(e->right)));
    } else {
      image = CMatrix(d1 * d2, d1 * d2);
      for (const auto& p : std::get<WordPairSum>(factor)) {
        const CMatrix ms = eval_element(maps.extend_antipode(s_target, s_source, p.left), repS);
        image += p.coeff * kron(ms, sigma.word_matrix(p.right));
      }
    }
    acc = rev1_product(acc, image, d1, d2);
  }
  return acc;
}

}  // namespace chopf
