#include <string>

#include "chopf/models.hpp"

namespace chopf::h4 {

namespace {

void check_arity(const Colour& c) {
  if (c.arity() != 2) throw DimensionMismatch("h4 colours have two components (nu+, nu-)");
}

void check_params(const Params& p) {
  if (p.z == cscalar{}) throw InvalidParameter("z must be nonzero");
}

}  // namespace

Representation representation() {
  Representation rep(3);
  CMatrix n(3, 3), m(3, 3), ap(3, 3), am(3, 3);
  n(1, 1) = 1.0;
  m(0, 2) = 1.0;
  ap(1, 2) = 1.0;
  am(0, 1) = 1.0;
  rep.set(GenId::N, std::move(n));
  rep.set(GenId::M, std::move(m));
  rep.set(GenId::Ap, std::move(ap));
  rep.set(GenId::Am, std::move(am));
  return rep;
}

Maps::Maps(const Params& p) : p_(p) { check_params(p); }

cscalar Maps::sigma_scale(const Colour& nu, GenId g) const {
  check_arity(nu);
  switch (g) {
    case GenId::N: return {1.0, 0.0};
    case GenId::M: return nu[0] * nu[1];
    case GenId::Ap: return nu[0];
    case GenId::Am: return nu[1];
    default: throw UnknownGenerator("h4 has no generator " + std::string(to_string(g)));
  }
}

cscalar Maps::epsilon_gen(const Colour& nu, GenId g) const {
  check_arity(nu);
  sigma_scale(nu, g);  // validates g
  return {};
}

WordPairSum Maps::delta_gen(const Colour& la, const Colour& mu, const Colour& nu,
                            GenId g) const {
  check_arity(la);
  check_arity(mu);
  check_arity(nu);
  const cscalar lp = la[0], lm = la[1], mp = mu[0], mm = mu[1];
  const cscalar nprod = nu[0] * nu[1];
  switch (g) {
    case GenId::N:
      return {WordPair{1.0, make_word(1.0, {Atom::gen(GenId::N)}), Word{}},
              WordPair{1.0, Word{}, make_word(1.0, {Atom::gen(GenId::N)})}};
    case GenId::M:
      return {WordPair{lp * lm / nprod, make_word(1.0, {Atom::gen(GenId::M)}), Word{}},
              WordPair{mp * mm / nprod, Word{}, make_word(1.0, {Atom::gen(GenId::M)})}};
    case GenId::Ap:
      // (la+/nu+) A+ (x) 1 + (mu+/nu+) e^(-la+ la- z M) (x) A+
      return {WordPair{lp / nu[0], make_word(1.0, {Atom::gen(GenId::Ap)}), Word{}},
              WordPair{mp / nu[0], make_word(1.0, {Atom::expgen(-lp * lm * p_.z, GenId::M)}),
                       make_word(1.0, {Atom::gen(GenId::Ap)})}};
    case GenId::Am:
      // (la-/nu-) A- (x) e^(mu+ mu- z M) + (mu-/nu-) 1 (x) A-
      return {WordPair{lm / nu[1], make_word(1.0, {Atom::gen(GenId::Am)}),
                       make_word(1.0, {Atom::expgen(mp * mm * p_.z, GenId::M)})},
              WordPair{mm / nu[1], Word{}, make_word(1.0, {Atom::gen(GenId::Am)})}};
    default: throw UnknownGenerator("h4 has no generator " + std::string(to_string(g)));
  }
}

Element Maps::antipode_gen(const Colour& mu, const Colour& nu, GenId g) const {
  check_arity(mu);
  check_arity(nu);
  const cscalar mp = mu[0], mm = mu[1];
  switch (g) {
    case GenId::N: return Element{{make_word(-1.0, {Atom::gen(GenId::N)})}};
    case GenId::M:
      return Element{{make_word(-mp * mm / (nu[0] * nu[1]), {Atom::gen(GenId::M)})}};
    case GenId::Ap:
      return Element{{make_word(-mp / nu[0], {Atom::gen(GenId::Ap),
                                              Atom::expgen(mp * mm * p_.z, GenId::M)})}};
    case GenId::Am:
      return Element{{make_word(-mm / nu[1], {Atom::gen(GenId::Am),
                                              Atom::expgen(-mp * mm * p_.z, GenId::M)})}};
    default: throw UnknownGenerator("h4 has no generator " + std::string(to_string(g)));
  }
}

TensorExpr universal_r(const Params& p, const Colour& la, const Colour& mu) {
  check_params(p);
  check_arity(la);
  check_arity(mu);
  TensorExpr x;
  x.factors.push_back(ExpBilinear{-la[0] * la[1] * p.z, GenId::M, GenId::N});
  x.factors.push_back(ExpBilinear{-mu[0] * mu[1] * p.z, GenId::N, GenId::M});
  x.factors.push_back(ExpBilinear{2.0 * la[1] * mu[0] * p.z, GenId::Am, GenId::Ap});
  return x;
}

CMatrix closed_form_r9(const Params& p, const Colour& la, const Colour& mu) {
  check_params(p);
  check_arity(la);
  check_arity(mu);
  const Representation rep = representation();
  const CMatrix& dn = rep.matrix(GenId::N);
  const CMatrix& dm = rep.matrix(GenId::M);
  const CMatrix& dap = rep.matrix(GenId::Ap);

  CMatrix r = CMatrix::identity(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      r(i, 3 + j) += 2.0 * la[1] * mu[0] * p.z * dap(i, j);      // block (1,2)
      r(i, 6 + j) += -la[0] * la[1] * p.z * dn(i, j);            // block (1,3)
      r(3 + i, 3 + j) += -mu[0] * mu[1] * p.z * dm(i, j);        // block (2,2)
    }
  return r;
}

CMatrix r_matrix(const Params& p, const Colour& la, const Colour& mu) {
  const Representation rep = representation();
  return eval_tensor_expr(universal_r(p, la, mu), rep, rep);
}

}  // namespace chopf::h4
