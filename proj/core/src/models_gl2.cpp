#include <cmath>
#include <string>

#include "chopf/models.hpp"

namespace chopf {

cscalar q_number(cscalar x, cscalar q) {
  if (q == cscalar{}) throw InvalidParameter("q_number: q must be nonzero");
  const double gap = std::abs(q * q - 1.0);
  if (gap < 1e-12) return x;  // classical limit
  if (gap < 1e-8)
    throw InvalidParameter("q_number: |q^2-1| = " + std::to_string(gap) +
                           " is inside the cancellation band");
  const cscalar lq = std::log(q);
  return (std::exp(x * lq) - std::exp(-x * lq)) / (q - 1.0 / q);
}

cscalar q_factorial(int n, cscalar q) {
  cscalar out{1.0, 0.0};
  for (int k = 1; k <= n; ++k) out *= q_number(cscalar(k, 0.0), q);
  return out;
}

namespace gl2 {

namespace {

int half_integer_doubled(double j) {
  const double twoj = 2.0 * j;
  const double rounded = std::round(twoj);
  if (std::abs(twoj - rounded) > 1e-9 || rounded < 0.0 || j > max_spin)
    throw InvalidSpin("spin must be a half-integer in [0, " + std::to_string(max_spin) + "]");
  return static_cast<int>(rounded);
}

void check_arity(const Colour& c) {
  if (c.arity() != 1) throw DimensionMismatch("gl2 colours have one component");
}

cscalar log_checked(cscalar v, const char* name) {
  if (v == cscalar{}) throw InvalidParameter(std::string(name) + " must be nonzero");
  return std::log(v);
}

}  // namespace

Representation representation(double j, cscalar q, cscalar zeta) {
  const int twoj = half_integer_doubled(j);
  const std::size_t dim = static_cast<std::size_t>(twoj) + 1;
  Representation rep(dim);

  CMatrix j3(dim, dim), jp(dim, dim), jm(dim, dim), zz(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    j3(k, k) = cscalar(j - static_cast<double>(k), 0.0);
    zz(k, k) = zeta;
  }
  // basis index k carries weight m = j - k; J+ maps k -> k-1
  for (std::size_t k = 1; k < dim; ++k) {
    const cscalar c = std::sqrt(q_number(cscalar(static_cast<double>(k), 0.0), q) *
                                q_number(cscalar(static_cast<double>(twoj + 1 - k), 0.0), q));
    jp(k - 1, k) = c;
    jm(k, k - 1) = c;
  }

  rep.set(GenId::J3, std::move(j3));
  rep.set(GenId::Jp, std::move(jp));
  rep.set(GenId::Jm, std::move(jm));
  rep.set(GenId::Z, std::move(zz));
  return rep;
}

Maps::Maps(const Params& p)
    : p_(p), lq_(log_checked(p.q, "q")), ls_(log_checked(p.s, "s")) {}

cscalar Maps::sigma_scale(const Colour& nu, GenId g) const {
  check_arity(nu);
  switch (g) {
    case GenId::J3:
    case GenId::Jp:
    case GenId::Jm: return {1.0, 0.0};
    case GenId::Z: return nu[0];
    default: throw UnknownGenerator("gl2 has no generator " + std::string(to_string(g)));
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
  const cscalar l = la[0], m = mu[0], n = nu[0];
  switch (g) {
    case GenId::J3:
      return {WordPair{1.0, make_word(1.0, {Atom::gen(GenId::J3)}), Word{}},
              WordPair{1.0, Word{}, make_word(1.0, {Atom::gen(GenId::J3)})}};
    case GenId::Z:
      return {WordPair{l / n, make_word(1.0, {Atom::gen(GenId::Z)}), Word{}},
              WordPair{m / n, Word{}, make_word(1.0, {Atom::gen(GenId::Z)})}};
    case GenId::Jp:
      // J+ (x) q^J3 (s/q)^(+mu Z)  +  q^-J3 (qs)^(+la Z) (x) J+
      return {WordPair{1.0, make_word(1.0, {Atom::gen(GenId::Jp)}),
                       make_word(1.0, {Atom::expgen(lq_, GenId::J3),
                                       Atom::expgen(m * (ls_ - lq_), GenId::Z)})},
              WordPair{1.0,
                       make_word(1.0, {Atom::expgen(-lq_, GenId::J3),
                                       Atom::expgen(l * (lq_ + ls_), GenId::Z)}),
                       make_word(1.0, {Atom::gen(GenId::Jp)})}};
    case GenId::Jm:
      return {WordPair{1.0, make_word(1.0, {Atom::gen(GenId::Jm)}),
                       make_word(1.0, {Atom::expgen(lq_, GenId::J3),
                                       Atom::expgen(-m * (ls_ - lq_), GenId::Z)})},
              WordPair{1.0,
                       make_word(1.0, {Atom::expgen(-lq_, GenId::J3),
                                       Atom::expgen(-l * (lq_ + ls_), GenId::Z)}),
                       make_word(1.0, {Atom::gen(GenId::Jm)})}};
    default: throw UnknownGenerator("gl2 has no generator " + std::string(to_string(g)));
  }
}

Element Maps::antipode_gen(const Colour& mu, const Colour& nu, GenId g) const {
  check_arity(mu);
  check_arity(nu);
  const cscalar m = mu[0], n = nu[0];
  switch (g) {
    case GenId::J3: return Element{{make_word(-1.0, {Atom::gen(GenId::J3)})}};
    case GenId::Z: return Element{{make_word(-m / n, {Atom::gen(GenId::Z)})}};
    case GenId::Jp:
      // -q s^(-2 mu Z) J+
      return Element{{make_word(-p_.q, {Atom::expgen(-2.0 * m * ls_, GenId::Z),
                                        Atom::gen(GenId::Jp)})}};
    case GenId::Jm:
      return Element{{make_word(-1.0 / p_.q, {Atom::expgen(2.0 * m * ls_, GenId::Z),
                                              Atom::gen(GenId::Jm)})}};
    default: throw UnknownGenerator("gl2 has no generator " + std::string(to_string(g)));
  }
}

TensorExpr universal_r(const Params& p, cscalar la, cscalar mu, double jl, double jr) {
  const cscalar lq = log_checked(p.q, "q");
  const cscalar ls = log_checked(p.s, "s");
  const int nmax = std::min(half_integer_doubled(jl), half_integer_doubled(jr));

  TensorExpr x;
  x.factors.push_back(ExpBilinear{2.0 * lq, GenId::J3, GenId::J3});
  x.factors.push_back(ExpBilinear{-2.0 * la * lq, GenId::Z, GenId::J3});
  x.factors.push_back(ExpBilinear{2.0 * mu * lq, GenId::J3, GenId::Z});

  const cscalar base = 1.0 - 1.0 / (p.q * p.q);
  WordPairSum series;
  for (int n = 0; n <= nmax; ++n) {
    cscalar coeff{1.0, 0.0};
    for (int k = 0; k < n; ++k) coeff *= base;
    coeff *= std::exp(0.5 * static_cast<double>(n) * static_cast<double>(n - 1) * lq);
    coeff /= q_factorial(n, p.q);

    Word left, right;
    for (int k = 0; k < n; ++k) {
      left.atoms.push_back(Atom::expgen(lq, GenId::J3));
      left.atoms.push_back(Atom::expgen(-la * (lq + ls), GenId::Z));
      left.atoms.push_back(Atom::gen(GenId::Jp));
      right.atoms.push_back(Atom::expgen(-lq, GenId::J3));
      right.atoms.push_back(Atom::expgen(mu * (ls - lq), GenId::Z));
      right.atoms.push_back(Atom::gen(GenId::Jm));
    }
    series.push_back(WordPair{coeff, std::move(left), std::move(right)});
  }
  x.factors.push_back(std::move(series));
  return x;
}

CMatrix closed_form_r4(const Params& p, cscalar la, cscalar mu) {
  const cscalar lq = log_checked(p.q, "q");
  const cscalar ls = log_checked(p.s, "s");
  CMatrix r(4, 4);
  r(0, 0) = std::exp((1.0 - la + mu) * lq);
  r(1, 1) = std::exp((la + mu) * lq);
  r(1, 2) = (p.q - 1.0 / p.q) * std::exp((-la + mu) * ls);
  r(2, 2) = std::exp(-(la + mu) * lq);
  r(3, 3) = std::exp((1.0 + la - mu) * lq);
  return r;
}

CMatrix r_matrix(const Params& p, cscalar la, cscalar mu, double jl, double jr, cscalar zeta,
                 bool renormalize) {
  const Representation repL = representation(jl, p.q, zeta);
  const Representation repR = representation(jr, p.q, zeta);
  CMatrix r = eval_tensor_expr(universal_r(p, la, mu, jl, jr), repL, repR);
  if (renormalize) r *= std::exp(0.5 * std::log(p.q));
  return r;
}

}  // namespace gl2

}  // namespace chopf
