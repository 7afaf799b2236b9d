#pragma once

#include "chopf/cmatrix.hpp"
#include "chopf/colour.hpp"
#include "chopf/hopfsym.hpp"

namespace chopf {

/// Symmetric q-number [x]_q = (q^x - q^-x)/(q - q^-1). Returns x when
/// |q^2 - 1| < 1e-12 (removable singularity at the classical point); throws
/// InvalidParameter for 1e-12 <= |q^2 - 1| < 1e-8, where the formula loses
/// too many digits to cancellation.
cscalar q_number(cscalar x, cscalar q);

/// [n]_q! = prod_{k=1..n} [k]_q; the empty product is 1.
cscalar q_factorial(int n, cscalar q);

// ---------------------------------------------------------------------------
// The two-parameter quantum algebra on generators J3, J+, J-, Z.
// Colour: one component nu; the colour action fixes (q, s) and scales Z.
namespace gl2 {

using Params = Gl2Params;

inline constexpr GenId generators[] = {GenId::J3, GenId::Jp, GenId::Jm, GenId::Z};
inline constexpr double max_spin = 6.0;

/// Spin-j representation (dimension 2j+1): D(J3) = diag(j, ..., -j),
/// q-deformed ladder entries sqrt([j-m]_q [j+m+1]_q), D(Z) = zeta * I.
Representation representation(double j, cscalar q, cscalar zeta = cscalar{1.0, 0.0});

class Maps final : public StructureMaps {
 public:
  explicit Maps(const Params& p);

  cscalar sigma_scale(const Colour& nu, GenId g) const override;
  WordPairSum delta_gen(const Colour& la, const Colour& mu, const Colour& nu,
                        GenId g) const override;
  cscalar epsilon_gen(const Colour& nu, GenId g) const override;
  Element antipode_gen(const Colour& mu, const Colour& nu, GenId g) const override;
  std::size_t arity() const override { return 1; }

  const Params& params() const { return p_; }

 private:
  Params p_;
  cscalar lq_, ls_;  // principal logs of q and s
};

/// Coloured universal R as a tensor expression: three bilinear exponentials
/// followed by the nilpotent-truncated ladder series. The series stops at
/// n = min(2*jl, 2*jr), exact because D(J+-)^(2j+1) = 0 on a spin-j leg.
TensorExpr universal_r(const Params& p, cscalar la, cscalar mu, double jl, double jr);

/// The closed-form 4x4 coloured R-matrix (spin-1/2 legs, renormalized by
/// q^(1/2)): diagonal (q^(1-la+mu), q^(la+mu), q^(-la-mu), q^(1+la-mu)) and
/// one off-diagonal entry (q - q^-1) s^(-la+mu).
CMatrix closed_form_r4(const Params& p, cscalar la, cscalar mu);

/// Series R evaluated on spin (jl, jr) legs; renormalize multiplies by
/// q^(1/2) (the spin-1/2 closed-form convention).
CMatrix r_matrix(const Params& p, cscalar la, cscalar mu, double jl, double jr,
                 cscalar zeta = cscalar{1.0, 0.0}, bool renormalize = false);

}  // namespace gl2

// ---------------------------------------------------------------------------
// The standard deformed oscillator algebra on generators N, M, A+, A-.
// Colour: two components (nu_+, nu_-); the colour action sends z to
// nu_+ nu_- z.
namespace h4 {

using Params = H4Params;

inline constexpr GenId generators[] = {GenId::N, GenId::M, GenId::Ap, GenId::Am};

/// The fixed 3x3 representation: N = E22, M = E13, A+ = E23, A- = E12
/// (1-based matrix units).
Representation representation();

class Maps final : public StructureMaps {
 public:
  explicit Maps(const Params& p);

  cscalar sigma_scale(const Colour& nu, GenId g) const override;
  WordPairSum delta_gen(const Colour& la, const Colour& mu, const Colour& nu,
                        GenId g) const override;
  cscalar epsilon_gen(const Colour& nu, GenId g) const override;
  Element antipode_gen(const Colour& mu, const Colour& nu, GenId g) const override;
  std::size_t arity() const override { return 2; }

  const Params& params() const { return p_; }

 private:
  Params p_;
};

/// Coloured universal R: exactly three bilinear exponentials,
/// exp(-la+ la- z M(x)N) exp(-mu+ mu- z N(x)M) exp(2 la- mu+ z A-(x)A+).
TensorExpr universal_r(const Params& p, const Colour& la, const Colour& mu);

/// The closed-form 9x9 block matrix of the coloured R in the 3x3
/// representation.
CMatrix closed_form_r9(const Params& p, const Colour& la, const Colour& mu);

/// Series R evaluated in the 3x3 representation (9x9).
CMatrix r_matrix(const Params& p, const Colour& la, const Colour& mu);

}  // namespace h4

}  // namespace chopf
