#include "chopf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <string_view>
#include <utility>

namespace chopf::verify {

namespace {

/// Model dispatch used by every check.
struct Ctx {
  explicit Ctx(const ModelParams& p) : params(p) {
    if (const auto* g = std::get_if<Gl2Params>(&p)) {
      maps = std::make_unique<gl2::Maps>(*g);
      gens.assign(std::begin(gl2::generators), std::end(gl2::generators));
      is_gl2 = true;
    } else {
      maps = std::make_unique<h4::Maps>(std::get<H4Params>(p));
      gens.assign(std::begin(h4::generators), std::end(h4::generators));
      is_gl2 = false;
    }
  }

  Representation rep(double spin) const {
    if (is_gl2) return gl2::representation(spin, std::get<Gl2Params>(params).q);
    return h4::representation();
  }

  /// Universal R with leg capacities (capl, capr); the series truncation only
  /// matters for gl2, where a leg of capacity j kills ladder powers above 2j.
  TensorExpr r_expr(const Colour& la, const Colour& mu, double capl, double capr) const {
    if (is_gl2) return gl2::universal_r(std::get<Gl2Params>(params), la[0], mu[0], capl, capr);
    return h4::universal_r(std::get<H4Params>(params), la, mu);
  }

  std::size_t arity() const { return is_gl2 ? 1u : 2u; }

  ModelParams params;
  std::unique_ptr<StructureMaps> maps;
  std::vector<GenId> gens;
  bool is_gl2 = false;
};

CheckReport make_report(std::string id, const ModelParams& p, std::vector<Colour> colours,
                        double residual, double tol) {
  CheckReport r;
  r.check_id = std::move(id);
  r.model = model_name(p);
  r.params = p;
  r.colours = std::move(colours);
  r.residual = residual;
  r.tol = tol;
  r.pass = residual < tol;
  return r;
}

CMatrix zero_like(std::size_t n) { return CMatrix(n, n); }

}  // namespace

double ybe_residual(const CMatrix& r12, const CMatrix& r13, const CMatrix& r23,
                    const std::array<std::size_t, 3>& dims) {
  const CMatrix e12 = embed(r12, {1, 2}, dims);
  const CMatrix e13 = embed(r13, {1, 3}, dims);
  const CMatrix e23 = embed(r23, {2, 3}, dims);
  return max_abs_diff(e12 * e13 * e23, e23 * e13 * e12);
}

CheckReport check_coloured_ybe(const ModelParams& p, const Colour& la, const Colour& mu,
                               const Colour& nu, const std::array<double, 3>& spins,
                               double tol) {
  const Ctx ctx(p);
  const Representation r1 = ctx.rep(spins[0]);
  const Representation r2 = ctx.rep(spins[1]);
  const Representation r3 = ctx.rep(spins[2]);
  const CMatrix r12 = eval_tensor_expr(ctx.r_expr(la, mu, spins[0], spins[1]), r1, r2);
  const CMatrix r13 = eval_tensor_expr(ctx.r_expr(la, nu, spins[0], spins[2]), r1, r3);
  const CMatrix r23 = eval_tensor_expr(ctx.r_expr(mu, nu, spins[1], spins[2]), r2, r3);
  const double res = ybe_residual(r12, r13, r23, {r1.dim(), r2.dim(), r3.dim()});
  return make_report("ybe", p, {la, mu, nu}, res, tol);
}

CheckReport check_quasitriangular(const ModelParams& p, const Colour& alpha, const Colour& beta,
                                  const Colour& gamma, const Colour& la, const Colour& mu,
                                  const std::array<double, 3>& spins, double tol) {
  const Ctx ctx(p);
  const double ja = spins[0], jb = spins[1], jc = spins[2];
  const Representation ra = ctx.rep(ja);
  const Representation rb = ctx.rep(jb);
  const Representation rc = ctx.rep(jc);
  const std::array<std::size_t, 3> dims{ra.dim(), rb.dim(), rc.dim()};

  const CMatrix r_ac = eval_tensor_expr(ctx.r_expr(alpha, gamma, ja, jc), ra, rc);
  const CMatrix r_bc = eval_tensor_expr(ctx.r_expr(beta, gamma, jb, jc), rb, rc);
  const CMatrix r_ab = eval_tensor_expr(ctx.r_expr(alpha, beta, ja, jb), ra, rb);

  // (Delta^{a,b}_la (x) sigma^c_mu)(R^{la,mu}) = R^{a,c}_13 R^{b,c}_23
  const CMatrix lhs1 =
      apply_pair_hom(DeltaLeg(*ctx.maps, alpha, beta, la, ra, rb), SigmaLeg(*ctx.maps, gamma, mu, rc),
                     ctx.r_expr(la, mu, ja + jb, jc));
  const CMatrix rhs1 = embed(r_ac, {1, 3}, dims) * embed(r_bc, {2, 3}, dims);

  // (sigma^a_la (x) Delta^{b,c}_mu)(R^{la,mu}) = R^{a,c}_13 R^{a,b}_12
  const CMatrix lhs2 =
      apply_pair_hom(SigmaLeg(*ctx.maps, alpha, la, ra), DeltaLeg(*ctx.maps, beta, gamma, mu, rb, rc),
                     ctx.r_expr(la, mu, ja, jb + jc));
  const CMatrix rhs2 = embed(r_ac, {1, 3}, dims) * embed(r_ab, {1, 2}, dims);

  const double res = std::max(max_abs_diff(lhs1, rhs1), max_abs_diff(lhs2, rhs2));
  return make_report("quasitriangular", p, {alpha, beta, gamma, la, mu}, res, tol);
}

CheckReport check_almost_cocommutative(const ModelParams& p, const Colour& la, const Colour& mu,
                                       const Colour& nu, double spin, double tol) {
  const Ctx ctx(p);
  const Representation rep = ctx.rep(spin);
  const std::size_t d = rep.dim();
  const RepLeg leg(rep);
  const CMatrix r = eval_tensor_expr(ctx.r_expr(la, mu, spin, spin), rep, rep);
  const CMatrix rinv = inverse(r);
  const CMatrix swap = swap_matrix(d, d);

  double res = 0.0;
  for (const GenId a : ctx.gens) {
    const CMatrix flipped = apply_pair_hom(leg, leg, ctx.maps->delta_gen(mu, la, nu, a));
    const CMatrix straight = apply_pair_hom(leg, leg, ctx.maps->delta_gen(la, mu, nu, a));
    res = std::max(res, max_abs_diff(swap * flipped * swap, r * straight * rinv));
  }
  return make_report("almost-cocommutative", p, {la, mu, nu}, res, tol);
}

CheckReport check_hopf_axioms(const ModelParams& p, const HopfColours& c, double spin,
                              double tol) {
  const Ctx ctx(p);
  const Representation rep = ctx.rep(spin);
  const std::size_t d = rep.dim();
  const RepLeg leg(rep);
  const StructureMaps& maps = *ctx.maps;

  double res = 0.0;
  for (const GenId a : ctx.gens) {
    const WordPairSum d1 = maps.delta_gen(c.la, c.mu, c.nu, a);
    const WordPairSum d2 = maps.delta_gen(c.la2, c.mu2, c.nu, a);

    // coassociativity on V (x) V (x) V
    {
      const CMatrix lhs = apply_pair_hom(DeltaLeg(maps, c.alpha, c.beta, c.la, rep, rep),
                                         SigmaLeg(maps, c.gamma, c.mu, rep), d1);
      const CMatrix rhs = apply_pair_hom(SigmaLeg(maps, c.alpha, c.la2, rep),
                                         DeltaLeg(maps, c.beta, c.gamma, c.mu2, rep, rep), d2);
      res = std::max(res, max_abs_diff(lhs, rhs));
    }

    // counit, both orders, against sigma^alpha_nu
    {
      const CMatrix target = SigmaLeg(maps, c.alpha, c.nu, rep).gen_matrix(a);
      const CMatrix left = apply_pair_hom(EpsilonLeg(maps, c.la), SigmaLeg(maps, c.alpha, c.mu, rep), d1);
      const CMatrix right = apply_pair_hom(SigmaLeg(maps, c.alpha, c.la2, rep), EpsilonLeg(maps, c.mu2), d2);
      res = std::max({res, max_abs_diff(left, target), max_abs_diff(right, target)});
    }

    // antipode: m o (S (x) sigma) o Delta = iota o epsilon, both orders
    {
      const Colour sig_am = two_index_colour(c.alpha, c.mu);
      const Colour sig_al2 = two_index_colour(c.alpha, c.la2);
      CMatrix first = zero_like(d), second = zero_like(d);
      for (const auto& pr : d1)
        first += pr.coeff * (eval_element(maps.extend_antipode(c.alpha, c.la, pr.left), rep) *
                             eval_element(maps.extend_sigma(sig_am, pr.right), rep));
      for (const auto& pr : d2)
        second += pr.coeff * (eval_element(maps.extend_sigma(sig_al2, pr.left), rep) *
                              eval_element(maps.extend_antipode(c.alpha, c.mu2, pr.right), rep));
      const CMatrix target = maps.epsilon_gen(c.nu, a) * CMatrix::identity(d);
      res = std::max({res, max_abs_diff(first, target), max_abs_diff(second, target)});
    }

    // colour covariance of Delta: (sigma^la_alpha (x) sigma^mu_beta) o
    // Delta^{alpha,beta}_nu = Delta^{la,mu}_nu = Delta^{la,mu}_gamma o sigma^gamma_nu
    {
      const CMatrix mid = apply_pair_hom(leg, leg, d1);
      const CMatrix left = apply_pair_hom(SigmaLeg(maps, c.la, c.alpha, rep),
                                          SigmaLeg(maps, c.mu, c.beta, rep),
                                          maps.delta_gen(c.alpha, c.beta, c.nu, a));
      const CMatrix right = maps.sigma_scale(two_index_colour(c.gamma, c.nu), a) *
                            apply_pair_hom(leg, leg, maps.delta_gen(c.la, c.mu, c.gamma, a));
      res = std::max({res, max_abs_diff(left, mid), max_abs_diff(right, mid)});
    }

    // colour covariance of epsilon and S
    {
      const cscalar e_left = maps.sigma_scale(two_index_colour(c.alpha, c.nu), a) *
                             maps.epsilon_gen(c.alpha, a);
      res = std::max(res, std::abs(e_left - maps.epsilon_gen(c.nu, a)));

      const CMatrix mid = eval_element(maps.antipode_gen(c.mu, c.nu, a), rep);
      const CMatrix left = eval_element(
          maps.extend_sigma(two_index_colour(c.mu, c.alpha), maps.antipode_gen(c.alpha, c.nu, a)),
          rep);
      const CMatrix right = maps.sigma_scale(two_index_colour(c.beta, c.nu), a) *
                            eval_element(maps.antipode_gen(c.mu, c.beta, a), rep);
      res = std::max({res, max_abs_diff(left, mid), max_abs_diff(right, mid)});
    }
  }

  return make_report("hopf-axioms", p,
                     {c.alpha, c.beta, c.gamma, c.la, c.mu, c.nu, c.la2, c.mu2}, res, tol);
}

CheckReport check_bialgebra(const ModelParams& p, const Colour& la, const Colour& mu,
                            const Colour& nu, double spin, double tol) {
  const Ctx ctx(p);
  const Representation rep = ctx.rep(spin);
  const std::size_t d = rep.dim();
  const RepLeg leg(rep);
  const StructureMaps& maps = *ctx.maps;

  double res = 0.0;
  for (const GenId a : ctx.gens) {
    const CMatrix da = apply_pair_hom(leg, leg, maps.delta_gen(la, mu, nu, a));
    for (const GenId b : ctx.gens) {
      const CMatrix db = apply_pair_hom(leg, leg, maps.delta_gen(la, mu, nu, b));
      const Word ab = make_word(1.0, {Atom::gen(a), Atom::gen(b)});
      const CMatrix lhs = apply_pair_hom(leg, leg, maps.extend_delta(la, mu, nu, ab));
      res = std::max(res, max_abs_diff(lhs, da * db));
      res = std::max(res, std::abs(maps.extend_epsilon(nu, ab) -
                                   maps.epsilon_gen(nu, a) * maps.epsilon_gen(nu, b)));
    }
  }

  // Delta(1) = 1 (x) 1 and epsilon(1) = 1
  const Word unit;
  res = std::max(res, max_abs_diff(apply_pair_hom(leg, leg, maps.extend_delta(la, mu, nu, unit)),
                                   CMatrix::identity(d * d)));
  res = std::max(res, std::abs(maps.extend_epsilon(nu, unit) - cscalar{1.0, 0.0}));

  return make_report("bialgebra", p, {la, mu, nu}, res, tol);
}

CheckReport check_counit_on_r(const ModelParams& p, const Colour& la, const Colour& mu,
                              const Colour& alpha, const Colour& la2, const Colour& mu2,
                              double spin, double tol) {
  const Ctx ctx(p);
  const Representation rep = ctx.rep(spin);
  const CMatrix id = CMatrix::identity(rep.dim());

  const CMatrix left = apply_pair_hom(EpsilonLeg(*ctx.maps, la), SigmaLeg(*ctx.maps, alpha, mu, rep),
                                      ctx.r_expr(la, mu, spin, spin));
  const CMatrix right = apply_pair_hom(SigmaLeg(*ctx.maps, alpha, la2, rep),
                                       EpsilonLeg(*ctx.maps, mu2), ctx.r_expr(la2, mu2, spin, spin));
  const double res = std::max(max_abs_diff(left, id), max_abs_diff(right, id));
  return make_report("counit-on-R", p, {la, mu, alpha, la2, mu2}, res, tol);
}

CheckReport check_antipode_on_r(const ModelParams& p, const Colour& la, const Colour& mu,
                                const Colour& alpha, const Colour& beta, double spin,
                                double tol) {
  const Ctx ctx(p);
  const Representation rep = ctx.rep(spin);
  const CMatrix image =
      apply_antipode_pair(*ctx.maps, alpha, la, rep, SigmaLeg(*ctx.maps, beta, mu, rep),
                          ctx.r_expr(la, mu, spin, spin));
  const CMatrix r_ab = eval_tensor_expr(ctx.r_expr(alpha, beta, spin, spin), rep, rep);

  const double res = std::max(
      max_abs_diff(image * r_ab, CMatrix::identity(rep.dim() * rep.dim())),
      max_abs_diff(image, inverse(r_ab)));
  return make_report("antipode-on-R", p, {la, mu, alpha, beta}, res, tol);
}

CheckReport check_fixed_colour_hopf(const ModelParams& p, const Colour& nu, double spin,
                                    double tol) {
  const ModelParams shifted = act_params(p, inverse_colour(nu));
  const CheckReport inner = check_hopf_axioms(shifted, HopfColours::all(nu), spin, tol);
  CheckReport out = make_report("fixed-colour-hopf", p, {nu}, inner.residual, tol);
  return out;
}

// ---------------------------------------------------------------------------
// suite driver

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  return h;
}

/// Deterministic, portable draws (the engine is seeded per check instance).
struct Sampler {
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  double uniform(double a, double b) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
  }

  cscalar colour_component() {
    const double mod = uniform(0.5, 2.0);
    const double phase = uniform(-3.0, 3.0);
    return std::polar(mod, phase);
  }

  Colour colour(std::size_t arity) {
    std::vector<cscalar> comps(arity);
    for (auto& c : comps) c = colour_component();
    return Colour(std::move(comps));
  }

  /// exp(u + iv) with |u| <= log_radius and |v| <= min(log_radius, 0.5);
  /// keeps moduli inside [0.5, 2] and phases off the branch cut.
  cscalar param(double log_radius) {
    const double u = uniform(-log_radius, log_radius);
    const double v = uniform(-std::min(log_radius, 0.5), std::min(log_radius, 0.5));
    return std::exp(cscalar(u, v));
  }

  ModelParams model_params(bool is_gl2, double log_radius) {
    if (is_gl2) return Gl2Params{param(log_radius), param(log_radius)};
    return H4Params{param(std::log(2.0))};
  }

  std::mt19937_64 rng;
};

constexpr double kLn2 = 0.6931471805599453;

/// Log-radius of the deformation-parameter draw for checks that multiply
/// R-matrices together: shrinks with spin so entries stay O(10) and residuals
/// keep headroom below the tolerance.
double product_radius(double jmax) {
  return std::min(0.5, 1.1 / (1.0 + 2.0 * jmax * jmax + 8.0 * jmax));
}

/// Radius for algebra-level checks (no R products).
double algebra_radius(double j) { return 0.4 / (0.5 + j); }

std::string fmt_spin(double j) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", j);
  return buf;
}

std::string spin_tag(const std::vector<double>& js) {
  std::string tag = "[j=";
  for (std::size_t i = 0; i < js.size(); ++i) {
    if (i) tag += ',';
    tag += fmt_spin(js[i]);
  }
  tag += ']';
  return tag;
}

bool selected(const SuiteConfig& cfg, std::string_view name) {
  for (const auto& s : cfg.suites)
    if (s == "all" || s == name) return true;
  return false;
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw InvalidParameter("trials must be >= 1");
  for (const auto& s : cfg.suites) {
    if (s != "all" && s != "ybe" && s != "quasi" && s != "hopf" && s != "bialgebra" &&
        s != "cocomm" && s != "r-identities" && s != "fixed-colour")
      throw InvalidParameter("unknown suite selector '" + s + "'");
  }

  std::vector<CheckReport> out;

  for (const auto& model : cfg.models) {
    const bool is_gl2 = model == "gl2";
    if (!is_gl2 && model != "h4") throw InvalidParameter("unknown model '" + model + "'");
    const std::size_t arity = is_gl2 ? 1 : 2;
    const std::vector<double> spins =
        is_gl2 ? (cfg.spins.empty() ? std::vector<double>{0.5} : cfg.spins)
               : std::vector<double>{0.5};

    auto child_seed = [&](const std::string& id, int trial) {
      return splitmix(splitmix(cfg.seed ^ fnv1a(id)) ^ fnv1a(model)) + static_cast<std::uint64_t>(trial);
    };

    // ybe: every non-decreasing spin triple
    if (selected(cfg, "ybe")) {
      std::vector<std::array<double, 3>> combos;
      if (is_gl2) {
        for (std::size_t i = 0; i < spins.size(); ++i)
          for (std::size_t j = i; j < spins.size(); ++j)
            for (std::size_t k = j; k < spins.size(); ++k)
              combos.push_back({spins[i], spins[j], spins[k]});
      } else {
        combos.push_back({0.5, 0.5, 0.5});
      }
      for (const auto& combo : combos) {
        const std::string id =
            is_gl2 ? "ybe" + spin_tag({combo[0], combo[1], combo[2]}) : std::string("ybe");
        const double jmax = std::max({combo[0], combo[1], combo[2]});
        for (int t = 0; t < cfg.trials; ++t) {
          const std::uint64_t seed = splitmix(child_seed(id, t));
          Sampler smp(seed);
          const ModelParams p = smp.model_params(is_gl2, product_radius(jmax));
          const Colour la = smp.colour(arity), mu = smp.colour(arity), nu = smp.colour(arity);
          CheckReport r = check_coloured_ybe(p, la, mu, nu, combo, cfg.tol);
          r.check_id = id;
          r.seed = seed;
          out.push_back(std::move(r));
        }
      }
    }

    // single-spin checks
    const std::vector<double> single = is_gl2 ? spins : std::vector<double>{0.5};
    for (const double j : single) {
      const std::string tag = is_gl2 ? spin_tag({j}) : std::string();

      auto run_per_trial = [&](const char* selector, const std::string& base_id, auto&& fn) {
        if (!selected(cfg, selector)) return;
        const std::string id = base_id + tag;
        for (int t = 0; t < cfg.trials; ++t) {
          const std::uint64_t seed = splitmix(child_seed(id, t));
          Sampler smp(seed);
          CheckReport r = fn(smp, j);
          r.check_id = id;
          r.seed = seed;
          out.push_back(std::move(r));
        }
      };

      run_per_trial("quasi", "quasitriangular", [&](Sampler& smp, double jj) {
        const ModelParams p = smp.model_params(is_gl2, product_radius(jj));
        const Colour a = smp.colour(arity), b = smp.colour(arity), g = smp.colour(arity);
        const Colour la = smp.colour(arity), mu = smp.colour(arity);
        return check_quasitriangular(p, a, b, g, la, mu, {jj, jj, jj}, cfg.tol);
      });

      run_per_trial("cocomm", "almost-cocommutative", [&](Sampler& smp, double jj) {
        const ModelParams p = smp.model_params(is_gl2, product_radius(jj));
        const Colour la = smp.colour(arity), mu = smp.colour(arity), nu = smp.colour(arity);
        return check_almost_cocommutative(p, la, mu, nu, jj, cfg.tol);
      });

      run_per_trial("hopf", "hopf-axioms", [&](Sampler& smp, double jj) {
        const ModelParams p = smp.model_params(is_gl2, algebra_radius(jj));
        HopfColours c{smp.colour(arity), smp.colour(arity), smp.colour(arity),
                      smp.colour(arity), smp.colour(arity), smp.colour(arity),
                      smp.colour(arity), smp.colour(arity)};
        return check_hopf_axioms(p, c, jj, cfg.tol);
      });

      run_per_trial("bialgebra", "bialgebra", [&](Sampler& smp, double jj) {
        const ModelParams p = smp.model_params(is_gl2, algebra_radius(jj));
        const Colour la = smp.colour(arity), mu = smp.colour(arity), nu = smp.colour(arity);
        return check_bialgebra(p, la, mu, nu, jj, cfg.tol);
      });

      run_per_trial("r-identities", "counit-on-R", [&](Sampler& smp, double jj) {
        const ModelParams p = smp.model_params(is_gl2, algebra_radius(jj));
        const Colour la = smp.colour(arity), mu = smp.colour(arity);
        const Colour al = smp.colour(arity), la2 = smp.colour(arity), mu2 = smp.colour(arity);
        return check_counit_on_r(p, la, mu, al, la2, mu2, jj, cfg.tol);
      });

      run_per_trial("r-identities", "antipode-on-R", [&](Sampler& smp, double jj) {
        const ModelParams p = smp.model_params(is_gl2, product_radius(jj));
        const Colour la = smp.colour(arity), mu = smp.colour(arity);
        const Colour al = smp.colour(arity), be = smp.colour(arity);
        return check_antipode_on_r(p, la, mu, al, be, jj, cfg.tol);
      });

      run_per_trial("fixed-colour", "fixed-colour-hopf", [&](Sampler& smp, double jj) {
        const ModelParams p = smp.model_params(is_gl2, algebra_radius(jj));
        const Colour nu = smp.colour(arity);
        return check_fixed_colour_hopf(p, nu, jj, cfg.tol);
      });
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    return a.model < b.model;
  });
  return out;
}

}  // namespace chopf::verify
