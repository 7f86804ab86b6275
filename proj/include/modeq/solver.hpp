#pragma once

// Construction of quasi-modular solutions of y'' + pi^2 r^2 E4 y = 0 and of
// equivariant solutions of {h, tau} = 2 pi^2 r^2 E4, for positive integer r.
//
// Notation used throughout (u = i*pi, mu = deriv_scale(group), so that
// d/dtau = mu * u * theta on the group's lattice):
//
//   F1 = u * S                  first solution, S rational, zero constant term
//   F2 = -2 g + tau * F1        second solution
//   h  = F2 / F1 = tau + R / u  with R = -2 g / S
//
// The ODE and Schwarzian equation then reduce to the rational identities
//
//   mu^2 theta^2 S - r^2 E4 S = 0
//   W^2 / 2 - mu theta W - 2 r^2 E4 = 0,   W = mu^2 theta^2 R / (1 + mu theta R).

#include <vector>

#include <json.hpp>

#include "modeq/exact.hpp"
#include "modeq/modforms.hpp"

namespace modeq {

struct BSystem {
    int r = 0;
    Group group = Group::Full;
    int m = 1;  // lattice
    int n0 = 0; // deepest pole exponent of g: -r/2 (even r) or -r (odd r)
    // size() = -n0; B[k-1][l-1] holds B_{k,l}.
    std::vector<std::vector<Rational>> B;

    int size() const { return -n0; }
};

// Pole order of g for a given r.
int pole_order(int r);

BSystem build_B(int r);

// Eigenvector of B for eigenvalue 1, normalized so the last component is 1.
// Component i (0-based) holds the coefficient a_{-(i+1)} of p^{-(i+1)} in g.
std::vector<Rational> solve_eigen(const BSystem &sys);

// The weight -2 form P(t) t0 whose principal part is sum_i X[i] p^{-(i+1)}.
// Generators are computed through `order`.
LaurentSeries build_g(const std::vector<Rational> &X, Group group, int order);

struct SolveResult {
    int r = 0;
    Group group = Group::Full;
    int m = 1;
    int n0 = 0;
    std::vector<Rational> X;
    LaurentSeries g = LaurentSeries::zero(1, 0);
    LaurentSeries S = LaurentSeries::zero(1, 0);
    LaurentSeries R = LaurentSeries::zero(1, 0);
    // Antiderivative of g E4 with zero constant (the modular function
    // behind f0; f0 = antider / (mu u) + const).
    LaurentSeries antider_gE4 = LaurentSeries::zero(1, 0);
    LaurentSeries ode_residual = LaurentSeries::zero(1, 0);
    LaurentSeries schwarz_residual = LaurentSeries::zero(1, 0);
    Rational c_over_u;
    int generator_order = 0;

    int trusted_order() const { return R.order(); }
};

// Generator truncation used by solve_ode for a requested order.
int generator_order(int r, int order);

// Runs the full construction and checks both residuals; throws
// NonzeroConstantTerm / ResidualNonzero if the construction is inconsistent.
SolveResult solve_ode(int r, int order);

// The two residual series for an (S, R) pair, recomputed from scratch.
LaurentSeries ode_residual(int r, const LaurentSeries &S);
LaurentSeries schwarz_residual(int r, const LaurentSeries &R);

// Regular Frobenius solution p^(-n0) (1 + ...) of the ODE by direct
// recurrence on the coefficients, independent of solve_ode.
LaurentSeries frobenius_oracle(int r, int order);

// h_f - tau = k f / f' for a form f of weight k, as (i*pi)^-1 * body.
PrefactoredSeries equivariant_offset(const LaurentSeries &f, const Rational &k);
// Same, from the logarithmic derivative q d/dq log f = offset + body.
PrefactoredSeries equivariant_offset(const LogDerivative &logderiv, const Rational &k);

// [tau, tau + w2, tau + w3, tau + w4] for offsets sharing one prefactor.
LaurentSeries cross_ratio(const PrefactoredSeries &w2, const PrefactoredSeries &w3,
                          const PrefactoredSeries &w4);

nlohmann::json to_json(const SolveResult &res);

} // namespace modeq
