#pragma once

// Closed-form expressions for the r = 1..4 solutions written in the classical
// generators, compared coefficient-wise against the output of solve_ode, and
// the identity suite (Ramanujan, Jacobi, cross-ratios of equivariant offsets).

#include <string>
#include <vector>

#include <json.hpp>

#include "modeq/exact.hpp"

namespace modeq {

struct GoldenCheck {
    std::string name;
    bool pass = false;
    // Provisional checks compare against a corrected reading of a printed
    // formula; they are reported but do not decide the overall verdict.
    bool provisional = false;
    std::string detail;
    int checked_through = 0;
};

// Checks for one r in 1..4, solving at the given order. Throws Error for other r.
std::vector<GoldenCheck> closed_form_checks(int r, int order);

// Ramanujan (four identities), Jacobi, [tau, h_E4, h_Delta, h_E6] = E4^3/(1728 Delta)
// and the identification of [tau, h_theta2, h_theta3, h_theta4].
std::vector<GoldenCheck> identity_checks(int order);

// The six images of x under the anharmonic group, labelled
// "x", "1-x", "1/x", "1/(1-x)", "x/(x-1)", "(x-1)/x".
struct AnharmonicImage {
    std::string label;
    LaurentSeries series;
};
std::vector<AnharmonicImage> anharmonic_images(const LaurentSeries &x);

// [tau, h_theta2, h_theta3, h_theta4] as a series on lattice 2.
LaurentSeries theta_cross_ratio(int order);
// (eta(tau/2)/eta(2 tau))^8 on lattice 2.
LaurentSeries eta_quotient_lambda(int order);

// true when every non-provisional check passes.
bool all_pass(const std::vector<GoldenCheck> &checks);

nlohmann::json to_json(const GoldenCheck &check);

} // namespace modeq
