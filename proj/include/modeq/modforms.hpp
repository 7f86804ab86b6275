#pragma once

// q-expansions of the classical forms on SL2(Z) and on its index-2 subgroup
// of squares, plus exact checks of the Ramanujan and Jacobi identities.
//
// Every generator takes the truncation order N in exponents of the requested
// lattice and returns a series known exactly through p^N.

#include <string>
#include <string_view>
#include <vector>

#include "modeq/exact.hpp"

namespace modeq {

enum class Group {
    Full,    // SL2(Z), even r, expansions in q
    Squares, // SL2(Z)^2, odd r, expansions in p = q^(1/2)
};

constexpr int lattice_of(Group g) { return g == Group::Full ? 1 : 2; }
// d/dtau = deriv_scale * (i*pi) * theta on the group's lattice.
constexpr int deriv_scale(Group g) { return g == Group::Full ? 2 : 1; }
constexpr Group group_for(int r) { return r % 2 == 0 ? Group::Full : Group::Squares; }
std::string_view group_name(Group g);

Integer sigma(unsigned k, unsigned n);

// E_k for k in {2, 4, 6}.
LaurentSeries eisenstein(int k, int order, int lattice = 1);

// prod_{n>=1} (1 - q^n), via Euler's pentagonal number theorem.
LaurentSeries euler_product(int order);

// exponent 24: Delta = q prod (1-q^n)^24 on lattice 1.
// exponent 12: Delta^(1/2) = p prod (1-p^(2n))^12 on lattice 2.
LaurentSeries eta_power(int exponent, int order);

// Normalized Hauptmodul 1/p + O(p):
//   Full:    E4^3/Delta - 744
//   Squares: E6/Delta^(1/2)
LaurentSeries hauptmodul(Group group, int order);

// Weight -2 form with a simple pole and leading coefficient 1:
//   Full:    E4 E6/Delta
//   Squares: E4/Delta^(1/2)
LaurentSeries seed_t0(Group group, int order);

// Theta functions on lattice 2, p = q^(1/2).
LaurentSeries theta3(int order);
LaurentSeries theta4(int order);
// theta_2 / (2 q^(1/8)) = sum_{n>=0} p^(n(n+1)).
LaurentSeries theta2_reduced(int order);
// theta_2^4 = 16 p (theta2_reduced)^4, integral in q.
LaurentSeries theta2_fourth(int order);

// q d/dq log theta_j = offset + body, body with zero constant term.
struct LogDerivative {
    Rational offset;
    LaurentSeries body;
};
LogDerivative theta_logderiv(int j, int order);

enum class FormName { E2, E4, E6, Eta12, Eta24, DeltaHalf, J1728, Hauptmodul, SeedT0 };

struct NamedForm {
    FormName name;
    LaurentSeries series;
    int weight;
};

// `group` only matters for Hauptmodul and SeedT0; `lattice` is honoured for
// the lattice-1 forms (E2, E4, E6, Eta24, J1728).
NamedForm named_form(FormName name, int order, int lattice = 1, Group group = Group::Full);
// Accepts E2, E4, E6, Eta12, Eta24, Delta, DeltaHalf, J1728, hauptmodul-full,
// hauptmodul-squares, seed-full, seed-squares. Throws Error on unknown names.
NamedForm named_form(std::string_view name, int order, int lattice = 1);
std::vector<std::string> catalog_names();

struct IdentityResidual {
    std::string name;
    LaurentSeries residual;
};

struct IdentityReport {
    std::vector<IdentityResidual> residuals;

    bool all_zero() const;
    // Throws IdentityViolated naming the first nonzero coefficient.
    void require_zero() const;
};

// theta Delta = E2 Delta, theta E2 = (E2^2 - E4)/12, theta E4 = (E2 E4 - E6)/3,
// theta E6 = (E2 E6 - E4^2)/2, with theta = q d/dq.
IdentityReport check_ramanujan(int order);
// theta_2^4 + theta_4^4 - theta_3^4 on lattice 2.
IdentityReport check_jacobi(int order);

} // namespace modeq
