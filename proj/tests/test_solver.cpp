#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modeq/solver.hpp"

using namespace modeq;

namespace {

std::vector<std::vector<Rational>> matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    std::vector<std::vector<Rational>> out;
    for (const auto &row : rows) {
        out.emplace_back(row);
    }
    return out;
}

} // namespace

TEST_CASE("B matrices")
{
    const BSystem b3 = build_B(3);
    CHECK(b3.group == Group::Squares);
    CHECK(b3.m == 2);
    CHECK(b3.n0 == -3);
    CHECK(b3.B == matrix({{9, 0, 2160}, {0, ratio(9, 4), 0}, {0, 0, 1}}));

    const BSystem b4 = build_B(4);
    CHECK(b4.group == Group::Full);
    CHECK(b4.n0 == -2);
    CHECK(b4.B == matrix({{4, 960}, {0, 1}}));

    const BSystem b1 = build_B(1);
    CHECK(b1.size() == 1);
    CHECK(b1.B == matrix({{1}}));

    for (int r = 1; r <= 12; ++r) {
        const BSystem b = build_B(r);
        const int d = b.size();
        CAPTURE(r);
        CHECK(b.B[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(d - 1)] == 1);
        for (int k = 1; k < d; ++k) {
            CHECK(b.B[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)] != 1);
            for (int l = 1; l < k; ++l) {
                CHECK(b.B[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] == 0);
            }
        }
    }
    CHECK_THROWS_AS(build_B(0), Error);
}

TEST_CASE("eigenvectors")
{
    CHECK(solve_eigen(build_B(3)) == std::vector<Rational>{-270, 0, 1});
    CHECK(solve_eigen(build_B(4)) == std::vector<Rational>{-320, 1});
    CHECK(solve_eigen(build_B(1)) == std::vector<Rational>{1});
    CHECK(solve_eigen(build_B(2)) == std::vector<Rational>{1});

    for (int r = 1; r <= 12; ++r) {
        const BSystem sys = build_B(r);
        const auto X = solve_eigen(sys);
        CAPTURE(r);
        CHECK(X.back() == 1);
        for (std::size_t k = 0; k < X.size(); ++k) {
            Rational bx = 0;
            for (std::size_t l = 0; l < X.size(); ++l) {
                bx += sys.B[k][l] * X[l];
            }
            CHECK(bx == X[k]);
        }
        if (r % 2 == 1) {
            // a_{-2}, a_{-4}, ... vanish
            for (std::size_t k = 1; k < X.size(); k += 2) {
                CHECK(X[k] == 0);
            }
        }
    }
}

TEST_CASE("build_g")
{
    const LaurentSeries g1 = build_g({1}, Group::Squares, 20);
    CHECK(equal_to_order(g1, seed_t0(Group::Squares, 20)));

    const LaurentSeries g3 = build_g({-270, 0, 1}, Group::Squares, 20);
    CHECK(g3.valuation() == -3);
    CHECK(g3.coeff(-3) == 1);
    CHECK(g3.coeff(-2) == 0);
    CHECK(g3.coeff(-1) == -270);
    CHECK(g3.order() >= 18);

    const LaurentSeries g4 = build_g({-320, 1}, Group::Full, 20);
    CHECK(g4.coeff(-2) == 1);
    CHECK(g4.coeff(-1) == -320);

    CHECK_THROWS_AS(build_g({}, Group::Full, 10), MatchFailure);
}

TEST_CASE("solve_ode is exact for r = 1..12")
{
    for (int r = 1; r <= 12; ++r) {
        CAPTURE(r);
        const SolveResult res = solve_ode(r, 60);
        const int n0 = -pole_order(r);
        CHECK(res.n0 == n0);
        CHECK(res.ode_residual.is_zero());
        CHECK(res.ode_residual.order() >= 60);
        CHECK(res.schwarz_residual.is_zero());
        CHECK(res.trusted_order() >= 40);

        // shape of the solution
        CHECK(res.g.valuation() == n0);
        CHECK(res.g.leading_coefficient() == 1);
        CHECK(res.S.valuation() == -n0);
        CHECK(constant_term(res.S) == 0);
        CHECK(res.R.valuation() == 2 * n0);
        CHECK(res.R.leading_coefficient() != 0);

        // zero constant term of g E4
        const LaurentSeries ge4 = res.g * eisenstein(4, res.g.order() + 1, res.m);
        CHECK(constant_term(ge4) == 0);

        // independent Frobenius recurrence
        const LaurentSeries oracle = frobenius_oracle(r, res.S.order());
        const Agreement a = compare((1 / res.S.leading_coefficient()) * res.S, oracle);
        CHECK(a.equal);
        CHECK(a.checked_through == res.S.order());

        // h(tau + 1) = h(tau) + 1: only even p-exponents on lattice 2
        if (res.m == 2) {
            CHECK(equal_to_order(negate_variable(res.R), res.R));
        }
    }
}

TEST_CASE("residual helpers detect a perturbed solution")
{
    const SolveResult res = solve_ode(3, 30);
    const LaurentSeries bumped = res.S + LaurentSeries::monomial(1, 9, 2, res.S.order());
    CHECK_FALSE(ode_residual(3, bumped).is_zero());
    const LaurentSeries bent = res.R + LaurentSeries::monomial(1, 4, 2, res.R.order());
    CHECK_FALSE(schwarz_residual(3, bent).is_zero());
    CHECK(ode_residual(3, res.S).is_zero());
}

TEST_CASE("Frobenius oracle")
{
    const LaurentSeries y = frobenius_oracle(1, 5);
    CHECK(y.valuation() == 1);
    CHECK(y.coeff(1) == 1);
    CHECK(y.coeff(2) == 0);
    CHECK(y.coeff(3) == 30);
    const LaurentSeries y4 = frobenius_oracle(4, 6);
    CHECK(y4.valuation() == 2);
    CHECK(y4.leading_coefficient() == 1);
    CHECK_THROWS_AS(frobenius_oracle(5, 2), Error);
}

TEST_CASE("solve results are reproducible")
{
    CHECK(to_json(solve_ode(6, 30)).dump() == to_json(solve_ode(6, 30)).dump());
}

TEST_CASE("equivariant offsets")
{
    const int n = 20;
    const LaurentSeries e2 = eisenstein(2, n);
    const LaurentSeries e4 = eisenstein(4, n);
    const LaurentSeries e6 = eisenstein(6, n);
    const LaurentSeries delta = eta_power(24, n + 1);

    // k f/f' with f' = 2 u theta f on lattice 1
    const PrefactoredSeries od = equivariant_offset(delta, 12);
    CHECK(od.e == -1);
    CHECK(equal_to_order(od.body, 6 / e2));

    const PrefactoredSeries o4 = equivariant_offset(e4, 4);
    CHECK(equal_to_order(o4.body, 2 * e4 / theta_op(e4)));
    CHECK(equal_to_order(o4.body, 6 * e4 / (e2 * e4 - e6)));

    // lattice 2: f' = u theta_p f
    const LaurentSeries e4p = eisenstein(4, n, 2);
    CHECK(equal_to_order(equivariant_offset(e4p, 4).body, 4 * e4p / theta_op(e4p)));

    CHECK_THROWS_AS(equivariant_offset(LaurentSeries::constant(3, 1, 10), 4), ZeroDerivative);
    CHECK_THROWS_AS(equivariant_offset(LogDerivative{0, LaurentSeries::zero(2, 5)}, 1), ZeroDerivative);
}

TEST_CASE("cross ratios")
{
    const int n = 24;
    const LaurentSeries e4 = eisenstein(4, n);
    const LaurentSeries e6 = eisenstein(6, n);
    const LaurentSeries delta = eta_power(24, n + 1);
    const auto w2 = equivariant_offset(e4, 4);
    const auto w3 = equivariant_offset(delta, 12);
    const auto w4 = equivariant_offset(e6, 6);
    const LaurentSeries j = series_pow(e4, 3) / (1728 * delta);
    const LaurentSeries cr = cross_ratio(w2, w3, w4);
    CHECK(cr.valuation() == -1);
    CHECK(equal_to_order(cr, j));

    const Rational c = ratio(-7, 3);
    const LaurentSeries scaled = cross_ratio({-1, c * w2.body}, {-1, c * w3.body}, {-1, c * w4.body});
    CHECK(equal_to_order(scaled, cr));

    CHECK_THROWS_AS(cross_ratio(w2, w2, w4), DegenerateEntries);
    CHECK_THROWS_AS(cross_ratio(w2, {0, w3.body}, w4), PrefactorMismatch);
}

TEST_CASE("solve result json")
{
    const nlohmann::json j = to_json(solve_ode(3, 20));
    for (const char *key : {"r", "group", "m", "n0", "X", "g", "S", "R", "c_over_u", "ode_residual_zero",
                            "schwarz_residual_zero", "trusted_order"}) {
        CAPTURE(key);
        CHECK(j.contains(key));
    }
    CHECK(j["group"] == "squares");
    CHECK(j["X"] == nlohmann::json::array({"-270", "0", "1"}));
    CHECK(j["c_over_u"] == "0");
    CHECK(j["ode_residual_zero"] == true);
    CHECK(equal_to_order(series_from_json(j["g"]), solve_ode(3, 20).g));
}
