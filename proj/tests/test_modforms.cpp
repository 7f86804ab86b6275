#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modeq/modforms.hpp"

using namespace modeq;

namespace {

Integer brute_sigma(unsigned k, unsigned n)
{
    Integer total = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) {
            Integer term = 1;
            for (unsigned i = 0; i < k; ++i) {
                term *= d;
            }
            total += term;
        }
    }
    return total;
}

// q prod (1 - q^n)^24 by multiplying out each factor, one at a time.
std::vector<Integer> naive_delta(int order)
{
    std::vector<Integer> c(static_cast<std::size_t>(order + 1));
    c[1] = 1;
    for (int n = 1; n < order; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int e = order; e >= n; --e) {
                c[static_cast<std::size_t>(e)] -= c[static_cast<std::size_t>(e - n)];
            }
        }
    }
    return c;
}

bool only_even_exponents(const LaurentSeries &s)
{
    for (int n = s.n_min(); n <= s.order(); ++n) {
        if (n % 2 != 0 && s.coeff(n) != 0) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("sigma")
{
    CHECK(sigma(3, 1) == 1);
    CHECK(sigma(3, 2) == 9);
    CHECK(sigma(5, 2) == 33);
    for (unsigned k : {1u, 3u, 5u, 11u}) {
        for (unsigned n = 1; n <= 60; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(sigma(k, n) == brute_sigma(k, n));
        }
    }
    CHECK_THROWS_AS(sigma(3, 0), Error);
}

TEST_CASE("eisenstein")
{
    const LaurentSeries e4 = eisenstein(4, 2);
    CHECK(e4.coeff(0) == 1);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
    CHECK(eisenstein(2, 1).coeff(1) == -24);
    CHECK(eisenstein(6, 1).coeff(1) == -504);
    CHECK(eisenstein(6, 2).coeff(2) == -16632);
    const LaurentSeries e4p = eisenstein(4, 8, 2);
    CHECK(e4p.lattice() == 2);
    CHECK(e4p.order() == 8);
    CHECK(e4p.coeff(4) == 2160);
    CHECK(only_even_exponents(e4p));
    CHECK_THROWS_AS(eisenstein(8, 3), Error);
}

TEST_CASE("eta powers")
{
    const LaurentSeries d = eta_power(24, 3);
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == -24);
    CHECK(d.coeff(3) == 252);

    const LaurentSeries h = eta_power(12, 5);
    CHECK(h.lattice() == 2);
    CHECK(h.valuation() == 1);
    CHECK(h.coeff(3) == -12);
    CHECK(h.coeff(5) == 54);

    SUBCASE("naive product oracle")
    {
        const int n = 40;
        const auto naive = naive_delta(n);
        const LaurentSeries delta = eta_power(24, n);
        for (int e = 0; e <= n; ++e) {
            CAPTURE(e);
            CHECK(delta.coeff(e) == Rational(naive[static_cast<std::size_t>(e)]));
        }
    }
    SUBCASE("Delta = (E4^3 - E6^2)/1728")
    {
        const int n = 50;
        const LaurentSeries e4 = eisenstein(4, n);
        const LaurentSeries e6 = eisenstein(6, n);
        CHECK(equal_to_order(eta_power(24, n), ratio(1, 1728) * (series_pow(e4, 3) - e6 * e6)));
    }
    SUBCASE("eta^12 squared is Delta")
    {
        const LaurentSeries sq = series_pow(eta_power(12, 41), 2);
        const Agreement a = compare(sq, lattice_align(eta_power(24, 20), 2));
        CHECK(a.equal);
        CHECK(a.checked_through >= 40);
    }
    SUBCASE("inversion round trip")
    {
        const LaurentSeries e43 = series_pow(eisenstein(4, 30), 3);
        const LaurentSeries delta = eta_power(24, 31);
        CHECK(equal_to_order(delta * (e43 / delta), e43));
    }
    CHECK_THROWS_AS(eta_power(8, 3), Error);
}

TEST_CASE("hauptmodul and seed forms")
{
    const LaurentSeries tf = hauptmodul(Group::Full, 3);
    CHECK(tf.valuation() == -1);
    CHECK(tf.coeff(-1) == 1);
    CHECK(tf.coeff(0) == 0);
    CHECK(tf.coeff(1) == 196884);

    const LaurentSeries ts = hauptmodul(Group::Squares, 3);
    CHECK(ts.lattice() == 2);
    CHECK(ts.coeff(-1) == 1);
    CHECK(ts.coeff(0) == 0);
    CHECK(ts.coeff(1) == -492);

    const LaurentSeries sf = seed_t0(Group::Full, 3);
    CHECK(sf.coeff(-1) == 1);
    CHECK(sf.coeff(0) == -240);
    const LaurentSeries ss = seed_t0(Group::Squares, 3);
    CHECK(ss.coeff(-1) == 1);
    CHECK(ss.coeff(1) == 252);
    for (const auto &s : {tf, ts, sf, ss}) {
        CHECK(s.valuation() == -1);
        CHECK(s.order() >= 3);
    }
    // Both Squares forms are odd in p.
    CHECK(only_even_exponents(shift(ts, 1)));
    CHECK(only_even_exponents(shift(ss, 1)));
}

TEST_CASE("theta functions")
{
    const LaurentSeries t3 = theta3(9);
    CHECK(t3.coeff(0) == 1);
    CHECK(t3.coeff(1) == 2);
    CHECK(t3.coeff(4) == 2);
    CHECK(t3.coeff(9) == 2);
    CHECK(t3.coeff(2) == 0);
    CHECK(equal_to_order(theta4(9), negate_variable(t3)));
    const LaurentSeries t2 = theta2_fourth(5);
    CHECK(t2.valuation() == 1);
    CHECK(t2.coeff(1) == 16);

    const LogDerivative l2 = theta_logderiv(2, 6);
    CHECK(l2.offset == ratio(1, 8));
    CHECK(constant_term(l2.body) == 0);
    const LogDerivative l3 = theta_logderiv(3, 6);
    CHECK(l3.offset == 0);
    CHECK(l3.body.coeff(1) == 1);
    CHECK(l3.body.coeff(2) == -2);
    const LogDerivative l4 = theta_logderiv(4, 6);
    CHECK(equal_to_order(l4.body, negate_variable(l3.body)));
    CHECK_THROWS_AS(theta_logderiv(1, 6), Error);
}

TEST_CASE("Ramanujan identities")
{
    for (int n : {2, 10, 40}) {
        CAPTURE(n);
        const IdentityReport rep = check_ramanujan(n);
        CHECK(rep.residuals.size() == 4);
        CHECK(rep.all_zero());
        CHECK_NOTHROW(rep.require_zero());
    }
    CHECK_THROWS_AS(check_ramanujan(1), Error);
}

TEST_CASE("the fourth-power reading of the E2 identity fails at q^1")
{
    const LaurentSeries e2 = eisenstein(2, 4);
    const LaurentSeries e4 = eisenstein(4, 4);
    const LaurentSeries residual = theta_op(e2) - ratio(1, 12) * (series_pow(e2, 4) - e4);
    CHECK(residual.valuation() == 1);
    // -24q against (1 - 96q - 1 - 240q)/12 = -28q.
    CHECK(ratio(1, 12) * (series_pow(e2, 4) - e4).coeff(1) == -28);

    IdentityReport rep;
    rep.residuals.push_back({"E2^4", residual});
    CHECK_FALSE(rep.all_zero());
    CHECK_THROWS_AS(rep.require_zero(), IdentityViolated);
}

TEST_CASE("Jacobi identity")
{
    CHECK(check_jacobi(20).all_zero());
    CHECK(check_jacobi(60).all_zero());
}

TEST_CASE("named forms")
{
    struct Expect {
        const char *name;
        int valuation;
        long lead;
        int weight;
        int lattice;
    };
    for (const auto &e : std::vector<Expect>{{"E2", 0, 1, 2, 1},
                                             {"E4", 0, 1, 4, 1},
                                             {"E6", 0, 1, 6, 1},
                                             {"Delta", 1, 1, 12, 1},
                                             {"Eta24", 1, 1, 12, 1},
                                             {"Eta12", 1, 1, 6, 2},
                                             {"DeltaHalf", 1, 1, 6, 2},
                                             {"J1728", -1, 1, 0, 1},
                                             {"hauptmodul-full", -1, 1, 0, 1},
                                             {"hauptmodul-squares", -1, 1, 0, 2},
                                             {"seed-full", -1, 1, -2, 1},
                                             {"seed-squares", -1, 1, -2, 2}}) {
        CAPTURE(e.name);
        const NamedForm f = named_form(e.name, 6);
        CHECK(f.series.valuation() == e.valuation);
        CHECK(f.series.leading_coefficient() == e.lead);
        CHECK(f.weight == e.weight);
        CHECK(f.series.lattice() == e.lattice);
        CHECK(f.series.order() >= 6);
    }
    CHECK(named_form("J1728", 2).series.coeff(0) == 744);
    CHECK(named_form("E4", 6, 2).series.lattice() == 2);
    CHECK(catalog_names().size() == 12);
    CHECK_THROWS_AS(named_form("E8", 4), Error);
}
