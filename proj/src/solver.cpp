#include "modeq/solver.hpp"

namespace modeq {

int pole_order(int r)
{
    if (r < 1) {
        throw Error("r must be a positive integer");
    }
    return r % 2 == 0 ? r / 2 : r;
}

BSystem build_B(int r)
{
    BSystem sys;
    sys.r = r;
    sys.group = group_for(r);
    sys.m = lattice_of(sys.group);
    sys.n0 = -pole_order(r);
    const int d = sys.size();
    const int mu = deriv_scale(sys.group);
    const LaurentSeries e4 = eisenstein(4, d - 1, sys.m);
    sys.B.assign(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int k = 1; k <= d; ++k) {
        const Rational scale = ratio(r * r, mu * mu * k * k);
        for (int l = k; l <= d; ++l) {
            sys.B[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] = scale * e4.coeff(l - k);
        }
    }
    return sys;
}

std::vector<Rational> solve_eigen(const BSystem &sys)
{
    const int d = sys.size();
    std::vector<Rational> X(static_cast<std::size_t>(d));
    X.back() = 1;
    // Back-substitution on (B - I) X = 0; B_{k,k} != 1 for k < d.
    for (int k = d - 1; k >= 1; --k) {
        const auto &row = sys.B[static_cast<std::size_t>(k - 1)];
        Rational acc = 0;
        for (int l = k + 1; l <= d; ++l) {
            acc += row[static_cast<std::size_t>(l - 1)] * X[static_cast<std::size_t>(l - 1)];
        }
        X[static_cast<std::size_t>(k - 1)] = -acc / (row[static_cast<std::size_t>(k - 1)] - 1);
    }
    return X;
}

LaurentSeries build_g(const std::vector<Rational> &X, Group group, int order)
{
    const int d = static_cast<int>(X.size());
    if (d == 0) {
        throw MatchFailure("empty principal part");
    }
    const LaurentSeries t = hauptmodul(group, order);
    // basis[j] = t^j t0, leading term p^(-j-1).
    std::vector<LaurentSeries> basis{seed_t0(group, order)};
    for (int j = 1; j < d; ++j) {
        basis.push_back(basis.back() * t);
    }
    for (int j = 0; j < d; ++j) {
        const LaurentSeries &b = basis[static_cast<std::size_t>(j)];
        if (b.valuation() != -j - 1 || b.leading_coefficient() != 1) {
            throw MatchFailure("t^" + std::to_string(j) + " t0 does not start with p^" + std::to_string(-j - 1));
        }
    }

    // Cancel from the deepest pole upwards.
    LaurentSeries g = X.back() * basis.back();
    for (int e = -d + 1; e <= -1; ++e) {
        const Rational target = X[static_cast<std::size_t>(-e - 1)];
        const Rational diff = target - g.coeff(e);
        if (diff != 0) {
            g = g + diff * basis[static_cast<std::size_t>(-e - 1)];
        }
    }
    for (int e = -d; e <= -1; ++e) {
        if (g.coeff(e) != X[static_cast<std::size_t>(-e - 1)]) {
            throw MatchFailure("principal coefficient at p^" + std::to_string(e) + " not matched");
        }
    }
    return g;
}

int generator_order(int r, int order) { return order + 2 * pole_order(r) + 4; }

LaurentSeries ode_residual(int r, const LaurentSeries &S)
{
    const int mu = deriv_scale(group_for(r));
    const LaurentSeries e4 = eisenstein(4, std::max(S.order(), 0), S.lattice());
    return Rational(mu * mu) * theta_op(theta_op(S)) - Rational(r * r) * (e4 * S);
}

LaurentSeries schwarz_residual(int r, const LaurentSeries &R)
{
    const int mu = deriv_scale(group_for(r));
    const LaurentSeries dR = Rational(mu) * theta_op(R);
    const LaurentSeries W = Rational(mu * mu) * theta_op(theta_op(R)) / (dR + Rational(1));
    const LaurentSeries e4 = eisenstein(4, std::max(W.order(), 0), R.lattice());
    return ratio(1, 2) * (W * W) - Rational(mu) * theta_op(W) - Rational(2 * r * r) * e4;
}

SolveResult solve_ode(int r, int order)
{
    if (order < 1) {
        throw Error("order must be positive");
    }
    SolveResult res;
    res.r = r;
    res.group = group_for(r);
    res.m = lattice_of(res.group);
    res.n0 = -pole_order(r);
    res.generator_order = generator_order(r, order);
    const int d = -res.n0;
    const int mu = deriv_scale(res.group);

    res.X = solve_eigen(build_B(r));
    res.g = build_g(res.X, res.group, res.generator_order);

    const LaurentSeries e4 = eisenstein(4, res.generator_order, res.m);
    const LaurentSeries gE4 = res.g * e4;
    if (constant_term(gE4) != 0) {
        throw NonzeroConstantTerm("g E4 has constant term " + to_string(constant_term(gE4)));
    }
    res.antider_gE4 = theta_antider(gE4);

    // f1 / u = mu theta g - (r^2/mu) theta^{-1}(g E4) + c/u
    const LaurentSeries s_tilde =
        Rational(mu) * theta_op(res.g) - ratio(r * r, mu) * res.antider_gE4;
    res.c_over_u = constant_term(s_tilde);
    res.S = s_tilde - res.c_over_u;
    if (res.S.valuation() != d) {
        throw ResidualNonzero("S starts at p^" + std::to_string(res.S.valuation()) + ", expected p^"
                              + std::to_string(d));
    }
    res.R = Rational(-2) * res.g / res.S;

    res.ode_residual = ode_residual(r, res.S);
    res.schwarz_residual = schwarz_residual(r, res.R);
    if (!res.ode_residual.is_zero()) {
        throw ResidualNonzero("ODE residual nonzero at p^" + std::to_string(res.ode_residual.valuation()));
    }
    if (!res.schwarz_residual.is_zero()) {
        throw ResidualNonzero("Schwarzian residual nonzero at p^"
                              + std::to_string(res.schwarz_residual.valuation()));
    }
    return res;
}

LaurentSeries frobenius_oracle(int r, int order)
{
    const Group group = group_for(r);
    const int m = lattice_of(group);
    const int mu = deriv_scale(group);
    const int d = pole_order(r);
    if (order < d) {
        throw Error("frobenius_oracle: order below the leading exponent");
    }
    const LaurentSeries e4 = eisenstein(4, order - d, m);
    std::vector<Rational> alpha(static_cast<std::size_t>(order - d + 1));
    alpha[0] = 1;
    const Integer r2 = r * r;
    for (int n = d + 1; n <= order; ++n) {
        Rational acc = 0;
        for (int s = d; s < n; ++s) {
            const Rational &a = alpha[static_cast<std::size_t>(s - d)];
            if (a != 0) {
                acc += a * e4.coeff(n - s);
            }
        }
        const Integer indicial = Integer(mu * mu) * n * n - r2;
        alpha[static_cast<std::size_t>(n - d)] = Rational(r2) * acc / Rational(indicial);
    }
    return {m, d, order, std::move(alpha)};
}

PrefactoredSeries equivariant_offset(const LaurentSeries &f, const Rational &k)
{
    const LaurentSeries df = theta_op(f);
    if (df.is_zero()) {
        throw ZeroDerivative("form has vanishing derivative through order " + std::to_string(f.order()));
    }
    return {-1, Rational(k * f.lattice() / 2) * (f / df)};
}

PrefactoredSeries equivariant_offset(const LogDerivative &logderiv, const Rational &k)
{
    const LaurentSeries L = logderiv.body + logderiv.offset;
    if (L.is_zero()) {
        throw ZeroDerivative("logarithmic derivative vanishes");
    }
    return {-1, Rational(k / 2) * series_inv(L)};
}

LaurentSeries cross_ratio(const PrefactoredSeries &w2, const PrefactoredSeries &w3,
                          const PrefactoredSeries &w4)
{
    if (w2.e != w3.e || w2.e != w4.e) {
        throw PrefactorMismatch("cross_ratio: offsets carry different prefactors");
    }
    const LaurentSeries d43 = w4.body - w3.body;
    const LaurentSeries d42 = w4.body - w2.body;
    const LaurentSeries d32 = w3.body - w2.body;
    for (const LaurentSeries *s : {&w2.body, &w3.body, &w4.body, &d43, &d42, &d32}) {
        if (s->is_zero()) {
            throw DegenerateEntries("cross_ratio: two entries coincide");
        }
    }
    // ((z1-z2)(z4-z3)) / ((z1-z3)(z4-z2)) with z1 = tau; the prefactors cancel.
    return (w2.body * d43) / (w3.body * d42);
}

nlohmann::json to_json(const SolveResult &res)
{
    nlohmann::json X = nlohmann::json::array();
    for (const auto &x : res.X) {
        X.push_back(to_string(x));
    }
    return {
        {"r", res.r},
        {"group", std::string(group_name(res.group))},
        {"m", res.m},
        {"n0", res.n0},
        {"X", X},
        {"g", to_json(res.g)},
        {"S", to_json(res.S)},
        {"R", to_json(res.R)},
        {"c_over_u", to_string(res.c_over_u)},
        {"ode_residual_zero", res.ode_residual.is_zero()},
        {"schwarz_residual_zero", res.schwarz_residual.is_zero()},
        {"trusted_order", res.trusted_order()},
    };
}

} // namespace modeq
