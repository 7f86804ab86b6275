#include "modeq/numeric.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace modeq {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kU{0.0, kPi}; // i * pi

long mod2(long x) { return ((x % 2) + 2) % 2; }

} // namespace

// ---------------------------------------------------------------------------
// Moebius matrices

MoebiusMatrix::MoebiusMatrix(long a, long b, long c, long d) : a_(a), b_(b), c_(c), d_(d)
{
    if (a * d - b * c != 1) {
        throw std::invalid_argument("Moebius matrix must have determinant 1");
    }
}

Complex MoebiusMatrix::apply(Complex z) const
{
    if (std::isinf(z.real()) || std::isinf(z.imag())) {
        return c_ == 0 ? Complex(std::numeric_limits<double>::infinity(), 0.0)
                       : Complex(static_cast<double>(a_) / static_cast<double>(c_), 0.0);
    }
    const Complex den = static_cast<double>(c_) * z + static_cast<double>(d_);
    if (den == 0.0) {
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    return (static_cast<double>(a_) * z + static_cast<double>(b_)) / den;
}

MoebiusMatrix operator*(const MoebiusMatrix &x, const MoebiusMatrix &y)
{
    return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
            x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d()};
}

bool in_squares_subgroup(const MoebiusMatrix &g)
{
    const std::array<long, 4> r{mod2(g.a()), mod2(g.b()), mod2(g.c()), mod2(g.d())};
    // {I, P mod 2, Q mod 2}
    return r == std::array<long, 4>{1, 0, 0, 1} || r == std::array<long, 4>{0, 1, 1, 1}
           || r == std::array<long, 4>{1, 1, 1, 0};
}

bool in_group(const MoebiusMatrix &g, Group group)
{
    return group == Group::Full || in_squares_subgroup(g);
}

// ---------------------------------------------------------------------------
// series evaluation

Evaluation eval_series(const LaurentSeries &s, Complex tau, const EvalConfig &cfg)
{
    if (!(tau.imag() >= cfg.min_imag)) {
        throw PointOutsideDomain("Im(tau) = " + std::to_string(tau.imag()) + " is below "
                                 + std::to_string(cfg.min_imag));
    }
    const Complex step = Complex(0.0, 2.0 * kPi / s.lattice()) * tau;
    Complex sum = 0.0;
    // (exponent, log|term|) of the nonzero decaying terms
    std::vector<std::pair<int, double>> recent;
    const auto &c = s.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) {
            continue;
        }
        const int n = s.n_min() + static_cast<int>(i);
        const double coeff = c[i].get_d();
        sum += coeff * std::exp(static_cast<double>(n) * step);
        if (n > 0) {
            recent.emplace_back(n, std::log(std::abs(coeff)) + n * step.real());
        }
    }

    // Geometric extrapolation from the last few terms.
    Evaluation out{sum, 0.0};
    const std::size_t k = std::min<std::size_t>(5, recent.size());
    if (k >= 2) {
        const auto &first = recent[recent.size() - k];
        const auto &last = recent.back();
        const double log_rho = (last.second - first.second) / (last.first - first.first);
        out.tail = log_rho < 0.0
                       ? cfg.tail_factor * std::exp(last.second + log_rho) / -std::expm1(log_rho)
                       : std::numeric_limits<double>::infinity();
    }
    if (out.tail > cfg.tolerance * std::max(1.0, std::abs(sum))) {
        throw TailTooLarge("tail estimate " + std::to_string(out.tail) + " at tau = ("
                           + std::to_string(tau.real()) + ", " + std::to_string(tau.imag()) + ")");
    }
    return out;
}

Evaluation eval_series(const PrefactoredSeries &s, Complex tau, const EvalConfig &cfg)
{
    Evaluation body = eval_series(s.body, tau, cfg);
    const Complex factor = std::pow(kU, s.e);
    return {body.value * factor, body.tail * std::abs(factor)};
}

// ---------------------------------------------------------------------------
// jets

Jet operator+(const Jet &x, const Jet &y)
{
    Jet out;
    for (std::size_t i = 0; i < 4; ++i) {
        out.d[i] = x.d[i] + y.d[i];
    }
    return out;
}

Jet operator-(const Jet &x, const Jet &y) { return x + Complex(-1.0) * y; }

Jet operator*(Complex c, const Jet &x)
{
    Jet out;
    for (std::size_t i = 0; i < 4; ++i) {
        out.d[i] = c * x.d[i];
    }
    return out;
}

Jet operator*(const Jet &f, const Jet &g)
{
    const auto &a = f.d;
    const auto &b = g.d;
    return {{a[0] * b[0], a[1] * b[0] + a[0] * b[1], a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2],
             a[3] * b[0] + 3.0 * a[2] * b[1] + 3.0 * a[1] * b[2] + a[0] * b[3]}};
}

Jet operator/(const Jet &f, const Jet &g)
{
    const auto &a = f.d;
    const auto &b = g.d;
    Jet q;
    q.d[0] = a[0] / b[0];
    q.d[1] = (a[1] - q.d[0] * b[1]) / b[0];
    q.d[2] = (a[2] - 2.0 * q.d[1] * b[1] - q.d[0] * b[2]) / b[0];
    q.d[3] = (a[3] - 3.0 * q.d[2] * b[1] - 3.0 * q.d[1] * b[2] - q.d[0] * b[3]) / b[0];
    return q;
}

Jet series_jet(const LaurentSeries &s, Complex tau, const EvalConfig &cfg)
{
    const Complex scale(0.0, 2.0 * kPi / s.lattice());
    Jet out;
    LaurentSeries current = s;
    Complex factor = 1.0;
    for (std::size_t k = 0; k < 4; ++k) {
        out.d[k] = factor * eval_series(current, tau, cfg).value;
        current = theta_op(current);
        factor *= scale;
    }
    return out;
}

Complex schwarzian(const Jet &f)
{
    if (std::abs(f.d[1]) == 0.0) {
        throw DerivativeVanishes("f' vanishes");
    }
    const Complex ratio2 = f.d[2] / f.d[1];
    return f.d[3] / f.d[1] - 1.5 * ratio2 * ratio2;
}

Complex eval_h(const SolveResult &res, Complex tau, const EvalConfig &cfg)
{
    const Complex g = eval_series(res.g, tau, cfg).value;
    const Complex s = eval_series(res.S, tau, cfg).value;
    if (s == 0.0) {
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    return tau - 2.0 * g / (kU * s);
}

Jet h_jet(const SolveResult &res, Complex tau, const EvalConfig &cfg)
{
    const Jet g = series_jet(res.g, tau, cfg);
    const Jet s = series_jet(res.S, tau, cfg);
    return Jet::identity(tau) - (2.0 / kU) * (g / s);
}

// ---------------------------------------------------------------------------
// checks

EquivarianceReport check_equivariance(const SolveResult &res, const MoebiusMatrix &gamma,
                                      const EvalConfig &cfg)
{
    if (!in_group(gamma, res.group)) {
        throw GroupMismatch("matrix is not in the group attached to r = " + std::to_string(res.r));
    }
    EquivarianceReport rep;
    rep.r = res.r;
    rep.gamma = {gamma.a(), gamma.b(), gamma.c(), gamma.d()};
    rep.points = cfg.points;
    rep.tolerance = cfg.tolerance;
    const MoebiusMatrix inverse(gamma.d(), -gamma.b(), -gamma.c(), gamma.a());
    for (const Complex &sample : cfg.points) {
        // Test h(gamma z) = gamma h(z) at z = sample or z = gamma^-1 sample,
        // whichever keeps both evaluation points higher in the half-plane.
        const Complex forward = gamma.apply(sample);
        const Complex backward = inverse.apply(sample);
        const Complex z = forward.imag() >= backward.imag() ? sample : backward;
        const Complex lhs = eval_h(res, gamma.apply(z), cfg);
        const Complex rhs = gamma.apply(eval_h(res, z, cfg));
        const double dist = std::abs(lhs - rhs);
        rep.residuals.push_back(dist);
        rep.max_residual = std::max(rep.max_residual, dist);
    }
    rep.pass = rep.max_residual < cfg.tolerance;
    return rep;
}

SchwarzReport check_schwarz_numeric(const SolveResult &res, const EvalConfig &cfg)
{
    SchwarzReport rep;
    rep.r = res.r;
    rep.points = cfg.points;
    rep.tolerance = cfg.tolerance;
    const LaurentSeries e4 = eisenstein(4, std::max(res.S.order(), 1));
    const double coupling = 2.0 * kPi * kPi * res.r * res.r;
    for (const Complex &tau : cfg.points) {
        const Complex lhs = schwarzian(h_jet(res, tau, cfg));
        const Complex rhs = coupling * eval_series(e4, tau, cfg).value;
        const double dist = std::abs(lhs - rhs);
        rep.residuals.push_back(dist);
        rep.max_residual = std::max(rep.max_residual, dist);
    }
    rep.pass = rep.max_residual < cfg.tolerance;
    return rep;
}

namespace {

nlohmann::json points_json(const std::vector<Complex> &points)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto &z : points) {
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

} // namespace

nlohmann::json to_json(const EquivarianceReport &rep)
{
    return {{"r", rep.r},
            {"gamma", rep.gamma},
            {"points", points_json(rep.points)},
            {"max_residual", rep.max_residual},
            {"tolerance", rep.tolerance},
            {"pass", rep.pass}};
}

nlohmann::json to_json(const SchwarzReport &rep)
{
    return {{"r", rep.r},
            {"points", points_json(rep.points)},
            {"max_residual", rep.max_residual},
            {"tolerance", rep.tolerance},
            {"pass", rep.pass}};
}

} // namespace modeq
