#pragma once

// Double-precision evaluation of the exact series on the upper half-plane and
// numerical checks of the properties that are not coefficient-wise:
// equivariance under group generators and the Schwarzian equation itself.

#include <array>
#include <complex>
#include <vector>

#include <json.hpp>

#include "modeq/exact.hpp"
#include "modeq/solver.hpp"

namespace modeq {

using Complex = std::complex<double>;

class MoebiusMatrix {
  public:
    // Throws std::invalid_argument unless ad - bc = 1.
    MoebiusMatrix(long a, long b, long c, long d);

    long a() const { return a_; }
    long b() const { return b_; }
    long c() const { return c_; }
    long d() const { return d_; }

    Complex apply(Complex z) const;

    static MoebiusMatrix T() { return {1, 1, 0, 1}; }
    static MoebiusMatrix S() { return {0, -1, 1, 0}; }
    static MoebiusMatrix P() { return {0, -1, 1, 1}; }
    static MoebiusMatrix Q() { return {1, -1, 1, 0}; }

  private:
    long a_, b_, c_, d_;
};

MoebiusMatrix operator*(const MoebiusMatrix &x, const MoebiusMatrix &y);

// Membership in SL2(Z)^2: the reduction mod 2 lies in the order-3 subgroup of
// SL2(F_2).
bool in_squares_subgroup(const MoebiusMatrix &g);
bool in_group(const MoebiusMatrix &g, Group group);

struct EvalConfig {
    std::vector<Complex> points = {{0.1, 1.2}, {-0.3, 1.05}, {0.05, 0.9}, {0.0, 1.0}, {0.4, 1.1}};
    double tolerance = 1e-6;
    // Multiplier on the geometric tail extrapolation.
    double tail_factor = 10.0;
    // Smallest Im(tau) at which a series is evaluated.
    double min_imag = 0.3;
};

struct Evaluation {
    Complex value;
    double tail = 0.0; // estimated magnitude of the dropped terms
};

// Sum over the known range with p = exp(2 pi i tau / m). Throws
// PointOutsideDomain below cfg.min_imag and TailTooLarge when the tail
// estimate exceeds cfg.tolerance * max(1, |value|).
Evaluation eval_series(const LaurentSeries &s, Complex tau, const EvalConfig &cfg = {});
Evaluation eval_series(const PrefactoredSeries &s, Complex tau, const EvalConfig &cfg = {});

// Value and first three tau-derivatives of a function at a point.
struct Jet {
    std::array<Complex, 4> d{};

    static Jet constant(Complex c) { return {{c, 0.0, 0.0, 0.0}}; }
    static Jet identity(Complex tau) { return {{tau, 1.0, 0.0, 0.0}}; }
};

Jet operator+(const Jet &x, const Jet &y);
Jet operator-(const Jet &x, const Jet &y);
Jet operator*(const Jet &x, const Jet &y);
Jet operator/(const Jet &x, const Jet &y);
Jet operator*(Complex c, const Jet &x);

// Jet of a series, derivatives taken through theta images (d/dtau = 2 pi i/m * theta).
Jet series_jet(const LaurentSeries &s, Complex tau, const EvalConfig &cfg = {});

// f'''/f' - 3/2 (f''/f')^2. Throws DerivativeVanishes when f' = 0.
Complex schwarzian(const Jet &f);

// h(tau) = tau - 2 g / (i pi S), evaluated from g and S separately so the
// value stays valid wherever both q-expansions converge.
Complex eval_h(const SolveResult &res, Complex tau, const EvalConfig &cfg = {});
Jet h_jet(const SolveResult &res, Complex tau, const EvalConfig &cfg = {});

struct EquivarianceReport {
    int r = 0;
    std::array<long, 4> gamma{};
    std::vector<Complex> points;
    std::vector<double> residuals;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// max over points of |h(gamma tau) - gamma h(tau)|. Throws GroupMismatch
// if gamma is not in the group attached to r.
EquivarianceReport check_equivariance(const SolveResult &res, const MoebiusMatrix &gamma,
                                      const EvalConfig &cfg = {});

struct SchwarzReport {
    int r = 0;
    std::vector<Complex> points;
    std::vector<double> residuals;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// max over points of |{h, tau} - 2 pi^2 r^2 E4(tau)|.
SchwarzReport check_schwarz_numeric(const SolveResult &res, const EvalConfig &cfg = {});

nlohmann::json to_json(const EquivarianceReport &rep);
nlohmann::json to_json(const SchwarzReport &rep);

} // namespace modeq
