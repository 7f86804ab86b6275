#include "modeq/modforms.hpp"

#include <map>

namespace modeq {

namespace {

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

// Builds a lattice-1 form through the q-order needed to cover `order` on
// `lattice`, then aligns and trims.
template <typename Builder>
LaurentSeries on_lattice(Builder &&build_q, int order, int lattice)
{
    const LaurentSeries s = build_q(floor_div(order, lattice));
    return lattice_align(s, lattice).truncated(order);
}

void require_order(int order, int minimum, const char *what)
{
    if (order < minimum) {
        throw Error(std::string(what) + ": order must be at least " + std::to_string(minimum));
    }
}

} // namespace

std::string_view group_name(Group g) { return g == Group::Full ? "full" : "squares"; }

Integer sigma(unsigned k, unsigned n)
{
    if (n == 0) {
        throw Error("sigma: n must be positive");
    }
    Integer total = 0;
    Integer power;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        mpz_ui_pow_ui(power.get_mpz_t(), d, k);
        total += power;
        const unsigned e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(power.get_mpz_t(), e, k);
            total += power;
        }
    }
    return total;
}

LaurentSeries eisenstein(int k, int order, int lattice)
{
    require_order(order, 0, "eisenstein");
    int scale = 0;
    switch (k) {
        case 2: scale = -24; break;
        case 4: scale = 240; break;
        case 6: scale = -504; break;
        default: throw Error("eisenstein: weight must be 2, 4 or 6");
    }
    return on_lattice(
        [&](int n_top) {
            std::vector<Rational> c(static_cast<std::size_t>(n_top + 1));
            c[0] = 1;
            for (int n = 1; n <= n_top; ++n) {
                c[static_cast<std::size_t>(n)] = scale * sigma(static_cast<unsigned>(k - 1), static_cast<unsigned>(n));
            }
            return LaurentSeries(1, 0, n_top, std::move(c));
        },
        order, lattice);
}

LaurentSeries euler_product(int order)
{
    require_order(order, 0, "euler_product");
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    for (long k = 0;; ++k) {
        const long lo = k * (3 * k - 1) / 2;
        const long hi = k * (3 * k + 1) / 2;
        if (lo > order) {
            break;
        }
        const int sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(lo)] = sign;
        if (hi <= order) {
            c[static_cast<std::size_t>(hi)] = sign;
        }
    }
    return {1, 0, order, std::move(c)};
}

LaurentSeries eta_power(int exponent, int order)
{
    require_order(order, 1, "eta_power");
    if (exponent == 24) {
        return shift(series_pow(euler_product(order - 1), 24), 1);
    }
    if (exponent == 12) {
        const LaurentSeries body = series_pow(euler_product(floor_div(order - 1, 2)), 12);
        return shift(lattice_align(body, 2), 1).truncated(order);
    }
    throw Error("eta_power: exponent must be 12 or 24");
}

LaurentSeries hauptmodul(Group group, int order)
{
    require_order(order, 1, "hauptmodul");
    LaurentSeries t = group == Group::Full
                          ? series_pow(eisenstein(4, order + 1), 3) / eta_power(24, order + 2)
                          : eisenstein(6, order + 1, 2) / eta_power(12, order + 2);
    return t - constant_term(t);
}

LaurentSeries seed_t0(Group group, int order)
{
    require_order(order, 1, "seed_t0");
    if (group == Group::Full) {
        return eisenstein(4, order + 1) * eisenstein(6, order + 1) / eta_power(24, order + 2);
    }
    return eisenstein(4, order + 1, 2) / eta_power(12, order + 2);
}

LaurentSeries theta3(int order)
{
    require_order(order, 0, "theta3");
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    c[0] = 1;
    for (int n = 1; n * n <= order; ++n) {
        c[static_cast<std::size_t>(n * n)] = 2;
    }
    return {2, 0, order, std::move(c)};
}

LaurentSeries theta4(int order) { return negate_variable(theta3(order)); }

LaurentSeries theta2_reduced(int order)
{
    require_order(order, 0, "theta2_reduced");
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    for (int n = 0; n * (n + 1) <= order; ++n) {
        c[static_cast<std::size_t>(n * (n + 1))] = 1;
    }
    return {2, 0, order, std::move(c)};
}

LaurentSeries theta2_fourth(int order)
{
    require_order(order, 1, "theta2_fourth");
    return Rational(16) * shift(series_pow(theta2_reduced(order - 1), 4), 1);
}

LogDerivative theta_logderiv(int j, int order)
{
    require_order(order, 1, "theta_logderiv");
    LaurentSeries f = LaurentSeries::zero(2, order);
    Rational offset = 0;
    switch (j) {
        case 2:
            f = theta2_reduced(order);
            offset = ratio(1, 8);
            break;
        case 3: f = theta3(order); break;
        case 4: f = theta4(order); break;
        default: throw Error("theta_logderiv: j must be 2, 3 or 4");
    }
    // q d/dq = (1/2) p d/dp on lattice 2.
    return {offset, ratio(1, 2) * theta_op(f) / f};
}

NamedForm named_form(FormName name, int order, int lattice, Group group)
{
    switch (name) {
        case FormName::E2: return {name, eisenstein(2, order, lattice), 2};
        case FormName::E4: return {name, eisenstein(4, order, lattice), 4};
        case FormName::E6: return {name, eisenstein(6, order, lattice), 6};
        case FormName::Eta24:
            return {name, on_lattice([](int n) { return eta_power(24, n); }, order, lattice), 12};
        case FormName::Eta12:
        case FormName::DeltaHalf: return {name, eta_power(12, order), 6};
        case FormName::J1728:
            return {name,
                    on_lattice(
                        [](int n) { return series_pow(eisenstein(4, n + 1), 3) / eta_power(24, n + 2); },
                        order, lattice),
                    0};
        case FormName::Hauptmodul: return {name, hauptmodul(group, order), 0};
        case FormName::SeedT0: return {name, seed_t0(group, order), -2};
    }
    throw Error("named_form: unknown form");
}

namespace {

struct CatalogEntry {
    FormName name;
    Group group;
};

const std::map<std::string, CatalogEntry, std::less<>> &catalog()
{
    static const std::map<std::string, CatalogEntry, std::less<>> entries = {
        {"E2", {FormName::E2, Group::Full}},
        {"E4", {FormName::E4, Group::Full}},
        {"E6", {FormName::E6, Group::Full}},
        {"Eta12", {FormName::Eta12, Group::Squares}},
        {"Eta24", {FormName::Eta24, Group::Full}},
        {"Delta", {FormName::Eta24, Group::Full}},
        {"DeltaHalf", {FormName::DeltaHalf, Group::Squares}},
        {"J1728", {FormName::J1728, Group::Full}},
        {"hauptmodul-full", {FormName::Hauptmodul, Group::Full}},
        {"hauptmodul-squares", {FormName::Hauptmodul, Group::Squares}},
        {"seed-full", {FormName::SeedT0, Group::Full}},
        {"seed-squares", {FormName::SeedT0, Group::Squares}},
    };
    return entries;
}

} // namespace

NamedForm named_form(std::string_view name, int order, int lattice)
{
    const auto it = catalog().find(name);
    if (it == catalog().end()) {
        throw Error("unknown form '" + std::string(name) + "'");
    }
    return named_form(it->second.name, order, lattice, it->second.group);
}

std::vector<std::string> catalog_names()
{
    std::vector<std::string> out;
    for (const auto &[key, entry] : catalog()) {
        out.push_back(key);
    }
    return out;
}

bool IdentityReport::all_zero() const
{
    for (const auto &r : residuals) {
        if (!r.residual.is_zero()) {
            return false;
        }
    }
    return true;
}

void IdentityReport::require_zero() const
{
    for (const auto &r : residuals) {
        if (!r.residual.is_zero()) {
            const int n = r.residual.valuation();
            throw IdentityViolated(r.name + ": residual coefficient at exponent " + std::to_string(n)
                                   + " is " + to_string(r.residual.coeff(n)));
        }
    }
}

IdentityReport check_ramanujan(int order)
{
    require_order(order, 2, "check_ramanujan");
    const LaurentSeries e2 = eisenstein(2, order);
    const LaurentSeries e4 = eisenstein(4, order);
    const LaurentSeries e6 = eisenstein(6, order);
    const LaurentSeries delta = eta_power(24, order);
    IdentityReport report;
    report.residuals.push_back({"theta Delta = E2 Delta", theta_op(delta) - e2 * delta});
    report.residuals.push_back(
        {"theta E2 = (E2^2 - E4)/12", theta_op(e2) - ratio(1, 12) * (e2 * e2 - e4)});
    report.residuals.push_back(
        {"theta E4 = (E2 E4 - E6)/3", theta_op(e4) - ratio(1, 3) * (e2 * e4 - e6)});
    report.residuals.push_back(
        {"theta E6 = (E2 E6 - E4^2)/2", theta_op(e6) - ratio(1, 2) * (e2 * e6 - e4 * e4)});
    return report;
}

IdentityReport check_jacobi(int order)
{
    require_order(order, 1, "check_jacobi");
    const LaurentSeries t3 = theta3(order);
    const LaurentSeries t4 = theta4(order);
    IdentityReport report;
    report.residuals.push_back({"theta2^4 + theta4^4 - theta3^4",
                                theta2_fourth(order) + series_pow(t4, 4) - series_pow(t3, 4)});
    return report;
}

} // namespace modeq
