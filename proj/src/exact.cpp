#include "modeq/exact.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace modeq {

Rational ratio(long num, long den)
{
    if (den == 0) {
        throw Error("zero denominator");
    }
    Rational r(num, 1);
    r /= den;
    return r;
}

std::string to_string(const Rational &x) { return x.get_str(); }

Rational parse_rational(const std::string &text)
{
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
        throw Error("malformed rational: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries::LaurentSeries(int lattice, int n_min, int order, std::vector<Rational> coeffs)
    : lattice_(lattice), n_min_(n_min), order_(order), coeffs_(std::move(coeffs))
{
    if (lattice_ < 1) {
        throw IncompatibleLattice("lattice must be positive");
    }
    normalize();
}

void LaurentSeries::normalize()
{
    if (n_min_ > order_) {
        n_min_ = order_;
        coeffs_.assign(1, Rational(0));
        return;
    }
    coeffs_.resize(static_cast<std::size_t>(order_ - n_min_ + 1));
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) {
        ++lead;
    }
    if (lead == coeffs_.size()) {
        n_min_ = order_;
        coeffs_.assign(1, Rational(0));
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        n_min_ += static_cast<int>(lead);
    }
}

LaurentSeries LaurentSeries::zero(int lattice, int order) { return {lattice, order, order, {}}; }

LaurentSeries LaurentSeries::constant(const Rational &c, int lattice, int order)
{
    return {lattice, 0, order, {c}};
}

LaurentSeries LaurentSeries::monomial(const Rational &c, int exponent, int lattice, int order)
{
    return {lattice, exponent, order, {c}};
}

Rational LaurentSeries::coeff(int n) const
{
    if (n > order_) {
        throw UnknownCoefficient("coefficient at exponent " + std::to_string(n)
                                 + " is beyond the known order " + std::to_string(order_));
    }
    if (n < n_min_) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(n - n_min_)];
}

int LaurentSeries::valuation() const
{
    // normalize() strips leading zeros, so the first stored entry is either
    // nonzero or the lone zero of an all-zero series.
    return coeffs_.front() != 0 ? n_min_ : order_ + 1;
}

Rational LaurentSeries::leading_coefficient() const
{
    if (is_zero()) {
        throw ZeroLeadingCoefficient("series is zero through order " + std::to_string(order_));
    }
    return coeffs_.front();
}

LaurentSeries LaurentSeries::truncated(int order) const
{
    if (order > order_) {
        throw UnknownCoefficient("cannot extend a series beyond its known order");
    }
    return {lattice_, n_min_, order, coeffs_};
}

// ---------------------------------------------------------------------------
// lattice handling

LaurentSeries lattice_align(const LaurentSeries &a, int m_target)
{
    if (m_target < 1 || m_target % a.lattice() != 0) {
        throw IncompatibleLattice("cannot align lattice " + std::to_string(a.lattice()) + " to "
                                  + std::to_string(m_target));
    }
    const int k = m_target / a.lattice();
    if (k == 1) {
        return a;
    }
    const auto &c = a.coefficients();
    std::vector<Rational> out(static_cast<std::size_t>((static_cast<int>(c.size()) - 1) * k + 1));
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i * static_cast<std::size_t>(k)] = c[i];
    }
    // Exponents k*N+1 .. k*(N+1)-1 are not multiples of k, hence known zeros.
    return {m_target, a.n_min() * k, (a.order() + 1) * k - 1, std::move(out)};
}

namespace {

int common_lattice(const LaurentSeries &a, const LaurentSeries &b)
{
    return std::lcm(a.lattice(), b.lattice());
}

} // namespace

LaurentSeries negate_variable(const LaurentSeries &a)
{
    std::vector<Rational> out = a.coefficients();
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (((a.n_min() + static_cast<int>(i)) & 1) != 0) {
            out[i] = -out[i];
        }
    }
    return {a.lattice(), a.n_min(), a.order(), std::move(out)};
}

// ---------------------------------------------------------------------------
// ring operations

LaurentSeries operator+(const LaurentSeries &a_in, const LaurentSeries &b_in)
{
    const int m = common_lattice(a_in, b_in);
    const LaurentSeries a = lattice_align(a_in, m);
    const LaurentSeries b = lattice_align(b_in, m);
    const int order = std::min(a.order(), b.order());
    const int lo = std::min(a.n_min(), b.n_min());
    if (lo > order) {
        return LaurentSeries::zero(m, order);
    }
    std::vector<Rational> out(static_cast<std::size_t>(order - lo + 1));
    for (int n = lo; n <= order; ++n) {
        out[static_cast<std::size_t>(n - lo)] = a.coeff(n) + b.coeff(n);
    }
    return {m, lo, order, std::move(out)};
}

LaurentSeries operator-(const LaurentSeries &a)
{
    std::vector<Rational> out = a.coefficients();
    for (auto &c : out) {
        c = -c;
    }
    return {a.lattice(), a.n_min(), a.order(), std::move(out)};
}

LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries &a_in, const LaurentSeries &b_in)
{
    const int m = common_lattice(a_in, b_in);
    const LaurentSeries a = lattice_align(a_in, m);
    const LaurentSeries b = lattice_align(b_in, m);
    const int va = a.valuation();
    const int vb = b.valuation();
    const int order = std::min(a.order() + vb, b.order() + va);
    if (a.is_zero() || b.is_zero() || va + vb > order) {
        return LaurentSeries::zero(m, order);
    }
    const auto &ca = a.coefficients();
    const auto &cb = b.coefficients();
    std::vector<Rational> out(static_cast<std::size_t>(order - (va + vb) + 1));
    Rational term;
    for (int n = va + vb; n <= order; ++n) {
        Rational &acc = out[static_cast<std::size_t>(n - va - vb)];
        const int i_lo = std::max(va, n - b.order());
        const int i_hi = std::min(a.order(), n - vb);
        for (int i = i_lo; i <= i_hi; ++i) {
            const Rational &x = ca[static_cast<std::size_t>(i - va)];
            const Rational &y = cb[static_cast<std::size_t>(n - i - vb)];
            if (x == 0 || y == 0) {
                continue;
            }
            mpq_mul(term.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
            acc += term;
        }
    }
    return {m, va + vb, order, std::move(out)};
}

LaurentSeries operator*(const Rational &c, const LaurentSeries &a)
{
    std::vector<Rational> out = a.coefficients();
    for (auto &x : out) {
        x *= c;
    }
    return {a.lattice(), a.n_min(), a.order(), std::move(out)};
}

LaurentSeries operator*(const LaurentSeries &a, const Rational &c) { return c * a; }

LaurentSeries operator+(const LaurentSeries &a, const Rational &c)
{
    return a + LaurentSeries::constant(c, a.lattice(), a.order());
}

LaurentSeries operator-(const LaurentSeries &a, const Rational &c) { return a + Rational(-c); }

LaurentSeries series_inv(const LaurentSeries &a)
{
    if (a.is_zero()) {
        throw ZeroLeadingCoefficient("cannot invert a series that is zero through order "
                                     + std::to_string(a.order()));
    }
    const int v = a.valuation();
    const int precision = a.order() - v; // relative terms known after the leading one
    const auto &c = a.coefficients();
    const Rational lead_inv = 1 / c.front();
    std::vector<Rational> out(static_cast<std::size_t>(precision + 1));
    out[0] = lead_inv;
    Rational acc;
    Rational term;
    for (int k = 1; k <= precision; ++k) {
        acc = 0;
        for (int j = 1; j <= k; ++j) {
            const Rational &x = c[static_cast<std::size_t>(j)];
            if (x == 0) {
                continue;
            }
            mpq_mul(term.get_mpq_t(), x.get_mpq_t(), out[static_cast<std::size_t>(k - j)].get_mpq_t());
            acc += term;
        }
        out[static_cast<std::size_t>(k)] = -acc * lead_inv;
    }
    return {a.lattice(), -v, precision - v, std::move(out)};
}

LaurentSeries operator/(const LaurentSeries &a, const LaurentSeries &b) { return a * series_inv(b); }

LaurentSeries operator/(const Rational &c, const LaurentSeries &a) { return c * series_inv(a); }

LaurentSeries series_pow(const LaurentSeries &a, unsigned k)
{
    LaurentSeries result = LaurentSeries::constant(1, a.lattice(), a.order() - a.valuation());
    LaurentSeries base = a;
    bool first = true;
    while (k > 0) {
        if ((k & 1U) != 0) {
            result = first ? base : result * base;
            first = false;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// operators on exponents

LaurentSeries theta_op(const LaurentSeries &a)
{
    std::vector<Rational> out = a.coefficients();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= a.n_min() + static_cast<int>(i);
    }
    return {a.lattice(), a.n_min(), a.order(), std::move(out)};
}

LaurentSeries theta_antider(const LaurentSeries &a)
{
    if (a.n_min() <= 0) {
        if (a.order() < 0) {
            throw UnknownCoefficient("constant term is beyond the known order");
        }
        if (a.coeff(0) != 0) {
            throw NonzeroConstantTerm("theta antiderivative needs a zero constant term, got "
                                      + to_string(a.coeff(0)));
        }
    }
    std::vector<Rational> out = a.coefficients();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int n = a.n_min() + static_cast<int>(i);
        if (n != 0) {
            out[i] /= n;
        }
    }
    return {a.lattice(), a.n_min(), a.order(), std::move(out)};
}

LaurentSeries principal_part(const LaurentSeries &a)
{
    const int top = std::min(-1, a.order());
    std::vector<Rational> out;
    for (int n = a.n_min(); n <= top; ++n) {
        out.push_back(a.coeff(n));
    }
    // The principal part is a finite polynomial: exact to the source order.
    return {a.lattice(), a.n_min(), a.order(), std::move(out)};
}

Rational constant_term(const LaurentSeries &a) { return a.coeff(0); }

LaurentSeries shift(const LaurentSeries &a, int k)
{
    return {a.lattice(), a.n_min() + k, a.order() + k, a.coefficients()};
}

Agreement compare(const LaurentSeries &a_in, const LaurentSeries &b_in)
{
    const int m = common_lattice(a_in, b_in);
    const LaurentSeries a = lattice_align(a_in, m);
    const LaurentSeries b = lattice_align(b_in, m);
    Agreement out;
    out.checked_through = std::min(a.order(), b.order());
    out.equal = true;
    for (int n = std::min(a.n_min(), b.n_min()); n <= out.checked_through; ++n) {
        if (a.coeff(n) != b.coeff(n)) {
            out.equal = false;
            out.first_mismatch = n;
            break;
        }
    }
    return out;
}

bool equal_to_order(const LaurentSeries &a, const LaurentSeries &b) { return compare(a, b).equal; }

// ---------------------------------------------------------------------------
// prefactored series

PrefactoredSeries operator+(const PrefactoredSeries &a, const PrefactoredSeries &b)
{
    if (a.e != b.e) {
        throw PrefactorMismatch("cannot add (i*pi)^" + std::to_string(a.e) + " and (i*pi)^"
                                + std::to_string(b.e) + " terms");
    }
    return {a.e, a.body + b.body};
}

PrefactoredSeries operator-(const PrefactoredSeries &a, const PrefactoredSeries &b)
{
    return a + PrefactoredSeries{b.e, -b.body};
}

PrefactoredSeries operator*(const PrefactoredSeries &a, const PrefactoredSeries &b)
{
    return {a.e + b.e, a.body * b.body};
}

// ---------------------------------------------------------------------------
// serialization

nlohmann::json to_json(const LaurentSeries &s)
{
    nlohmann::json coeffs = nlohmann::json::object();
    for (std::size_t i = 0; i < s.coefficients().size(); ++i) {
        const Rational &c = s.coefficients()[i];
        if (c != 0) {
            coeffs[std::to_string(s.n_min() + static_cast<int>(i))] = to_string(c);
        }
    }
    return {{"m", s.lattice()}, {"n_min", s.n_min()}, {"N", s.order()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const PrefactoredSeries &s)
{
    nlohmann::json j = to_json(s.body);
    j["e"] = s.e;
    return j;
}

LaurentSeries series_from_json(const nlohmann::json &j)
{
    const int m = j.at("m").get<int>();
    const int n_min = j.at("n_min").get<int>();
    const int order = j.at("N").get<int>();
    std::vector<Rational> coeffs(order >= n_min ? static_cast<std::size_t>(order - n_min + 1) : 0);
    for (const auto &[key, value] : j.at("coeffs").items()) {
        const int n = std::stoi(key);
        if (n < n_min || n > order) {
            throw Error("coefficient exponent " + key + " outside [n_min, N]");
        }
        coeffs[static_cast<std::size_t>(n - n_min)] = parse_rational(value.get<std::string>());
    }
    return {m, n_min, order, std::move(coeffs)};
}

PrefactoredSeries prefactored_from_json(const nlohmann::json &j)
{
    return {j.value("e", 0), series_from_json(j)};
}

std::string to_text(const LaurentSeries &s)
{
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < s.coefficients().size(); ++i) {
        const Rational &c = s.coefficients()[i];
        if (c == 0) {
            continue;
        }
        if (any) {
            os << " + ";
        }
        os << to_string(c) << " * p^" << s.n_min() + static_cast<int>(i);
        any = true;
    }
    if (!any) {
        os << "0";
    }
    os << " + O(p^" << s.order() + 1 << ")";
    return os.str();
}

std::string to_text(const PrefactoredSeries &s)
{
    if (s.e == 0) {
        return to_text(s.body);
    }
    return "(i*pi)^" + std::to_string(s.e) + " * (" + to_text(s.body) + ")";
}

std::ostream &operator<<(std::ostream &os, const LaurentSeries &s) { return os << to_text(s); }

} // namespace modeq
