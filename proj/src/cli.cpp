#include "modeq/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modeq/closed_forms.hpp"
#include "modeq/modforms.hpp"
#include "modeq/numeric.hpp"
#include "modeq/solver.hpp"

namespace modeq::cli {

namespace {

using nlohmann::json;

void add_format(CLI::App *sub, std::string &format)
{
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->default_str("text");
}

void add_order(CLI::App *sub, int &order)
{
    sub->add_option("--order", order, "truncation order")->check(CLI::Range(kMinOrder, kMaxOrder))->default_str("40");
}

void add_r(CLI::App *sub, int &r, bool required)
{
    auto *opt = sub->add_option("--r", r, "positive integer r")->check(CLI::Range(1, kMaxR));
    if (required) {
        opt->required();
    }
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

json checks_json(const std::vector<Check> &checks)
{
    json out = json::array();
    for (const auto &c : checks) {
        out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return out;
}

void print_checks(std::ostream &out, const std::vector<Check> &checks)
{
    for (const auto &c : checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
    }
}

void print_golden(std::ostream &out, const std::vector<GoldenCheck> &checks)
{
    for (const auto &c : checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << (c.provisional ? "[provisional] " : "") << c.name << "  ("
            << c.detail << ")\n";
    }
}

Check residual_check(const std::string &name, const LaurentSeries &residual)
{
    if (residual.is_zero()) {
        return {name, true, "zero through p^" + std::to_string(residual.order())};
    }
    return {name, false, "nonzero at p^" + std::to_string(residual.valuation())};
}

std::vector<MoebiusMatrix> generators(Group group)
{
    if (group == Group::Full) {
        return {MoebiusMatrix::S(), MoebiusMatrix::T()};
    }
    return {MoebiusMatrix::P(), MoebiusMatrix::Q()};
}

std::string matrix_label(const MoebiusMatrix &m)
{
    return "[" + std::to_string(m.a()) + "," + std::to_string(m.b()) + "," + std::to_string(m.c()) + ","
           + std::to_string(m.d()) + "]";
}

std::string sci(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

int run_series(const Command &cmd, std::ostream &out)
{
    const NamedForm form = named_form(cmd.name, cmd.order, cmd.lattice);
    if (cmd.format == Format::Json) {
        json j = to_json(form.series);
        j["name"] = cmd.name;
        j["weight"] = form.weight;
        out << j.dump(2) << "\n";
    } else {
        out << cmd.name << " (weight " << form.weight << ") = " << to_text(form.series) << "\n";
    }
    return 0;
}

int run_solve(const Command &cmd, std::ostream &out)
{
    const SolveResult res = solve_ode(cmd.r, cmd.order);
    if (cmd.format == Format::Json) {
        out << to_json(res).dump(2) << "\n";
        return 0;
    }
    out << "r = " << res.r << ", group = " << group_name(res.group) << ", m = " << res.m << ", n0 = " << res.n0
        << "\n";
    out << "X = (";
    for (std::size_t i = 0; i < res.X.size(); ++i) {
        out << (i ? ", " : "") << to_string(res.X[i]);
    }
    out << ")\n";
    out << "c/u = " << to_string(res.c_over_u) << "\n";
    out << "g = " << to_text(res.g) << "\n";
    out << "S = " << to_text(res.S) << "\n";
    out << "R = " << to_text(res.R) << "\n";
    out << "ode residual zero: " << (res.ode_residual.is_zero() ? "yes" : "no") << "\n";
    out << "schwarz residual zero: " << (res.schwarz_residual.is_zero() ? "yes" : "no") << "\n";
    out << "trusted order: " << res.trusted_order() << "\n";
    return 0;
}

int run_verify(const Command &cmd, std::ostream &out)
{
    std::vector<Check> checks;
    const SolveResult res = solve_ode(cmd.r, cmd.order);
    checks.push_back(residual_check("ode residual", res.ode_residual));
    checks.push_back(residual_check("schwarz residual", res.schwarz_residual));

    const LaurentSeries oracle = frobenius_oracle(cmd.r, res.S.order());
    const Agreement a = compare((1 / res.S.leading_coefficient()) * res.S, oracle);
    checks.push_back({"frobenius oracle", a.equal,
                      a.equal ? "agree through p^" + std::to_string(a.checked_through)
                              : "first mismatch at p^" + std::to_string(*a.first_mismatch)});
    checks.push_back({"g E4 constant term", constant_term(res.g * eisenstein(4, res.g.order() + 1, res.m)) == 0,
                      "zero"});

    if (cmd.numeric) {
        EvalConfig cfg;
        cfg.tolerance = cmd.tolerance;
        for (const auto &gamma : generators(res.group)) {
            const std::string name = "equivariance " + matrix_label(gamma);
            try {
                const auto rep = check_equivariance(res, gamma, cfg);
                checks.push_back({name, rep.pass, "max residual " + sci(rep.max_residual)});
            } catch (const Error &e) {
                checks.push_back({name, false, e.what()});
            }
        }
        try {
            const auto rep = check_schwarz_numeric(res, cfg);
            checks.push_back({"numeric schwarzian", rep.pass, "max residual " + sci(rep.max_residual)});
        } catch (const Error &e) {
            checks.push_back({"numeric schwarzian", false, e.what()});
        }
    }

    const bool pass = std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
    if (cmd.format == Format::Json) {
        out << json{{"r", cmd.r}, {"order", cmd.order}, {"checks", checks_json(checks)}, {"pass", pass}}.dump(2)
            << "\n";
    } else {
        print_checks(out, checks);
    }
    return pass ? 0 : 1;
}

int run_examples(const Command &cmd, std::ostream &out)
{
    std::vector<int> rs;
    if (cmd.r == 0) {
        rs = {1, 2, 3, 4};
    } else if (cmd.r <= 4) {
        rs = {cmd.r};
    } else {
        throw UsageError("examples: --r must be in 1..4", "");
    }
    bool pass = true;
    json j = json::object();
    for (int r : rs) {
        const auto checks = closed_form_checks(r, cmd.order);
        pass = pass && all_pass(checks);
        if (cmd.format == Format::Json) {
            json arr = json::array();
            for (const auto &c : checks) {
                arr.push_back(to_json(c));
            }
            j[std::to_string(r)] = arr;
        } else {
            out << "r = " << r << "\n";
            print_golden(out, checks);
        }
    }
    if (cmd.format == Format::Json) {
        out << json{{"examples", j}, {"pass", pass}}.dump(2) << "\n";
    }
    return pass ? 0 : 1;
}

int run_identities(const Command &cmd, std::ostream &out)
{
    const auto checks = identity_checks(cmd.order);
    const bool pass = all_pass(checks);
    if (cmd.format == Format::Json) {
        json arr = json::array();
        for (const auto &c : checks) {
            arr.push_back(to_json(c));
        }
        out << json{{"identities", arr}, {"pass", pass}}.dump(2) << "\n";
    } else {
        print_golden(out, checks);
    }
    return pass ? 0 : 1;
}

void write_error(std::ostream &err, const std::string &kind, const std::string &message)
{
    err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

} // namespace

Command parse_args(const std::vector<std::string> &args)
{
    Command cmd;
    std::string format = "text";
    CLI::App app{"Quasi-modular solutions of y'' + pi^2 r^2 E4 y = 0 and equivariant solutions of "
                 "{h, tau} = 2 pi^2 r^2 E4",
                 "modeq"};
    app.require_subcommand(1);

    auto *series = app.add_subcommand("series", "print a catalog form");
    series->add_option("name", cmd.name, "form name")->required()->check(CLI::IsMember(catalog_names()));
    add_order(series, cmd.order);
    series->add_option("--lattice", cmd.lattice, "lattice m (p = q^(1/m))")->check(CLI::IsMember({1, 2}));
    add_format(series, format);

    auto *solve = app.add_subcommand("solve", "run the construction for one r");
    add_r(solve, cmd.r, true);
    add_order(solve, cmd.order);
    add_format(solve, format);

    auto *verify = app.add_subcommand("verify", "check residuals, oracle and optionally equivariance");
    add_r(verify, cmd.r, true);
    add_order(verify, cmd.order);
    verify->add_flag("--numeric", cmd.numeric, "also run the numeric checks");
    verify->add_option("--tolerance", cmd.tolerance, "numeric tolerance")->check(CLI::PositiveNumber)->default_str("1e-6");
    add_format(verify, format);

    auto *examples = app.add_subcommand("examples", "compare r = 1..4 with their closed forms");
    add_r(examples, cmd.r, false);
    examples->get_options().back()->check(CLI::Range(1, 4));
    add_order(examples, cmd.order);
    add_format(examples, format);

    auto *identities = app.add_subcommand("identities", "Ramanujan, Jacobi and cross-ratio identities");
    add_order(identities, cmd.order);
    add_format(identities, format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        cmd.kind = Kind::Help;
        cmd.help = app.help();
        return cmd;
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what(), app.help());
    }

    const std::vector<std::pair<CLI::App *, Kind>> kinds{{series, Kind::Series},
                                                         {solve, Kind::Solve},
                                                         {verify, Kind::Verify},
                                                         {examples, Kind::Examples},
                                                         {identities, Kind::Identities}};
    for (const auto &[sub, kind] : kinds) {
        if (sub->parsed()) {
            cmd.kind = kind;
        }
    }
    cmd.format = format == "json" ? Format::Json : Format::Text;
    return cmd;
}

int run(const Command &cmd, std::ostream &out, std::ostream &err)
{
    try {
        switch (cmd.kind) {
            case Kind::Help: out << cmd.help; return 0;
            case Kind::Series: return run_series(cmd, out);
            case Kind::Solve: return run_solve(cmd, out);
            case Kind::Verify: return run_verify(cmd, out);
            case Kind::Examples: return run_examples(cmd, out);
            case Kind::Identities: return run_identities(cmd, out);
        }
    } catch (const UsageError &e) {
        write_error(err, "usage", e.what());
        return 2;
    } catch (const std::exception &e) {
        write_error(err, "failure", e.what());
        return 1;
    }
    return 1;
}

int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Command cmd;
    try {
        cmd = parse_args(args);
    } catch (const UsageError &e) {
        write_error(err, "usage", e.what());
        err << e.help;
        return 2;
    }
    return run(cmd, out, err);
}

} // namespace modeq::cli
