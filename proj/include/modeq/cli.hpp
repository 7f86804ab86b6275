#pragma once

// Command-line front end: series, solve, verify, examples, identities.

#include <iosfwd>
#include <string>
#include <vector>

#include "modeq/errors.hpp"

namespace modeq::cli {

enum class Kind { Series, Solve, Verify, Examples, Identities, Help };
enum class Format { Text, Json };

struct Command {
    Kind kind = Kind::Solve;
    std::string name; // series
    int r = 0;
    int order = 40;
    int lattice = 1;
    Format format = Format::Text;
    bool numeric = false;
    double tolerance = 1e-6;
    std::string help; // usage text for Kind::Help
};

// Invalid or missing arguments; `help` carries the usage text.
class UsageError : public Error {
  public:
    UsageError(const std::string &what, std::string help) : Error(what), help(std::move(help)) {}
    std::string help;
};

constexpr int kMinOrder = 1;
constexpr int kMaxOrder = 2000;
constexpr int kMaxR = 200;

// argv without the program name.
Command parse_args(const std::vector<std::string> &args);

// 0 on success, 1 when any check fails or the computation raises.
int run(const Command &cmd, std::ostream &out, std::ostream &err);

// parse_args + run; 2 on usage errors. Errors go to `err` as JSON.
int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace modeq::cli
