#pragma once

#include <stdexcept>
#include <string>

namespace modeq {

// Root of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// exact
class ZeroLeadingCoefficient : public Error {
  public:
    using Error::Error;
};
class NonzeroConstantTerm : public Error {
  public:
    using Error::Error;
};
class IncompatibleLattice : public Error {
  public:
    using Error::Error;
};
class UnknownCoefficient : public Error {
  public:
    using Error::Error;
};
class PrefactorMismatch : public Error {
  public:
    using Error::Error;
};

// modforms
class IdentityViolated : public Error {
  public:
    using Error::Error;
};

// solver
class MatchFailure : public Error {
  public:
    using Error::Error;
};
class ResidualNonzero : public Error {
  public:
    using Error::Error;
};
class ZeroDerivative : public Error {
  public:
    using Error::Error;
};
class DegenerateEntries : public Error {
  public:
    using Error::Error;
};

// numeric
class TailTooLarge : public Error {
  public:
    using Error::Error;
};
class PointOutsideDomain : public Error {
  public:
    using Error::Error;
};
class DerivativeVanishes : public Error {
  public:
    using Error::Error;
};
class GroupMismatch : public Error {
  public:
    using Error::Error;
};

} // namespace modeq
