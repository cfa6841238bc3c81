#pragma once

#include <stdexcept>
#include <string>

namespace sqrtpot {

/// Input outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The inverse-square attraction is too strong: (D+2l-2)^2 + 8*M*a4 < 0.
/// No self-adjoint bound-state problem exists in this regime.
class supercritical_error : public domain_error {
  public:
    supercritical_error(double discriminant, std::string const& msg)
        : domain_error(msg)
        , discriminant_(discriminant)
    {
    }

    double discriminant() const { return discriminant_; }

  private:
    double discriminant_;
};

/// A recurrence denominator gamma(p) vanished inside the requested range.
class resonant_recurrence_error : public domain_error {
  public:
    resonant_recurrence_error(int p, std::string const& msg)
        : domain_error(msg)
        , index_(p)
    {
    }

    int index() const { return index_; }

  private:
    int index_;
};

/// No real value of a3 makes the series terminate for the given state.
class no_termination_error : public domain_error {
  public:
    using domain_error::domain_error;
};

/// An energy bracket did not isolate exactly one eigenvalue.
class bracket_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A numerical routine failed to reach its accuracy contract.
class accuracy_error : public std::runtime_error {
  public:
    accuracy_error(double achieved, std::string const& msg)
        : runtime_error(msg)
        , achieved_(achieved)
    {
    }

    /// Best error estimate reached before giving up.
    double achieved() const { return achieved_; }

  private:
    double achieved_;
};

} // namespace sqrtpot
