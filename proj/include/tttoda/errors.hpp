#pragma once

#include <stdexcept>
#include <string>

namespace ttt {

enum class ErrorKind {
    OutsideRegion,
    NegativeAlpha,
    PoleArgument,
    ResonantPoint,
    WrongCase,
    ContourTooClose,
    NonConvergent,
    NearResonanceIllConditioned,
    CubatureBudgetExceeded,
    StructureInconsistent,
    StiffFailure,
    Overflow,
    BlowUp,
    StepUnderflow,
    SignalBelowNoise,
    InvalidArgument,
};

// Coarse families used for process exit codes and C API return values.
enum class ErrorFamily { Domain = 2, Structure = 3, Ode = 4, Quadrature = 5, Usage = 1 };

const char* kind_name(ErrorKind k);
ErrorFamily family_of(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    ErrorFamily family() const { return family_of(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace ttt
