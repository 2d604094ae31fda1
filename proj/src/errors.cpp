#include "tttoda/errors.hpp"

namespace ttt {

const char* kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::OutsideRegion: return "OutsideRegion";
    case ErrorKind::NegativeAlpha: return "NegativeAlpha";
    case ErrorKind::PoleArgument: return "PoleArgument";
    case ErrorKind::ResonantPoint: return "ResonantPoint";
    case ErrorKind::WrongCase: return "WrongCase";
    case ErrorKind::ContourTooClose: return "ContourTooClose";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::NearResonanceIllConditioned: return "NearResonanceIllConditioned";
    case ErrorKind::CubatureBudgetExceeded: return "CubatureBudgetExceeded";
    case ErrorKind::StructureInconsistent: return "StructureInconsistent";
    case ErrorKind::StiffFailure: return "StiffFailure";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BlowUp: return "BlowUp";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::SignalBelowNoise: return "SignalBelowNoise";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

ErrorFamily family_of(ErrorKind k)
{
    switch (k) {
    case ErrorKind::OutsideRegion:
    case ErrorKind::NegativeAlpha:
    case ErrorKind::PoleArgument:
    case ErrorKind::ResonantPoint:
    case ErrorKind::WrongCase:
        return ErrorFamily::Domain;
    case ErrorKind::StructureInconsistent:
        return ErrorFamily::Structure;
    case ErrorKind::StiffFailure:
    case ErrorKind::Overflow:
    case ErrorKind::BlowUp:
    case ErrorKind::StepUnderflow:
    case ErrorKind::SignalBelowNoise:
        return ErrorFamily::Ode;
    case ErrorKind::ContourTooClose:
    case ErrorKind::NonConvergent:
    case ErrorKind::NearResonanceIllConditioned:
    case ErrorKind::CubatureBudgetExceeded:
        return ErrorFamily::Quadrature;
    case ErrorKind::InvalidArgument:
        return ErrorFamily::Usage;
    }
    return ErrorFamily::Usage;
}

}  // namespace ttt
