#include "uml/error.hpp"

namespace uml {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NearZeroConstantTerm: return "NearZeroConstantTerm";
    case Errc::OutsideDisk: return "OutsideDisk";
    case Errc::NotInUnitBall: return "NotInUnitBall";
    case Errc::AtPole: return "AtPole";
    case Errc::InfeasibleExtremal: return "InfeasibleExtremal";
    case Errc::NoSignChange: return "NoSignChange";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::InvalidRegime: return "InvalidRegime";
    case Errc::OutsideWindow: return "OutsideWindow";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace uml
