#include "cuspfill/error.hpp"

namespace cuspfill {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::CoincidentEndpoints: return "CoincidentEndpoints";
    case Errc::InsideHoroball: return "InsideHoroball";
    case Errc::CoincidesWithCenter: return "CoincidesWithCenter";
    case Errc::NotOnHorosphere: return "NotOnHorosphere";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::DegenerateLattice: return "DegenerateLattice";
    case Errc::NonPrimitiveSlope: return "NonPrimitiveSlope";
    case Errc::NonPositiveInput: return "NonPositiveInput";
    case Errc::GenusTooSmall: return "GenusTooSmall";
    case Errc::NormalizedLengthTooShort: return "NormalizedLengthTooShort";
    case Errc::TwistPowerTooSmall: return "TwistPowerTooSmall";
    case Errc::OutOfSimplifiedRange: return "OutOfSimplifiedRange";
    case Errc::InvalidShape: return "InvalidShape";
    case Errc::SamplingExhausted: return "SamplingExhausted";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

TwistPowerTooSmall::TwistPowerTooSmall(long n, long min_n)
    : Error(Errc::TwistPowerTooSmall,
            "twist power " + std::to_string(n) + " below admissible minimum " + std::to_string(min_n)),
      min_n_(min_n)
{
}

} // namespace cuspfill
