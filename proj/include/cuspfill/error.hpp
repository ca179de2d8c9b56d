#ifndef CUSPFILL_ERROR_HPP
#define CUSPFILL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuspfill {

enum class Errc {
    CoincidentEndpoints,
    InsideHoroball,
    CoincidesWithCenter,
    NotOnHorosphere,
    NotDisjoint,
    DegenerateLattice,
    NonPrimitiveSlope,
    NonPositiveInput,
    GenusTooSmall,
    NormalizedLengthTooShort,
    TwistPowerTooSmall,
    OutOfSimplifiedRange,
    InvalidShape,
    SamplingExhausted,
    InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Carries the least admissible twist power so callers can report it.
class TwistPowerTooSmall : public Error {
public:
    TwistPowerTooSmall(long n, long min_n);
    long min_n() const noexcept { return min_n_; }

private:
    long min_n_;
};

} // namespace cuspfill

#endif
