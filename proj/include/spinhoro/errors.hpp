#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinhoro {

/// Failure categories raised by the library and surfaced by the CLI.
enum class Errc {
    NotHermitian,
    NotUnimodular,
    ZeroSpinor,
    InvalidFlag,
    NotFutureLightlike,
    DegenerateInput,
    NotUnitVector,
    CommonCentre,
    DegenerateTetrahedron,
    DuplicateCentre,
    NonRealCentre,
    MultipleInfinities,
    RankDeficient,
    DegeneratePair,
    NotTotallyPositive,
    ZeroPlucker,
    ParseError,
    WrongArity,
    EmptyWindow,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NotHermitian: return "NotHermitian";
        case Errc::NotUnimodular: return "NotUnimodular";
        case Errc::ZeroSpinor: return "ZeroSpinor";
        case Errc::InvalidFlag: return "InvalidFlag";
        case Errc::NotFutureLightlike: return "NotFutureLightlike";
        case Errc::DegenerateInput: return "DegenerateInput";
        case Errc::NotUnitVector: return "NotUnitVector";
        case Errc::CommonCentre: return "CommonCentre";
        case Errc::DegenerateTetrahedron: return "DegenerateTetrahedron";
        case Errc::DuplicateCentre: return "DuplicateCentre";
        case Errc::NonRealCentre: return "NonRealCentre";
        case Errc::MultipleInfinities: return "MultipleInfinities";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::DegeneratePair: return "DegeneratePair";
        case Errc::NotTotallyPositive: return "NotTotallyPositive";
        case Errc::ZeroPlucker: return "ZeroPlucker";
        case Errc::ParseError: return "ParseError";
        case Errc::WrongArity: return "WrongArity";
        case Errc::EmptyWindow: return "EmptyWindow";
    }
    return "Unknown";
}

class GeometryError : public std::runtime_error {
public:
    GeometryError(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Default tolerances shared across modules.
namespace tolerance {
// identity checks on low-degree polynomial formulas
inline constexpr double kIdentity = 1e-9;
// exactly linear maps
inline constexpr double kLinear = 1e-12;
// vanishing bracket, relative to the product of spinor norms
inline constexpr double kDegenerate = 1e-10;
// eta is treated as zero when |eta| <= kInfinity * |xi|
inline constexpr double kInfinity = 1e-12;
}  // namespace tolerance

}  // namespace spinhoro
