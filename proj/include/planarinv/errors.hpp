#pragma once

#include <stdexcept>
#include <string>

namespace planarinv {

struct MalformedCurve : std::runtime_error {
    explicit MalformedCurve(const std::string& what) : std::runtime_error("MalformedCurve: " + what) {}
};

struct DegenerateIntersection : std::runtime_error {
    explicit DegenerateIntersection(const std::string& what)
        : std::runtime_error("DegenerateIntersection: " + what) {}
};

struct NonIntegerTurning : std::runtime_error {
    explicit NonIntegerTurning(const std::string& what) : std::runtime_error("NonIntegerTurning: " + what) {}
};

struct BasePointOnCurve : std::runtime_error {
    explicit BasePointOnCurve(const std::string& what) : std::runtime_error("BasePointOnCurve: " + what) {}
};

struct EpsilonTooLarge : std::runtime_error {
    explicit EpsilonTooLarge(const std::string& what) : std::runtime_error("EpsilonTooLarge: " + what) {}
};

struct NonOddBottomIndex : std::runtime_error {
    explicit NonOddBottomIndex(const std::string& what) : std::runtime_error("NonOddBottomIndex: " + what) {}
};

struct GradingViolation : std::runtime_error {
    explicit GradingViolation(const std::string& what) : std::runtime_error("GradingViolation: " + what) {}
};

struct NotStable : std::runtime_error {
    explicit NotStable(const std::string& what) : std::runtime_error("NotStable: " + what) {}
};

struct StabilityLost : std::runtime_error {
    explicit StabilityLost(const std::string& what) : std::runtime_error("StabilityLost: " + what) {}
};

struct SiteInvalid : std::runtime_error {
    explicit SiteInvalid(const std::string& what) : std::runtime_error("SiteInvalid: " + what) {}
};

struct WrongKind : std::runtime_error {
    explicit WrongKind(const std::string& what) : std::runtime_error("WrongKind: " + what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("ParseError: " + what) {}
};

struct WindowMisaligned : std::runtime_error {
    explicit WindowMisaligned(const std::string& what) : std::runtime_error("WindowMisaligned: " + what) {}
};

}  // namespace planarinv
