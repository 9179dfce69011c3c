#pragma once

#include <stdexcept>
#include <string>

namespace secord {

/// Structured failure codes. Every exception thrown by the library carries one
/// of these so callers can branch on the cause without parsing messages.
enum class errc {
    invalid_config,          ///< malformed parameter vector, grid, or spec field
    out_of_support,          ///< function evaluated outside its support interval
    degenerate_denominator,  ///< ratio with a (numerically) vanishing denominator
    shape_not_unit,          ///< closed-form path requires every shape equal to 1
    invalid_probability,     ///< probability argument outside (0,1)
    grid_below_location,     ///< comparison grid starts at or below a location parameter
    generator_domain,        ///< Archimedean generator evaluated outside its domain
    unsupported_generator,   ///< no sampling construction available for the family
    length_mismatch,         ///< paired vectors of different lengths
    structural_mismatch,     ///< two configs structurally incompatible for a check
    policy_exhausted,        ///< random-config policy failed to satisfy a hypothesis
    evaluation_failure,      ///< user-supplied function handle failed at a probe point
    io_error,                ///< file could not be read or written
};

/// Maps a code to its stable identifier (used in CLI diagnostics and reports).
inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_config:         return "InvalidConfig";
        case errc::out_of_support:         return "OutOfSupport";
        case errc::degenerate_denominator: return "DegenerateDenominator";
        case errc::shape_not_unit:         return "ShapeNotUnit";
        case errc::invalid_probability:    return "InvalidProbability";
        case errc::grid_below_location:    return "GridBelowLocation";
        case errc::generator_domain:       return "GeneratorDomain";
        case errc::unsupported_generator:  return "UnsupportedGenerator";
        case errc::length_mismatch:        return "LengthMismatch";
        case errc::structural_mismatch:    return "StructuralMismatch";
        case errc::policy_exhausted:       return "PolicyExhausted";
        case errc::evaluation_failure:     return "EvaluationFailure";
        case errc::io_error:               return "IoError";
    }
    return "UnknownError";
}

/// Single exception type for the whole library.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace secord
