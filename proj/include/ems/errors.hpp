#pragma once

#include <stdexcept>
#include <string>

namespace ems {

// Error taxonomy shared by all modules. CLI maps Error -> exit code 2,
// anything thrown by CLI11 itself -> exit code 1.
enum class errc {
    duplicate_id,
    duplicate_edge,
    missing_node,
    invalid_label,
    degenerate_geometry,
    parse_error,
    arity_error,
    unknown_descriptor,
    unsupported_or,
    no_template_match,
    unresolved_landmark,
    zero_mass,
    contradiction,
    missing_orientation,
    domain_mismatch,
    out_of_bounds,
    divergence,
    not_symmetric,
    unknown_id,
    invalid_argument,
    cycle,
    unbound_concept,
    io_error,
    bad_format,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::duplicate_id: return "duplicate-id";
        case errc::duplicate_edge: return "duplicate-edge";
        case errc::missing_node: return "missing-node";
        case errc::invalid_label: return "invalid-label";
        case errc::degenerate_geometry: return "degenerate-geometry";
        case errc::parse_error: return "parse-error";
        case errc::arity_error: return "arity-error";
        case errc::unknown_descriptor: return "unknown-descriptor";
        case errc::unsupported_or: return "unsupported-or";
        case errc::no_template_match: return "no-template-match";
        case errc::unresolved_landmark: return "unresolved-landmark";
        case errc::zero_mass: return "zero-mass";
        case errc::contradiction: return "contradiction";
        case errc::missing_orientation: return "missing-orientation";
        case errc::domain_mismatch: return "domain-mismatch";
        case errc::out_of_bounds: return "out-of-bounds";
        case errc::divergence: return "divergence";
        case errc::not_symmetric: return "not-symmetric";
        case errc::unknown_id: return "unknown-id";
        case errc::invalid_argument: return "invalid-argument";
        case errc::cycle: return "cycle";
        case errc::unbound_concept: return "unbound-concept";
        case errc::io_error: return "io-error";
        case errc::bad_format: return "bad-format";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace ems
