#pragma once

#include <stdexcept>
#include <string>

namespace ore {

enum class errc {
    mixed_fields,
    division_by_zero,
    zero_input,
    index_out_of_range,
    zero_q,
    ring_mismatch,
    context_mismatch,
    truncation_mismatch,
    cap_exceeded,
    nonconvergent_constant_term,
    nonconvergent_series,
    guard_exceeds_truncation,
    bad_bound_inputs,
    singular_system,
    inconsistent_overdetermined,
    syntax_error,
    validation_error,
    unknown_generator,
    invalid_ring_spec,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::mixed_fields: return "MixedFields";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::zero_input: return "ZeroInput";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::zero_q: return "ZeroQ";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::context_mismatch: return "ContextMismatch";
        case errc::truncation_mismatch: return "TruncationMismatch";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::nonconvergent_constant_term: return "NonconvergentConstantTerm";
        case errc::nonconvergent_series: return "NonconvergentSeries";
        case errc::guard_exceeds_truncation: return "GuardExceedsTruncation";
        case errc::bad_bound_inputs: return "BadBoundInputs";
        case errc::singular_system: return "SingularSystem";
        case errc::inconsistent_overdetermined: return "InconsistentOverdetermined";
        case errc::syntax_error: return "SyntaxError";
        case errc::validation_error: return "ValidationError";
        case errc::unknown_generator: return "UnknownGenerator";
        case errc::invalid_ring_spec: return "InvalidRingSpec";
    }
    return "UnknownError";
}

class OreError : public std::runtime_error {
public:
    OreError(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw OreError(code, msg); }

}  // namespace ore
