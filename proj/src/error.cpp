#include "fpl/types.hpp"

namespace fpl {

std::string_view to_string(Field field) {
    return field == Field::Real ? "real" : "complex";
}

Field parse_field(std::string_view text) {
    if (text == "real") return Field::Real;
    if (text == "complex") return Field::Complex;
    throw Error(ErrorCode::ParseError, "unknown field '" + std::string(text) + "' (expected real or complex)");
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotAFrame: return "NotAFrame";
        case ErrorCode::NotADual: return "NotADual";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NotAFusionFrame: return "NotAFusionFrame";
        case ErrorCode::EmptySubspace: return "EmptySubspace";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::IndexError: return "IndexError";
        case ErrorCode::SingularOperator: return "SingularOperator";
        case ErrorCode::SolverFailure: return "SolverFailure";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_input_error(ErrorCode code) {
    return code != ErrorCode::SingularOperator && code != ErrorCode::SolverFailure;
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace fpl
