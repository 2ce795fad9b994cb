#include "susp/error.hpp"

namespace susp {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::RingMismatch: return "ring_mismatch";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::UnknownVariable: return "unknown_variable";
    case ErrorCode::MissingAssignment: return "missing_assignment";
    case ErrorCode::ZeroInput: return "zero_input";
    case ErrorCode::UnitInput: return "unit_input";
    case ErrorCode::ResourceLimit: return "resource_limit";
    case ErrorCode::ZeroF: return "zero_f";
    case ErrorCode::UnitF: return "unit_f";
    case ErrorCode::TowerMismatch: return "tower_mismatch";
    case ErrorCode::NotUfd: return "not_ufd";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::ConsistencyError: return "consistency_error";
    case ErrorCode::SyntaxError: return "syntax_error";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    }
    return "unknown";
}

}  // namespace susp
