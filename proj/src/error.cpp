#include "bsf/error.hpp"

namespace bsf {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::NoRootInBracket: return "NoRootInBracket";
        case ErrorKind::InvalidHypergeomParams: return "InvalidHypergeomParams";
        case ErrorKind::PochhammerZero: return "PochhammerZero";
        case ErrorKind::CenterMismatch: return "CenterMismatch";
        case ErrorKind::OrderExhausted: return "OrderExhausted";
        case ErrorKind::NonConvergent: return "NonConvergent";
        case ErrorKind::BracketExhausted: return "BracketExhausted";
        case ErrorKind::NonDecayingTail: return "NonDecayingTail";
        case ErrorKind::ComplexAngularRoot: return "ComplexAngularRoot";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::UnknownModel: return "UnknownModel";
    }
    return "Unknown";
}

}  // namespace bsf
