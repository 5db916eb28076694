#include "parfima/errors.hpp"

namespace parfima {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::domain: return "domain";
        case ErrorKind::pole: return "pole";
        case ErrorKind::dimension_mismatch: return "dimension_mismatch";
        case ErrorKind::invalid_argument: return "invalid_argument";
        case ErrorKind::insufficient_data: return "insufficient_data";
        case ErrorKind::not_causal: return "not_causal";
        case ErrorKind::not_invertible: return "not_invertible";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace parfima
