#include "ffhyper/error.hpp"

namespace ffhyper {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidField: return "invalid field";
        case ErrorKind::DomainError: return "domain error";
        case ErrorKind::PrecisionExhausted: return "precision exhausted";
        case ErrorKind::ResourceLimit: return "resource limit";
        case ErrorKind::UnsupportedConfig: return "unsupported configuration";
        case ErrorKind::NotPIntegral: return "not p-integral";
        case ErrorKind::ParseError: return "parse error";
    }
    return "error";
}

}  // namespace ffhyper
