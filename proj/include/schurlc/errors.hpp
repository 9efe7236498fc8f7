#pragma once

#include <stdexcept>
#include <string>

namespace schurlc {

enum class ErrorCode {
    OutOfRange,
    LoopEdge,
    NotAPartition,
    ZeroClique,
    NotConnected,
    TooLarge,
    ConstantTermNotOne,
    NotSymmetric,
    WrongCase,
    NotInImage,
    NotALeaf,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::NotAPartition: return "NotAPartition";
        case ErrorCode::ZeroClique: return "ZeroClique";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::WrongCase: return "WrongCase";
        case ErrorCode::NotInImage: return "NotInImage";
        case ErrorCode::NotALeaf: return "NotALeaf";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace schurlc
