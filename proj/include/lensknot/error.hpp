#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lensknot {

enum class ErrorCode {
    ParseError,         // malformed relator text
    BadLensParams,      // gcd(p,q) != 1 or q out of range
    PZero,              // p = 0 ambient (S^2 x S^1), out of scope
    AlphaSumMismatch,   // exponent sum of alpha in the relator is not p
    NotCoprime,         // gcd(n,p) != 1, strongly-cyclic covering not unique
    NotDivisible,       // exact polynomial division left a remainder
    ContractViolation,  // caller broke a documented precondition
    InvariantViolation, // a theorem identity failed on valid input
    DomainError,        // argument outside the operation's domain
};

inline const char *error_code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::BadLensParams: return "BAD_LENS_PARAMS";
    case ErrorCode::PZero: return "P_ZERO";
    case ErrorCode::AlphaSumMismatch: return "ALPHA_SUM_MISMATCH";
    case ErrorCode::NotCoprime: return "NOT_COPRIME";
    case ErrorCode::NotDivisible: return "NOT_DIVISIBLE";
    case ErrorCode::ContractViolation: return "CONTRACT_VIOLATION";
    case ErrorCode::InvariantViolation: return "INVARIANT_VIOLATION";
    case ErrorCode::DomainError: return "DOMAIN_ERROR";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code)
    {
    }

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string &message)
        : Error(ErrorCode::ParseError,
                message + " at byte offset " + std::to_string(offset)),
          offset_(offset)
    {
    }

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace lensknot
