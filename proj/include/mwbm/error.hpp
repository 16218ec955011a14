#ifndef MWBM_ERROR_HPP
#define MWBM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mwbm {

enum class Errc {
    InvalidArgument,
    DuplicateEdge,
    ZeroOrNegativeWeight,
    IndexOutOfRange,
    EmptyGraph,
    Overflow,
    ParseError,
    IoError,
    HOutOfRange,
    NotMaximumMatching,
    InfeasibleCover,
    ExtractionStuck,
    TooLarge,
    Internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Parse failures carry the 1-based input line they were detected on.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace mwbm

#endif  // MWBM_ERROR_HPP
