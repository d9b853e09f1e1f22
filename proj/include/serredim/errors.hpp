#pragma once

#include <stdexcept>
#include <string>

namespace serredim {

// Input violates an operation's contract. Exit code 1 at the CLI.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget was exceeded. Exit code 2 at the CLI.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Lexical or syntax error in a session file; positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error(what), line(line), col(col) {}
    int line;
    int col;
};

// Broken internal invariant; always a bug, never an input problem.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

}  // namespace serredim
