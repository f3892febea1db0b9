#pragma once

#include <stdexcept>
#include <string>

namespace bullcol {

// Malformed caller input: bad vertex ids, partial colourings, unparsable files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// A documented precondition of an operation was not met by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The engine reached a state its structural reasoning says is impossible.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A resource cap (vertex cap, rejection budget) was exceeded.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bullcol
