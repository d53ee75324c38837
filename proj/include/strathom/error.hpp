#pragma once

#include <stdexcept>
#include <string>

namespace strathom {

enum class ErrorKind {
    identifier,
    closure,
    poset,
    precondition,
    illegal_move,
    map,
    parameter,
    parse,
    step,
    endpoint,
    fullness,
    order,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace strathom
