#ifndef SPANPOLY_ERROR_HPP
#define SPANPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spanpoly {

enum class ErrorKind {
    Argument,  // bad parameters, shape mismatches, infeasible requests
    Parse,     // malformed input text
    Resource,  // exceeds an enforced cap (edge count, polarization size)
    Numeric,   // root finder non-convergence, route disagreement
    Internal,  // broken invariant inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    const char* kind_name() const noexcept {
        switch (kind_) {
            case ErrorKind::Argument: return "argument";
            case ErrorKind::Parse: return "parse";
            case ErrorKind::Resource: return "resource";
            case ErrorKind::Numeric: return "numeric";
            case ErrorKind::Internal: return "internal";
        }
        return "unknown";
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_argument(const std::string& msg) {
    throw Error(ErrorKind::Argument, msg);
}
[[noreturn]] inline void throw_parse(const std::string& msg) {
    throw Error(ErrorKind::Parse, msg);
}
[[noreturn]] inline void throw_resource(const std::string& msg) {
    throw Error(ErrorKind::Resource, msg);
}
[[noreturn]] inline void throw_numeric(const std::string& msg) {
    throw Error(ErrorKind::Numeric, msg);
}
[[noreturn]] inline void throw_internal(const std::string& msg) {
    throw Error(ErrorKind::Internal, msg);
}

}  // namespace spanpoly

#endif
