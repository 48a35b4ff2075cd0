#ifndef QWALK_ERRORS_HPP
#define QWALK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

/// Base for every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 input. `offset` is the 0-based byte position of the fault.
class parse_error : public error {
public:
    parse_error(std::size_t offset, const std::string& reason, const std::string& context = {})
        : error((context.empty() ? std::string() : context + ": ") + "graph6 byte " +
                std::to_string(offset) + ": " + reason),
          offset_(offset), reason_(reason) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t offset_;
    std::string reason_;
};

/// Invalid generator or command parameters.
class parameter_error : public error {
public:
    using error::error;
};

/// Graph is not regular, or its valency is outside the supported range.
class valency_error : public error {
public:
    using error::error;
};

/// A structural hypothesis (connectivity, k > 2, ...) does not hold.
class hypothesis_error : public error {
public:
    using error::error;
};

class dimension_error : public error {
public:
    using error::error;
};

/// Exact polynomial division left a nonzero remainder.
class divisibility_error : public error {
public:
    using error::error;
};

/// Caller violated a documented precondition (e.g. non-symmetric input).
class contract_error : public error {
public:
    using error::error;
};

} // namespace qwalk

#endif // QWALK_ERRORS_HPP
