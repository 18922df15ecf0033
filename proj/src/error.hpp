#ifndef GNOMON_ERROR_HPP
#define GNOMON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gnomon {

enum class ErrorCode {
    odd_input,
    out_of_range,
    invalid_parameters,
    parse,
    index_out_of_range,
    scale_overflow,
    overflow,
    io,
};

// Single exception type for the whole core; the C API maps `code`
// onto its status enum.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace gnomon

#endif
