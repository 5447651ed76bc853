#ifndef REESLAB_ERRORS_HPP
#define REESLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reeslab {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad polynomial text, bad JSON document, unknown variable.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// An operation was called outside its contract (wrong shape, wrong ring, ...).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// A verified internal identity failed; indicates a bug, not bad input.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace reeslab

#endif
