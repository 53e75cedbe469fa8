#pragma once

#include <stdexcept>
#include <string>

namespace bimatch {

// Bad user input (malformed file, degenerate point set, ...). CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A property the theory guarantees failed to hold at runtime. CLI exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

#define BIMATCH_CHECK(cond, msg)                                   \
    do {                                                           \
        if (!(cond)) throw ::bimatch::InternalError(msg);          \
    } while (0)

}  // namespace bimatch
