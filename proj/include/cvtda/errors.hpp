#pragma once

#include <stdexcept>
#include <string>

namespace cvtda {

// Malformed input or violated precondition (bad file, bad argument, bad state).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem-level failure (missing file, unreadable, unwritable).
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computation routes that must agree did not.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cvtda
