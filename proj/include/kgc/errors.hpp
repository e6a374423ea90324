#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgc {

// Shape mismatch: wrong matrix dimensions, wrong ambient rank, index out of
// range.  Thrown eagerly, before any partial computation.
class dimension_error : public std::runtime_error {
public:
    explicit dimension_error(const std::string& what) : std::runtime_error(what) {}
};

// Semantic rejection of well-shaped input: a matrix that is not symplectic,
// a twist specification violating its pairing table, a parameter outside its
// documented range, malformed file contents.
class invalid_input_error : public std::runtime_error {
public:
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// A bounded search ran out of space: coset enumeration saturated before
// producing the requested count, or no distinguishing index exists.  Carries
// how much was found so callers can report partial progress.
class exhaustion_error : public std::runtime_error {
public:
    exhaustion_error(const std::string& what, std::size_t found)
        : std::runtime_error(what), found_(found) {}

    std::size_t found() const noexcept { return found_; }

private:
    std::size_t found_;
};

// File could not be read or written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kgc
