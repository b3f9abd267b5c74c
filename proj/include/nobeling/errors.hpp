#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nobeling {

// Violated precondition: out-of-range indices, mismatched ambients, bad
// arguments. The CLI maps these to exit code 2 together with ParseError.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input file or command line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded (exit code 3).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical invariant failed to hold (exit code 4). Never caught and
// patched inside the library.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Size limits shared by the basis algorithms, the oracle and the profinite
// constructions.
struct Caps {
    std::size_t max_n = 20;
    std::size_t max_points = 5000;
    std::size_t max_oracle_n = 10;
    std::size_t max_clopen_elements = 12;
};

}  // namespace nobeling
