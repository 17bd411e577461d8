#pragma once

#include <stdexcept>
#include <string>

namespace dedekind {

/// Input is well-formed but lies outside what an operation accepts
/// (indefinite order, characteristic 2, zero element, non-squarefree input).
class domain_rejection : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A desk-scale cap was exceeded (factorization size, enumeration size).
class resource_limit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An a-posteriori certificate failed. Signals a non-Dedekind input or a bug.
class certification_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Malformed textual input.
class parse_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace dedekind
