#pragma once

#include <stdexcept>
#include <string>

namespace nfdeg {

// Root of the library's error hierarchy. Every failure the library itself
// detects derives from this type, so callers can separate library errors
// from everything else with one handler.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Genus parameter outside the supported range (g >= 1).
class invalid_genus_error : public error {
public:
    using error::error;
};

// Vector or matrix sizes incompatible with the requested operation.
class dimension_error : public error {
public:
    using error::error;
};

// A vanishing cycle that is identically zero.
class invalid_cycle_error : public error {
public:
    using error::error;
};

// A monodromy matrix failed the symplectic test; carries the 1-based
// position of the offending matrix.
class symplectic_violation_error : public error {
public:
    symplectic_violation_error(std::string msg, int index)
        : error(std::move(msg)), index(index) {}
    int index;
};

// The ordered product of the monodromies is not the identity. The message
// embeds the offending product so the failure is diagnosable from the text.
class relation_violation_error : public error {
public:
    using error::error;
};

// Candidate cocycle values whose twisted partial sums do not close up.
class closure_error : public error {
public:
    using error::error;
};

// An operation that requires parabolic input (valid potentials at every
// puncture) received a cocycle without them.
class parabolicity_error : public error {
public:
    using error::error;
};

// The section cannot be extended at the requested puncture: the potential
// is missing or does not satisfy its defining equation there.
class not_extendable_error : public error {
public:
    using error::error;
};

// Puncture or word index outside 1..m.
class index_error : public error {
public:
    using error::error;
};

// Input outside the operation's domain (point outside the polygon,
// mismatched pencils, incompatible section modes, bad parameters).
class domain_error : public error {
public:
    using error::error;
};

// Malformed instance or report document.
class parse_error : public error {
public:
    using error::error;
};

// Filesystem failure (unreadable input, unwritable output).
class io_error : public error {
public:
    using error::error;
};

} // namespace nfdeg
