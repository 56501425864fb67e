#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "nfdeg/errors.hpp"

namespace nfdeg {

// Exact scalars. All lattice and cohomology arithmetic runs over these;
// doubles appear only in the quadrature cross-check.
using Int = mpz_class;
using Rat = mpq_class;

// Coefficient ring selector for the ring-parametric operations (cocycles,
// potential solvers). Values are stored as rationals either way; the
// integer ring additionally demands denominator 1 everywhere and switches
// the solvers to lattice (divisibility-aware) mode.
enum class Ring { integers, rationals };

inline const char* ring_name(Ring r) {
    return r == Ring::integers ? "int" : "rat";
}

inline std::string to_string(const Int& x) { return x.get_str(); }

// Rationals serialize as "p" when the denominator is 1 and "p/q" otherwise,
// so integer data stays readable and round-trips are bit-exact.
inline std::string to_string(const Rat& x) {
    std::string s = x.get_num().get_str();
    if (x.get_den() != 1) {
        s += '/';
        s += x.get_den().get_str();
    }
    return s;
}

inline bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline Int int_from_string(const std::string& s) {
    if (!is_integer_literal(s))
        throw parse_error("not an integer literal: \"" + s + "\"");
    return Int(s);
}

inline Rat rat_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        Rat r(int_from_string(s));
        return r;
    }
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    if (den == 0)
        throw parse_error("zero denominator in \"" + s + "\"");
    Rat r;
    r = Rat(num) / Rat(den); // division canonicalizes
    return r;
}

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

inline Int numerator(const Rat& x) { return x.get_num(); }

// Truncating conversion; exact for values representable in a double.
inline double to_double(const Rat& x) { return x.get_d(); }

// Componentwise floor, used to normalize torus representatives into [0,1).
inline Int floor_of(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

// FNV-1a, 64-bit: the document hash used in reports. Chosen for being
// well-known, trivially portable, and dependency-free; these hashes are
// identifiers, not security boundaries.
inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex16(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

} // namespace nfdeg
