#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace quiverlie {

// Exact rational scalar. Everything in this library computes over Q;
// there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// gmpxx has no long long overloads; on this platform long is 64-bit.
inline Rat rat_ll(long long v) { return Rat(static_cast<long>(v)); }

// Accepts "p", "-p", "p/q".
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace quiverlie
