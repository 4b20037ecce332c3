#pragma once

#include <gmpxx.h>
#include <string>

namespace reducta {

// Arbitrary precision rationals, GMP-backed. mpq_class keeps itself canonical
// under arithmetic; fromstring construction needs an explicit canonicalize.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace reducta
