#pragma once

#include "bowforge/affine_weights.hpp"

#include <doctest.h>

#include <ostream>

namespace bowforge {

inline AffineWeight W(int n, int level, std::vector<Int> profile, Int delta = 0)
{
    return AffineWeight(n, level, std::move(profile), Rational(delta));
}

inline AffineWeight L(int n, int i) { return fundamental_weight(n, i); }
inline AffineWeight A(int n, int i) { return simple_root(n, i); }
inline AffineWeight D(int n) { return null_root(n); }

inline std::ostream& operator<<(std::ostream& os, const AffineWeight& w)
{
    os << "{n=" << w.n << " l=" << w.level << " [";
    for (std::size_t k = 0; k < w.profile.size(); ++k)
        os << (k ? "," : "") << w.profile[k];
    return os << "] d=" << to_string(w.delta) << "}";
}

} // namespace bowforge
