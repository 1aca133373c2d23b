#pragma once

#include "mpv/model.hpp"

namespace mpv::testing {

// n=2, m=3, tau=3: both agents approve c1, then both c2, then c1 and c3.
inline Instance e1(Variant variant, std::size_t k, std::size_t ell, std::size_t x)
{
    return Instance(variant, 2, 3, {{1, 1}, {2, 2}, {1, 3}}, k, ell, x);
}

}  // namespace mpv::testing
