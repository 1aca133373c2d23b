#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mpv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace lattice {

using Vector = std::vector<Rational>;

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt round_nearest(const Rational& r);

// Exact Lenstra-Lenstra-Lovasz reduction of linearly independent rows.
void lll_reduce(std::vector<Vector>& basis, const Rational& delta = Rational(3, 4));

struct Approximation {
    BigInt denominator;            // q >= 1
    std::vector<BigInt> numerators;  // p, with |q * alpha_i - p_i| <= epsilon
};

// Simultaneous Diophantine approximation through LLL on the lattice spanned by
// the unit vectors and (alpha, delta). Guarantees q <= 2^ceil(d(d+1)/4) * epsilon^-d.
Approximation simultaneous_approximation(std::span<const Rational> alpha, const Rational& epsilon);

}  // namespace lattice
}  // namespace mpv
