#include "mpv/lattice.hpp"

#include <stdexcept>

namespace mpv::lattice {

namespace {

Rational dot(const Vector& a, const Vector& b)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            sum += a[i] * b[i];
    return sum;
}

}  // namespace

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

BigInt round_nearest(const Rational& r)
{
    Rational shifted = r + Rational(1, 2);
    return floor_div(boost::multiprecision::numerator(shifted),
                     boost::multiprecision::denominator(shifted));
}

void lll_reduce(std::vector<Vector>& b, const Rational& delta)
{
    const std::size_t n = b.size();
    if (n < 2)
        return;

    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
    std::vector<Rational> norm(n);
    {
        std::vector<Vector> star(n);
        for (std::size_t i = 0; i < n; ++i) {
            star[i] = b[i];
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(b[i], star[j]) / norm[j];
                for (std::size_t c = 0; c < star[i].size(); ++c)
                    star[i][c] -= mu[i][j] * star[j][c];
            }
            norm[i] = dot(star[i], star[i]);
            if (norm[i].is_zero())
                throw std::invalid_argument("lll_reduce: basis is linearly dependent");
        }
    }

    const Rational half(1, 2);
    auto size_reduce = [&](std::size_t k, std::size_t l) {
        if (abs(mu[k][l]) <= half)
            return;
        Rational r(round_nearest(mu[k][l]));
        for (std::size_t c = 0; c < b[k].size(); ++c)
            b[k][c] -= r * b[l][c];
        for (std::size_t j = 0; j < l; ++j)
            mu[k][j] -= r * mu[l][j];
        mu[k][l] -= r;
    };

    std::size_t k = 1;
    while (k < n) {
        size_reduce(k, k - 1);
        if (norm[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
            std::swap(b[k], b[k - 1]);
            for (std::size_t j = 0; j + 1 < k; ++j)
                std::swap(mu[k][j], mu[k - 1][j]);
            Rational m = mu[k][k - 1];
            Rational merged = norm[k] + m * m * norm[k - 1];
            mu[k][k - 1] = m * norm[k - 1] / merged;
            norm[k] = norm[k - 1] * norm[k] / merged;
            norm[k - 1] = merged;
            for (std::size_t i = k + 1; i < n; ++i) {
                Rational t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            if (k > 1)
                --k;
        } else {
            for (std::size_t l = k - 1; l-- > 0;)
                size_reduce(k, l);
            ++k;
        }
    }
}

Approximation simultaneous_approximation(std::span<const Rational> alpha, const Rational& epsilon)
{
    const std::size_t d = alpha.size();
    if (epsilon <= 0 || epsilon >= 1)
        throw std::invalid_argument("simultaneous_approximation: epsilon must lie in (0, 1)");

    Approximation out;
    out.numerators.assign(d, 0);
    if (d == 0) {
        out.denominator = 1;
        return out;
    }

    // delta = epsilon^(d+1) / 2^ceil(d(d+1)/4), so the LLL bound
    // 2^(d/4) det^(1/(d+1)) on the first basis vector is at most epsilon.
    Rational scale = 1;
    for (std::size_t i = 0; i <= d; ++i)
        scale *= epsilon;
    const unsigned shift = static_cast<unsigned>((d * (d + 1) + 3) / 4);
    Rational delta = scale / Rational(BigInt(1) << shift);

    std::vector<Vector> basis(d + 1, Vector(d + 1));
    for (std::size_t i = 0; i < d; ++i)
        basis[i][i] = 1;
    for (std::size_t i = 0; i < d; ++i)
        basis[d][i] = alpha[i];
    basis[d][d] = delta;

    lll_reduce(basis);

    const Vector& shortest = basis[0];
    Rational q = shortest[d] / delta;
    if (boost::multiprecision::denominator(q) != 1 || q.is_zero())
        throw std::logic_error("simultaneous_approximation: unexpected reduced vector");
    BigInt denominator = boost::multiprecision::numerator(q);
    int sign = denominator < 0 ? -1 : 1;
    out.denominator = sign * denominator;
    for (std::size_t i = 0; i < d; ++i) {
        Rational p = Rational(denominator) * alpha[i] - shortest[i];
        if (boost::multiprecision::denominator(p) != 1)
            throw std::logic_error("simultaneous_approximation: non-integral numerator");
        out.numerators[i] = sign * boost::multiprecision::numerator(p);
    }
    return out;
}

}  // namespace mpv::lattice
