#include "mpv/model.hpp"
#include "mpv/reductions.hpp"

namespace mpv {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    // Odd numbers only: index i stands for 2i + 1.
    std::vector<bool> composite(limit / 2 + 1, false);
    primes.push_back(2);
    for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
        if (composite[i])
            continue;
        const std::uint64_t p = 2 * i + 1;
        primes.push_back(p);
        for (std::uint64_t multiple = p * p; multiple <= limit; multiple += 2 * p)
            composite[multiple / 2] = true;
    }
    return primes;
}

SidonSet sidon(std::uint64_t b)
{
    if (b < 1)
        throw DomainError("sidon set size must be at least 1");
    SidonSet out;
    out.b = b;
    // Bertrand: a prime lies strictly between b and 2b for b >= 2; b = 1 gives 2.
    for (auto p : primes_up_to(2 * b))
        if (p > b) {
            out.hat_b = p;
            break;
        }
    out.elements.reserve(b);
    const std::uint64_t hat = out.hat_b;
    for (std::uint64_t i = 1; i <= b; ++i)
        out.elements.push_back(2 * hat * i + (i * i) % hat);
    return out;
}

}  // namespace mpv
