#include <rpcover/binomial.hpp>

#include <rpcover/errors.hpp>

#include <limits>

namespace rpcover {

std::optional<std::uint64_t> binomial_checked(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // acc * (n - k + i) is divisible by i at every step
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::nullopt;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t binomial(std::int64_t a, std::int64_t b)
{
    if (b < 0 || a < b)
        return 0;
    auto c = binomial_checked(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    if (!c)
        throw InvalidArgument("binomial coefficient overflows 64 bits");
    return *c;
}

} // namespace rpcover
