#pragma once

#include <cstdint>
#include <optional>

namespace rpcover {

/// C(n, k), or nullopt when the result does not fit in 64 bits.
std::optional<std::uint64_t> binomial_checked(std::uint64_t n, std::uint64_t k);

/// C(a, b) with C(a, b) = 0 whenever b < 0 or a < b. Throws on overflow.
std::uint64_t binomial(std::int64_t a, std::int64_t b);

} // namespace rpcover
