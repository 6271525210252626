#include <rpcover/partitions.hpp>

#include <rpcover/errors.hpp>

#include <algorithm>
#include <limits>

namespace rpcover {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > kSaturated / a)
        return kSaturated;
    return a * b;
}

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int> & cur,
                    const std::function<void(const std::vector<int> &)> & f)
{
    if (remaining == 0) {
        f(cur);
        return;
    }
    if (parts_left == 0)
        return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // the rest must fit into parts_left - 1 parts of size <= part
        if (static_cast<long long>(part) * parts_left < remaining)
            break;
        cur.push_back(part);
        partitions_rec(remaining - part, part, parts_left - 1, cur, f);
        cur.pop_back();
    }
}

void rgs_rec(std::size_t pos, Color used, int r, std::vector<Color> & a,
             const std::function<void(const std::vector<Color> &)> & f)
{
    if (pos == a.size()) {
        f(a);
        return;
    }
    const Color limit = std::min<Color>(used, static_cast<Color>(r - 1));
    for (Color c = 0; c <= limit; ++c) {
        a[pos] = c;
        rgs_rec(pos + 1, c == used ? used + 1 : used, r, a, f);
    }
}

} // namespace

std::uint64_t count_partitions_at_most(int n, int r)
{
    if (n < 0 || r < 0)
        return 0;
    // table[j][m]: partitions of m into parts of size <= j, which by
    // conjugation equals partitions into at most j parts
    std::vector<std::uint64_t> table(static_cast<std::size_t>(n) + 1, 0);
    table[0] = 1;
    for (int part = 1; part <= r; ++part)
        for (int m = part; m <= n; ++m)
            table[m] = sat_add(table[m], table[m - part]);
    return table[n];
}

void for_each_partition_at_most(int n, int r, const std::function<void(const std::vector<int> &)> & f)
{
    if (n < 0 || r < 1)
        return;
    std::vector<int> cur;
    partitions_rec(n, n, r, cur, f);
}

std::vector<Color> contiguous_coloring(const std::vector<int> & sizes, int n)
{
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < sizes.size(); ++c)
        colors.insert(colors.end(), static_cast<std::size_t>(sizes[c]), static_cast<Color>(c));
    if (static_cast<int>(colors.size()) != n)
        throw InvalidArgument("class sizes do not sum to n");
    return colors;
}

std::uint64_t count_set_partitions_at_most(int n, int r)
{
    if (n == 0)
        return 1;
    // S(m, j) row by row
    std::vector<std::uint64_t> row(static_cast<std::size_t>(r) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, r); j >= 1; --j)
            row[j] = sat_add(sat_mul(static_cast<std::uint64_t>(j), row[j]), row[j - 1]);
        row[0] = 0;
    }
    std::uint64_t total = 0;
    for (int j = 1; j <= r; ++j)
        total = sat_add(total, row[j]);
    return total;
}

void for_each_restricted_growth(int n, int r, const std::function<void(const std::vector<Color> &)> & f)
{
    if (n < 1 || r < 1)
        return;
    std::vector<Color> a(static_cast<std::size_t>(n), 0);
    rgs_rec(1, 1, r, a, f);
}

} // namespace rpcover
