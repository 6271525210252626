#pragma once

#include <rpcover/exact.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace rpcover {

struct TableCell {
    int n;
    int k;
    int r;
    int p;
    ExactResult result;
};

/// Column order used by the cover-number table: (r, p) with 3 <= p <= r <= r_max.
std::vector<std::pair<int, int>> table_columns(int r_max);

/// Cover numbers of K_n^k for 4 <= n <= n_max, 3 <= k <= n and every column
/// (r, p) with r <= n. Cells are solved on `workers` threads; each cell's
/// result does not depend on the thread count.
std::vector<TableCell> compute_table(int n_max, const SearchConfig & config, unsigned workers = 1);

/// "v" for an exact value, "[lo,hi]" for an interval.
std::string format_cell(const ExactResult & r);

/// Grid with one row per (n,k) and one column per (r,p).
std::string format_table(const std::vector<TableCell> & cells, int n_max);

nlohmann::json table_to_json(const std::vector<TableCell> & cells);

} // namespace rpcover
