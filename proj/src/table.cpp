#include <rpcover/table.hpp>

#include <rpcover/hypergraph.hpp>

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

namespace rpcover {

std::vector<std::pair<int, int>> table_columns(int r_max)
{
    std::vector<std::pair<int, int>> cols;
    for (int r = 3; r <= r_max; ++r)
        for (int p = 3; p <= r; ++p)
            cols.emplace_back(r, p);
    return cols;
}

std::vector<TableCell> compute_table(int n_max, const SearchConfig & config, unsigned workers)
{
    std::vector<TableCell> cells;
    for (int n = 4; n <= n_max; ++n)
        for (int k = 3; k <= n; ++k)
            for (auto [r, p] : table_columns(n))
                cells.push_back({n, k, r, p, {}});

    SearchConfig cell_config = config;
    cell_config.parallel_width = 1;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            auto & c = cells[i];
            c.result = exact_cover_number(complete_hypergraph(c.n, c.k), c.r, c.p, cell_config);
        }
    };
    workers = std::max(1u, workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(worker);
    }
    return cells;
}

std::string format_cell(const ExactResult & r)
{
    if (r.exact())
        return std::to_string(r.lower);
    return "[" + std::to_string(r.lower) + "," + (r.upper ? std::to_string(*r.upper) : std::string("-")) + "]";
}

std::string format_table(const std::vector<TableCell> & cells, int n_max)
{
    const auto cols = table_columns(n_max);
    const int width = 7;
    std::ostringstream out;
    out << std::left << std::setw(8) << "n,k\\r,p";
    for (auto [r, p] : cols)
        out << std::setw(width) << (std::to_string(r) + "," + std::to_string(p));
    out << '\n';

    int row_n = -1;
    int row_k = -1;
    std::size_t col = 0;
    for (const auto & c : cells) {
        if (c.n != row_n || c.k != row_k) {
            if (row_n != -1)
                out << '\n';
            row_n = c.n;
            row_k = c.k;
            col = 0;
            out << std::setw(8) << (std::to_string(c.n) + "," + std::to_string(c.k));
        }
        while (col < cols.size() && cols[col] != std::make_pair(c.r, c.p)) {
            out << std::setw(width) << "";
            ++col;
        }
        out << std::setw(width) << format_cell(c.result);
        ++col;
    }
    if (row_n != -1)
        out << '\n';
    return out.str();
}

nlohmann::json table_to_json(const std::vector<TableCell> & cells)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto & c : cells) {
        nlohmann::json row = {{"n", c.n}, {"k", c.k}, {"r", c.r}, {"p", c.p}, {"lower", c.result.lower},
                              {"exact", c.result.exact()}, {"nodes", c.result.nodes}};
        row["upper"] = c.result.upper ? nlohmann::json(*c.result.upper) : nlohmann::json(nullptr);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace rpcover
