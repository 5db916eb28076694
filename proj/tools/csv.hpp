#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace parfima::cli {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Parses a comma-separated list of decimal literals. Throws InvalidArgument.
std::vector<double> parse_double_list(std::string_view text);
std::vector<std::size_t> parse_count_list(std::string_view text);

/// Rows of a file written by `simulate`: t, season, x, epsilon[, epsilon_hat].
struct PathTable {
    std::vector<long long> t;
    std::vector<int> season;
    std::vector<double> x;
    std::vector<double> epsilon;
};

PathTable read_path_csv(const std::filesystem::path& file);

}  // namespace parfima::cli
