#include "csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "parfima/errors.hpp"

namespace parfima::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <class T>
T parse_number(std::string_view token, std::string_view what) {
    T value{};
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw InvalidArgument("cannot parse " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, ptr};
}

std::vector<double> parse_double_list(std::string_view text) {
    std::vector<double> out;
    for (auto token : split(text, ',')) out.push_back(parse_number<double>(token, "number"));
    return out;
}

std::vector<std::size_t> parse_count_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (auto token : split(text, ',')) out.push_back(parse_number<std::size_t>(token, "count"));
    return out;
}

PathTable read_path_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open path file " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError("path file " + file.string() + " is empty");
    const auto header = split(trim(line), ',');
    if (header.size() < 4 || header[0] != "t" || header[1] != "season" || header[2] != "x" ||
        header[3] != "epsilon") {
        throw IoError("path file " + file.string() + " lacks the t,season,x,epsilon header");
    }
    PathTable table;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() < 4) {
            std::ostringstream msg;
            msg << file.string() << ":" << row << ": expected at least 4 columns";
            throw IoError(msg.str());
        }
        table.t.push_back(parse_number<long long>(cells[0], "t"));
        table.season.push_back(parse_number<int>(cells[1], "season"));
        table.x.push_back(parse_number<double>(cells[2], "x"));
        table.epsilon.push_back(parse_number<double>(cells[3], "epsilon"));
    }
    if (table.x.empty()) throw IoError("path file " + file.string() + " has no rows");
    return table;
}

}  // namespace parfima::cli
