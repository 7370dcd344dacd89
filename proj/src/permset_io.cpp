#include "permdes/permset_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace permdes {

namespace {

std::vector<long long> parse_ints(std::string_view line, int line_no)
{
    std::vector<long long> values;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        if (pos == line.size()) {
            break;
        }
        long long v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
        if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
            throw Error("line " + std::to_string(line_no) + ": expected integers");
        }
        values.push_back(v);
        pos = static_cast<std::size_t>(ptr - line.data());
    }
    return values;
}

}  // namespace

PermSet parse_permset(std::string_view text)
{
    int n = -1;
    long long expected = -1;
    std::vector<Permutation> rows;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        auto values = parse_ints(line, line_no);
        if (n < 0) {
            if (values.size() != 2 || values[0] < 1 || values[0] > kMaxDegree || values[1] < 1) {
                throw Error("line " + std::to_string(line_no) + ": malformed header, expected \"n m\"");
            }
            n = static_cast<int>(values[0]);
            expected = values[1];
            rows.reserve(static_cast<std::size_t>(std::min<long long>(expected, 1 << 20)));
        } else {
            if (static_cast<int>(values.size()) != n) {
                throw Error("line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " entries");
            }
            std::vector<int> images(values.begin(), values.end());
            try {
                rows.push_back(Permutation::from_one_based(images));
            } catch (const Error&) {
                throw Error("line " + std::to_string(line_no) + ": row is not a bijection of 1.." + std::to_string(n));
            }
        }
        if (end == text.size()) {
            break;
        }
    }
    if (n < 0) {
        throw Error("missing header \"n m\"");
    }
    if (static_cast<long long>(rows.size()) != expected) {
        throw Error("count mismatch: header declares " + std::to_string(expected) + " rows, found " +
                    std::to_string(rows.size()));
    }
    return PermSet(n, std::move(rows));
}

PermSet read_permset(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string() + ": file not found or unreadable");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_permset(buffer.str());
}

void write_permset(std::ostream& out, const PermSet& set)
{
    out << set.degree() << ' ' << set.size() << '\n';
    for (const auto& p : set) {
        out << p.to_string() << '\n';
    }
}

std::string format_permset(const PermSet& set)
{
    std::ostringstream out;
    write_permset(out, set);
    return out.str();
}

}  // namespace permdes
