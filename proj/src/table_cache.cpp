#include "kronforge/table_cache.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include <unistd.h>

#include "kronforge/error.hpp"

namespace kronforge {

std::string checksum_hex(std::string_view body)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : body)
        h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::string header_line(int n, const std::string& checksum)
{
    return std::string(kTableFormatTag) + " n=" + std::to_string(n) + " order=revlex checksum=" + checksum;
}

std::string serialize_body(const CharacterTable& table)
{
    std::string body;
    for (std::size_t r = 0; r < table.order(); ++r) {
        const std::string shape = table.partitions()[r].str();
        for (std::size_t c = 0; c < table.order(); ++c) {
            body += shape;
            body += ';';
            body += table.partitions()[c].str();
            body += ';';
            body += std::to_string(table.value(r, c));
            body += '\n';
        }
    }
    return body;
}

}  // namespace

std::string table_checksum(const CharacterTable& table) { return checksum_hex(serialize_body(table)); }

std::string serialize_table(const CharacterTable& table)
{
    const std::string body = serialize_body(table);
    return header_line(table.n(), checksum_hex(body)) + "\n" + body;
}

std::optional<CharacterTable> parse_table(std::string_view text, int n)
{
    const std::size_t eol = text.find('\n');
    if (eol == std::string_view::npos)
        return std::nullopt;
    const std::string_view header = text.substr(0, eol);
    const std::string_view body = text.substr(eol + 1);
    if (header != header_line(n, checksum_hex(body)))
        return std::nullopt;

    std::vector<Partition> parts;
    try {
        parts = partitions_of(n, kHardNMax);
    } catch (const Error&) {
        return std::nullopt;
    }
    const std::size_t p = parts.size();
    std::vector<std::string> names(p);
    for (std::size_t i = 0; i < p; ++i)
        names[i] = parts[i].str();

    std::vector<std::int64_t> values;
    values.reserve(p * p);
    std::size_t pos = 0;
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = 0; c < p; ++c) {
            const std::size_t end = body.find('\n', pos);
            if (end == std::string_view::npos)
                return std::nullopt;
            const std::string_view line = body.substr(pos, end - pos);
            pos = end + 1;
            const std::size_t s1 = line.find(';');
            const std::size_t s2 = s1 == std::string_view::npos ? s1 : line.find(';', s1 + 1);
            if (s2 == std::string_view::npos || line.substr(0, s1) != names[r] || line.substr(s1 + 1, s2 - s1 - 1) != names[c])
                return std::nullopt;
            const std::string_view num = line.substr(s2 + 1);
            std::int64_t v = 0;
            const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
            if (num.empty() || ec != std::errc() || ptr != num.data() + num.size())
                return std::nullopt;
            values.push_back(v);
        }
    }
    if (pos != body.size())
        return std::nullopt;
    return CharacterTable(n, std::move(parts), std::move(values));
}

std::filesystem::path table_cache_path(const std::filesystem::path& dir, int n)
{
    return dir / ("ct_n" + std::to_string(n) + ".txt");
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    std::random_device rd;
    const fs::path tmp = path.parent_path() /
        (path.filename().string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            fail(ErrorKind::internal, "cannot write cache file " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out.flush())
            fail(ErrorKind::internal, "cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        fail(ErrorKind::internal, "cannot move cache file into place at " + path.string());
    }
}

std::optional<CharacterTable> read_cached_table(const std::filesystem::path& dir, int n)
{
    std::ifstream in(table_cache_path(dir, n), std::ios::binary);
    if (!in)
        return std::nullopt;
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_table(text, n);
}

}  // namespace kronforge
