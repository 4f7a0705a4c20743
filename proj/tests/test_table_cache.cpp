#include <fstream>
#include <sstream>

#include <doctest.h>

#include "kronforge/engine.hpp"
#include "kronforge/table_cache.hpp"
#include "test_support.hpp"

using namespace kronforge;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
}

}  // namespace

TEST_CASE("serialized table format")
{
    const auto t = build_table_serial(3);
    const std::string text = serialize_table(t);
    const std::string body =
        "3;3;1\n3;2,1;1\n3;1,1,1;1\n"
        "2,1;3;-1\n2,1;2,1;0\n2,1;1,1,1;2\n"
        "1,1,1;3;1\n1,1,1;2,1;-1\n1,1,1;1,1,1;1\n";
    CHECK(text == "KRONFORGE-CT v1 n=3 order=revlex checksum=" + checksum_hex(body) + "\n" + body);
    CHECK(table_checksum(t) == checksum_hex(body));

    // FNV-1a 64 reference values.
    CHECK(checksum_hex("") == "cbf29ce484222325");
    CHECK(checksum_hex("a") == "af63dc4c8601ec8c");

    for (int n = 1; n <= 9; ++n) {
        const auto table = build_table_serial(n);
        const auto parsed = parse_table(serialize_table(table), n);
        REQUIRE(parsed.has_value());
        REQUIRE(*parsed == table);
    }
}

TEST_CASE("malformed cache text is rejected")
{
    const std::string good = serialize_table(build_table_serial(4));
    CHECK(parse_table(good, 4).has_value());
    CHECK_FALSE(parse_table(good, 5).has_value());
    CHECK_FALSE(parse_table("", 4).has_value());

    std::string flipped = good;
    flipped[flipped.size() - 2] = flipped[flipped.size() - 2] == '1' ? '2' : '1';
    CHECK_FALSE(parse_table(flipped, 4).has_value());

    std::string truncated = good.substr(0, good.size() - 8);
    CHECK_FALSE(parse_table(truncated, 4).has_value());

    std::string old_version = good;
    old_version.replace(0, std::string("KRONFORGE-CT v1").size(), "KRONFORGE-CT v0");
    CHECK_FALSE(parse_table(old_version, 4).has_value());
}

TEST_CASE("engine cache lifecycle")
{
    test::TempDir dir;
    RunConfig config;
    config.cache_dir = dir.path();
    const auto file = table_cache_path(dir.path(), 6);
    CHECK(file.filename() == "ct_n6.txt");

    std::string reference;
    {
        Engine engine(config);
        const auto t = engine.table(6);
        CHECK(engine.last_source() == TableSource::built);
        REQUIRE(std::filesystem::exists(file));
        reference = slurp(file);
        CHECK(reference == serialize_table(*t));
        CHECK(engine.table(6) == t);
        CHECK(engine.last_source() == TableSource::memory);
    }
    {
        Engine engine(config);
        engine.table(6);
        CHECK(engine.last_source() == TableSource::disk);
    }

    SUBCASE("corrupted checksum triggers a rebuild")
    {
        std::string text = reference;
        text[text.size() - 2] = text[text.size() - 2] == '1' ? '2' : '1';
        spit(file, text);
        Engine engine(config);
        const auto t = engine.table(6);
        CHECK(engine.last_source() == TableSource::rebuilt);
        CHECK(*t == build_table_serial(6));
        CHECK(slurp(file) == reference);
    }

    SUBCASE("well-formed but non-orthogonal table triggers a rebuild")
    {
        const auto good = build_table_serial(6);
        auto values = good.values();
        values[1] = -values[1] + 7;
        const CharacterTable bad(6, good.partitions(), values);
        spit(file, serialize_table(bad));
        REQUIRE(parse_table(slurp(file), 6).has_value());
        Engine engine(config);
        CHECK(*engine.table(6) == good);
        CHECK(engine.last_source() == TableSource::rebuilt);
        CHECK(slurp(file) == reference);
    }

    SUBCASE("no stray temporary files")
    {
        std::size_t entries = 0;
        for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path()))
            ++entries;
        CHECK(entries == 1);
    }
}

TEST_CASE("engine configuration")
{
    CHECK_ERROR_KIND(Engine(RunConfig{0, {}, 0, true}), ErrorKind::domain);
    CHECK_ERROR_KIND(Engine(RunConfig{22, {}, 0, true}), ErrorKind::domain);
    CHECK_ERROR_KIND(Engine(RunConfig{15, {}, -1, true}), ErrorKind::domain);

    Engine engine(RunConfig{7, {}, 2, true});
    CHECK(engine.feasible(7));
    CHECK_FALSE(engine.feasible(8));
    CHECK_ERROR_KIND(engine.table(8), ErrorKind::feasibility);
    CHECK(engine.table(7)->order() == 15);
    CHECK(engine.last_source() == TableSource::built);
}
