#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "kronforge/characters.hpp"

namespace kronforge {

/// On-disk character table format, version 1:
///
///   KRONFORGE-CT v1 n=<n> order=revlex checksum=<16 hex digits>
///   <shape>;<class>;<value>
///   ...
///
/// one line per (shape, class) pair, grouped by shape, both in canonical
/// order. The checksum is 64-bit FNV-1a over every byte after the header
/// line.
inline constexpr std::string_view kTableFormatTag = "KRONFORGE-CT v1";

std::string checksum_hex(std::string_view body);

std::string serialize_table(const CharacterTable& table);
/// The checksum that serialize_table writes into the header.
std::string table_checksum(const CharacterTable& table);

/// nullopt when the header, checksum, or any line disagrees with the format
/// for `n`. Orthogonality is not checked here.
std::optional<CharacterTable> parse_table(std::string_view text, int n);

std::filesystem::path table_cache_path(const std::filesystem::path& dir, int n);

/// Writes to a unique temporary file in the same directory, then renames
/// over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Reads and parses a cached table; nullopt when missing or malformed.
std::optional<CharacterTable> read_cached_table(const std::filesystem::path& dir, int n);

}  // namespace kronforge
