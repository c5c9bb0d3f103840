// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace scriptometer::io {

using CsvRow = std::vector<std::string>;

/// Parses RFC 4180 CSV: comma separator, double-quote quoting with "" as an
/// escaped quote, LF or CRLF line ends, optional UTF-8 BOM. Blank lines are
/// skipped. Throws std::invalid_argument on an unterminated quote or stray
/// characters after a closing quote; the message carries the 1-based line.
std::vector<CsvRow> parse_csv(std::string_view text);

/// Quotes a field only when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view field);
std::string csv_line(const std::vector<std::string>& fields);

/// Shortest decimal that reads back to the same double.
std::string format_shortest(double v);
/// Fixed-point with `digits` decimals; never prints "-0".
std::string format_fixed(double v, int digits);
/// Fixed-point with `digits` decimals, then trailing zeros and dot removed.
std::string format_trimmed(double v, int digits);
/// printf %.17g.
std::string format_full(double v);

/// Reads a whole file as bytes. Throws std::runtime_error naming the path.
std::string read_file(const std::filesystem::path& path);

/// Writes to "<path>.tmp" then renames over `path`, so readers never see a
/// partially written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace scriptometer::io
