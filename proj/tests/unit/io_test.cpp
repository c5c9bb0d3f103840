// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/io.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace scriptometer::io;

TEST(Csv, QuotedFieldsAndCrlf) {
  auto rows = parse_csv("\xEF\xBB\xBFid,note\r\na,\"x, \"\"y\"\"\"\r\n\r\nb,\n");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (CsvRow{"id", "note"}));
  EXPECT_EQ(rows[1], (CsvRow{"a", "x, \"y\""}));
  EXPECT_EQ(rows[2], (CsvRow{"b", ""}));
}

TEST(Csv, ErrorsCarryLineNumber) {
  try {
    parse_csv("a,b\n\"open\n");
    FAIL() << "expected a parse error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_csv("\"a\"b\n"), std::invalid_argument);
}

TEST(Csv, FieldQuotingRoundTrips) {
  CsvRow fields{"plain", "with,comma", "with\"quote", "multi\nline", ""};
  auto rows = parse_csv(csv_line(fields));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], fields);
  EXPECT_EQ(csv_field("plain"), "plain");
}

TEST(Format, Numbers) {
  EXPECT_EQ(format_fixed(1.23456, 4), "1.2346");
  EXPECT_EQ(format_fixed(-0.00001, 4), "0.0000");
  EXPECT_EQ(format_trimmed(0.00004, 4), "0");
  EXPECT_EQ(format_trimmed(0.0010, 4), "0.001");
  EXPECT_EQ(format_shortest(0.1), "0.1");
  EXPECT_EQ(std::stod(format_full(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Files, AtomicWriteThenRead) {
  oracle::TempDir dir("io");
  write_file_atomic(dir.path() / "f.txt", "hello");
  EXPECT_EQ(read_file(dir.path() / "f.txt"), "hello");
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "f.txt.tmp"));
  EXPECT_THROW(read_file(dir.path() / "missing.txt"), std::runtime_error);
}
