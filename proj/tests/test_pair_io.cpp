#include "geosim/pair_io.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>

#include "test_helpers.h"

namespace {

using geosim::PairRecord;
using geosim::ParseError;
using geosim::parsePairs;
using geosim::serializePairs;

std::vector<PairRecord> parseText(const std::string& text) {
  std::istringstream in(text);
  return parsePairs(in);
}

// Message and reported line number of the ParseError raised by the text.
std::pair<std::string, int> failureOf(const std::string& text) {
  try {
    parseText(text);
  } catch (const ParseError& error) {
    return {error.what(), error.line()};
  }
  ADD_FAILURE() << "expected a parse error for: " << text;
  return {"", 0};
}

TEST(ParsePairs, ReadsSingleRecord) {
  const auto records =
      parseText(R"({"id":"a","candidate":[[0,0],[1,0]],"reference":[[0,0]]})" "\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].id, "a");
  ASSERT_EQ(records[0].candidate.cols(), 2);
  ASSERT_EQ(records[0].reference.cols(), 1);
  EXPECT_EQ(records[0].candidate(0, 1), 1.0);
  EXPECT_EQ(records[0].candidate(1, 1), 0.0);
  EXPECT_EQ(records[0].reference(0, 0), 0.0);
}

TEST(ParsePairs, BlankInputYieldsEmptyList) {
  EXPECT_TRUE(parseText("").empty());
  EXPECT_TRUE(parseText("\n \t \n\n").empty());
}

TEST(ParsePairs, SkipsBlankLinesBetweenRecords) {
  const auto records = parseText(
      R"({"id":"a","candidate":[[0,0]],"reference":[[0,0]]})" "\n\n"
      R"({"id":"b","candidate":[[1,1]],"reference":[[1,1]]})" "\n");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].id, "a");
  EXPECT_EQ(records[1].id, "b");
}

TEST(ParsePairs, EmptyTrajectoryNamesTheLine) {
  const auto [message, line] =
      failureOf(R"({"id":"x","candidate":[],"reference":[[0,0]]})" "\n");
  EXPECT_NE(message.find("empty trajectory at line 1"), std::string::npos);
  EXPECT_EQ(line, 1);
}

TEST(ParsePairs, DuplicateIdRejected) {
  const auto [message, line] = failureOf(
      R"({"id":"a","candidate":[[0,0]],"reference":[[0,0]]})" "\n"
      R"({"id":"a","candidate":[[1,1]],"reference":[[1,1]]})" "\n");
  EXPECT_NE(message.find("duplicate id \"a\""), std::string::npos);
  EXPECT_EQ(line, 2);
}

TEST(ParsePairs, MalformedJsonNamesTheLine) {
  const auto [message, line] = failureOf(
      R"({"id":"a","candidate":[[0,0]],"reference":[[0,0]]})" "\n"
      "{nope\n");
  EXPECT_NE(message.find("line 2"), std::string::npos);
  EXPECT_EQ(line, 2);
}

TEST(ParsePairs, FieldErrorsNameFieldAndLine) {
  {
    const auto [message, line] =
        failureOf(R"({"candidate":[[0,0]],"reference":[[0,0]]})" "\n");
    EXPECT_NE(message.find("missing field \"id\""), std::string::npos);
    EXPECT_EQ(line, 1);
  }
  {
    const auto [message, line] =
        failureOf(R"({"id":7,"candidate":[[0,0]],"reference":[[0,0]]})" "\n");
    EXPECT_NE(message.find("field \"id\""), std::string::npos);
  }
  {
    const auto [message, line] =
        failureOf(R"({"id":"a","candidate":"no","reference":[[0,0]]})" "\n");
    EXPECT_NE(message.find("field \"candidate\""), std::string::npos);
  }
  {
    const auto [message, line] =
        failureOf(R"({"id":"a","candidate":[[0,0]],"reference":[[0,0,9]]})" "\n");
    EXPECT_NE(message.find("field \"reference\"[0]"), std::string::npos);
  }
  {
    const auto [message, line] =
        failureOf(R"({"id":"a","candidate":[[0,0]],"reference":[[0,"y"]]})" "\n");
    EXPECT_NE(message.find("must be an [x,y] number pair"), std::string::npos);
  }
  {
    const auto [message, line] = failureOf("[1,2,3]\n");
    EXPECT_NE(message.find("expected a JSON object"), std::string::npos);
  }
}

TEST(ParsePairs, SerializeParseRoundTripsExactly) {
  std::mt19937 rng(97);
  std::vector<PairRecord> records;
  for (int i = 0; i < 12; ++i) {
    PairRecord record;
    record.id = "pair-" + std::to_string(i);
    record.candidate = i % 2 == 0
                           ? testhelpers::randomGridTrajectory(rng, 3 + i % 5, 6)
                           : testhelpers::randomRealTrajectory(rng, 3 + i % 5, 10.0);
    record.reference = testhelpers::randomRealTrajectory(rng, 2 + i % 6, 10.0);
    records.push_back(std::move(record));
  }

  std::ostringstream first;
  serializePairs(first, records);
  const auto reparsed = parseText(first.str());

  ASSERT_EQ(reparsed.size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(reparsed[i].id, records[i].id);
    EXPECT_EQ(reparsed[i].candidate, records[i].candidate);
    EXPECT_EQ(reparsed[i].reference, records[i].reference);
  }

  std::ostringstream second;
  serializePairs(second, reparsed);
  EXPECT_EQ(second.str(), first.str());
}

TEST(ParsePairs, PreservesInputOrder) {
  std::string text;
  for (int i = 0; i < 20; ++i) {
    text += R"({"id":"r)" + std::to_string(i) +
            R"(","candidate":[[0,0]],"reference":[[0,0]]})" "\n";
  }
  const auto records = parseText(text);
  ASSERT_EQ(records.size(), 20u);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(records[static_cast<std::size_t>(i)].id, "r" + std::to_string(i));
  }
}

}  // namespace
