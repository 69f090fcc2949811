// Copyright 2026 The relanno Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "relanno/session.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "relanno/demo.h"
#include "relanno/error.h"
#include "relanno/metrics.h"
#include "support/random_session.h"

namespace relanno {
namespace {

using testing::SteppingClock;

template <typename Fn>
ErrorCode CodeOf(Fn &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidSession;
}

Span SpanOf(const AnnotationSession &s, SentenceId id, const std::string &sub) {
  const std::string &text = s.sentences().at(id).text;
  const std::size_t pos = text.find(sub);
  EXPECT_NE(pos, std::string::npos) << sub;
  return Span{pos, pos + sub.size()};  // ASCII fixtures only
}

class SessionTest : public ::testing::Test {
 protected:
  AnnotationSession session_{SteppingClock()};
};

TEST_F(SessionTest, IngestFoundersSentence) {
  EXPECT_EQ(session_.IngestSentences(demo::kFoundersSentence), 1u);
  ASSERT_EQ(session_.sentences().size(), 1u);
  EXPECT_EQ(session_.sentences()[0].id, 0u);
  EXPECT_EQ(session_.sentences()[0].text, demo::kFoundersSentence);
}

TEST_F(SessionTest, IngestSkipsBlankLines) {
  EXPECT_EQ(session_.IngestSentences("s1\n\n  \ns2"), 2u);
  EXPECT_EQ(session_.sentences()[0].text, "s1");
  EXPECT_EQ(session_.sentences()[1].text, "s2");
}

TEST_F(SessionTest, IngestTrimsAndHandlesCrLf) {
  EXPECT_EQ(session_.IngestSentences("  one \r\n\ttwo\r\n"), 2u);
  EXPECT_EQ(session_.sentences()[0].text, "one");
  EXPECT_EQ(session_.sentences()[1].text, "two");
}

TEST_F(SessionTest, IngestFiftyLinesGetsDenseIds) {
  std::string raw;
  for (int i = 0; i < 50; ++i) raw += "sentence number " + std::to_string(i) + "\n";
  // Independent line count.
  std::istringstream lines(raw);
  std::size_t expected = 0;
  for (std::string line; std::getline(lines, line);) expected += !line.empty();
  ASSERT_EQ(expected, 50u);

  EXPECT_EQ(session_.IngestSentences(raw), expected);
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(session_.sentences()[i].id, i);
}

TEST_F(SessionTest, DuplicateSentencesGetDistinctIds) {
  EXPECT_EQ(session_.IngestSentences("same\nsame"), 2u);
  EXPECT_EQ(session_.sentences()[1].id, 1u);
}

TEST_F(SessionTest, EmptyInputLeavesSessionUnchanged) {
  session_.IngestSentences("keep");
  EXPECT_EQ(CodeOf([&] { session_.IngestSentences(" \n\t\n"); }),
            ErrorCode::kEmptyInput);
  EXPECT_EQ(CodeOf([&] { session_.IngestSentences(""); }),
            ErrorCode::kEmptyInput);
  EXPECT_EQ(CodeOf([&] { session_.IngestLabels("\n\n"); }),
            ErrorCode::kEmptyInput);
  EXPECT_EQ(session_.sentences().size(), 1u);
  EXPECT_EQ(session_.events().entries.size(), 1u);
}

TEST_F(SessionTest, InvalidUtf8Rejected) {
  EXPECT_EQ(CodeOf([&] { session_.IngestSentences("ok\nbad \xC3"); }),
            ErrorCode::kInvalidText);
  EXPECT_TRUE(session_.sentences().empty());
}

TEST_F(SessionTest, IngestLabels) {
  EXPECT_EQ(session_.IngestLabels(
                "/business/company/founders\n/people/person/place_of_birth"),
            2u);
  EXPECT_EQ(session_.IngestLabels("r1\nr1\nr1"), 1u);
  EXPECT_EQ(session_.labels().size(), 3u);
  // Case-sensitive identity.
  EXPECT_EQ(session_.IngestLabels("R1"), 1u);
}

TEST_F(SessionTest, IngestLabelsMatchesSetOracle) {
  std::mt19937 rng(11);
  std::vector<std::string> pool;
  for (int i = 0; i < 15; ++i) pool.push_back("/rel/" + std::to_string(rng()));
  std::vector<std::string> input = pool;
  for (int i = 0; i < 5; ++i) input.push_back(pool[rng() % pool.size()]);
  std::shuffle(input.begin(), input.end(), rng);
  ASSERT_EQ(input.size(), 20u);

  std::set<std::string> oracle;
  std::string raw;
  for (const std::string &label : input) {
    oracle.insert(label);
    raw += label + "\n";
  }
  EXPECT_EQ(session_.IngestLabels(raw), oracle.size());
  EXPECT_EQ(oracle.size(), 15u);
}

TEST_F(SessionTest, AddEntity) {
  session_.IngestSentences(demo::kFoundersSentence);
  const Span brin = SpanOf(session_, 0, "Sergey Brin");
  const EntityId id = session_.AddEntity(0, brin);
  EXPECT_EQ(session_.FindEntity(id)->text, "Sergey Brin");
  EXPECT_EQ(CodeOf([&] { session_.AddEntity(0, brin); }),
            ErrorCode::kDuplicateSpan);
  EXPECT_EQ(CodeOf([&] { session_.AddEntity(3, brin); }),
            ErrorCode::kUnknownSentence);
  EXPECT_EQ(CodeOf([&] { session_.AddEntity(0, Span{5, 5000}); }),
            ErrorCode::kOutOfBounds);
  EXPECT_EQ(session_.entities().size(), 1u);
}

TEST_F(SessionTest, AddsAllThirteenFoundersEntities) {
  session_.IngestSentences(demo::kFoundersSentence);
  for (const char *name :
       {"Google", "Sergey Brin", "Larry Page", "Skype", "Janus Friis", "Apple",
        "Steve Wozniak", "Yahoo", "Jerry Yang", "YouTube", "Chad Hurley",
        "Tom Anderson", "MySpace"}) {
    session_.AddEntity(0, SpanOf(session_, 0, name));
  }
  EXPECT_EQ(session_.entities().size(), 13u);
}

TEST_F(SessionTest, MultiByteEntityText) {
  session_.IngestSentences("caf\xC3\xA9 in \xE6\x9D\xB1\xE4\xBA\xAC");
  const EntityId id = session_.AddEntity(0, Span{8, 10});
  EXPECT_EQ(session_.FindEntity(id)->text, "\xE6\x9D\xB1\xE4\xBA\xAC");
}

TEST_F(SessionTest, NestedAndOverlappingSpansAllowed) {
  session_.IngestSentences("Sergey Brin");
  session_.AddEntity(0, Span{0, 11});
  session_.AddEntity(0, Span{7, 11});
  session_.AddEntity(0, Span{3, 9});
  EXPECT_EQ(session_.entities().size(), 3u);
}

class CascadeTest : public SessionTest {
 protected:
  void SetUp() override {
    session_.IngestSentences("A B C");
    session_.IngestLabels("r\ns");
    a_ = session_.AddEntity(0, Span{0, 1});
    b_ = session_.AddEntity(0, Span{2, 3});
    c_ = session_.AddEntity(0, Span{4, 5});
  }
  EntityId a_, b_, c_;
};

TEST_F(CascadeTest, DeleteUnrelatedEntity) {
  session_.SetRelation(0, a_, b_, "r", true);
  EXPECT_EQ(session_.DeleteEntity(c_), 0u);
  EXPECT_EQ(session_.relations().size(), 1u);
}

TEST_F(CascadeTest, DeleteMiddleEntityRemovesBothRelations) {
  session_.SetRelation(0, a_, b_, "r", true);
  session_.SetRelation(0, b_, c_, "s", true);
  // Oracle: count relation rows that mention b before deleting.
  std::size_t expected = 0;
  for (const auto &[key, r] : session_.relations()) {
    expected += (key.arg1 == b_ || key.arg2 == b_);
  }
  ASSERT_EQ(expected, 2u);
  EXPECT_EQ(session_.DeleteEntity(b_), expected);
  EXPECT_TRUE(session_.relations().empty());
  EXPECT_EQ(CodeOf([&] { session_.DeleteEntity(b_); }),
            ErrorCode::kUnknownEntity);
}

TEST_F(CascadeTest, DeleteThenReAddGetsNewId) {
  session_.DeleteEntity(a_);
  const EntityId again = session_.AddEntity(0, Span{0, 1});
  EXPECT_NE(again, a_);
  EXPECT_EQ(session_.FindEntity(again)->text, "A");
}

TEST_F(SessionTest, EntityPairs) {
  session_.IngestSentences("x y z\nsolo");
  EXPECT_TRUE(session_.EntityPairs(0).empty());
  const EntityId x = session_.AddEntity(0, Span{0, 1});
  EXPECT_TRUE(session_.EntityPairs(0).empty());
  const EntityId y = session_.AddEntity(0, Span{2, 3});
  EXPECT_EQ(session_.EntityPairs(0),
            (std::vector<EntityPair>{{x, y}, {y, x}}));
  session_.AddEntity(1, Span{0, 4});
  EXPECT_EQ(session_.EntityPairs(0).size(), 2u);
  EXPECT_EQ(CodeOf([&] { session_.EntityPairs(9); }),
            ErrorCode::kUnknownSentence);
}

TEST_F(SessionTest, FullyAnnotatedFoundersSentenceHas156Pairs) {
  AnnotationSession demo = demo::BuildDemoSession(SteppingClock());
  const std::vector<EntityId> ids = demo.EntitiesOf(0);
  ASSERT_EQ(ids.size(), 13u);
  std::vector<EntityPair> oracle;
  for (const EntityId a : ids) {
    for (const EntityId b : ids) {
      if (a != b) oracle.emplace_back(a, b);
    }
  }
  EXPECT_EQ(oracle.size(), 156u);
  EXPECT_EQ(demo.EntityPairs(0), oracle);
}

class RelationTest : public SessionTest {
 protected:
  void SetUp() override {
    session_.IngestSentences(demo::kFoundersSentence);
    session_.IngestLabels(
        "/business/company/founders\n/business/person/company");
    google_ = session_.AddEntity(0, SpanOf(session_, 0, "Google"));
    brin_ = session_.AddEntity(0, SpanOf(session_, 0, "Sergey Brin"));
  }
  EntityId google_, brin_;
};

TEST_F(RelationTest, SetFoundersOnGoogleBrin) {
  const auto names = session_.SetRelation(0, google_, brin_,
                                          "/business/company/founders", true);
  EXPECT_EQ(names, std::vector<std::string>{"/business/company/founders"});
  const std::size_t events = session_.events().entries.size();
  EXPECT_EQ(session_.SetRelation(0, google_, brin_,
                                 "/business/company/founders", true),
            names);
  EXPECT_EQ(session_.events().entries.size(), events);
  // The reverse direction is a separate pair.
  EXPECT_EQ(session_.FindRelation({0, brin_, google_}), nullptr);
}

TEST_F(RelationTest, RemovingLastLabelDropsPair) {
  session_.SetRelation(0, google_, brin_, "/business/company/founders", true);
  session_.SetRelation(0, google_, brin_, "/business/person/company", true);
  EXPECT_EQ(session_.FindRelation({0, google_, brin_})->relation_names,
            (std::vector<std::string>{"/business/company/founders",
                                      "/business/person/company"}));
  session_.SetRelation(0, google_, brin_, "/business/company/founders", false);
  EXPECT_EQ(session_.SetRelation(0, google_, brin_, "/business/person/company",
                                 false),
            std::vector<std::string>{});
  EXPECT_TRUE(session_.relations().empty());
  // Turning off an absent label is a no-op without an event.
  const std::size_t events = session_.events().entries.size();
  session_.SetRelation(0, google_, brin_, "/business/person/company", false);
  EXPECT_EQ(session_.events().entries.size(), events);
}

TEST_F(RelationTest, Errors) {
  EXPECT_EQ(CodeOf([&] {
              session_.SetRelation(0, google_, google_,
                                   "/business/person/company", true);
            }),
            ErrorCode::kSelfPair);
  EXPECT_EQ(CodeOf([&] {
              session_.SetRelation(0, google_, 99, "/business/person/company",
                                   true);
            }),
            ErrorCode::kUnknownEntity);
  EXPECT_EQ(CodeOf([&] {
              session_.SetRelation(0, google_, brin_, "/nope", true);
            }),
            ErrorCode::kUnknownLabel);
  EXPECT_EQ(CodeOf([&] {
              session_.SetRelation(0, google_, brin_,
                                   "/BUSINESS/PERSON/COMPANY", true);
            }),
            ErrorCode::kUnknownLabel);
  session_.IngestSentences("other");
  const EntityId other = session_.AddEntity(1, Span{0, 5});
  EXPECT_EQ(CodeOf([&] {
              session_.SetRelation(0, google_, other,
                                   "/business/person/company", true);
            }),
            ErrorCode::kUnknownEntity);
}

// Replays random toggles against a brute-force map of label sets.
TEST(SessionPropertyTest, ToggleSequenceMatchesReplayOracle) {
  std::mt19937 rng(3);
  for (int round = 0; round < 200; ++round) {
    AnnotationSession s(SteppingClock());
    s.IngestSentences("p q r s");
    s.IngestLabels("a\nb\nc");
    std::vector<EntityId> ids;
    for (std::size_t i = 0; i < 4; ++i) ids.push_back(s.AddEntity(0, Span{2 * i, 2 * i + 1}));
    std::map<EntityPair, std::vector<std::string>> oracle;
    for (int step = 0; step < 30; ++step) {
      const EntityId a = ids[rng() % 4];
      const EntityId b = ids[rng() % 4];
      if (a == b) continue;
      const std::string label(1, static_cast<char>('a' + rng() % 3));
      const bool on = rng() % 2;
      auto &expected = oracle[{a, b}];
      const auto pos = std::find(expected.begin(), expected.end(), label);
      if (on && pos == expected.end()) expected.push_back(label);
      if (!on && pos != expected.end()) expected.erase(pos);
      if (expected.empty()) oracle.erase({a, b});
      s.SetRelation(0, a, b, label, on);
    }
    std::map<EntityPair, std::vector<std::string>> actual;
    for (const auto &[key, r] : s.relations()) {
      actual[{key.arg1, key.arg2}] = r.relation_names;
    }
    ASSERT_EQ(actual, oracle);
  }
}

TEST(SessionPropertyTest, ToggleInvolutionRestoresStore) {
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    AnnotationSession s = testing::RandomSession(rng);
    if (s.labels().empty()) continue;
    for (const Sentence &sentence : s.sentences()) {
      const auto pairs = s.EntityPairs(sentence.id);
      if (pairs.empty()) continue;
      const EntityPair p = pairs[rng() % pairs.size()];
      const std::string label = s.labels()[rng() % s.labels().size()].name;
      const RelationMention *existing =
          s.FindRelation({sentence.id, p.first, p.second});
      const bool had = existing != nullptr &&
                       std::find(existing->relation_names.begin(),
                                 existing->relation_names.end(),
                                 label) != existing->relation_names.end();
      if (had) continue;  // involution is stated for an unset label
      const auto before = s.relations();
      s.SetRelation(sentence.id, p.first, p.second, label, true);
      s.SetRelation(sentence.id, p.first, p.second, label, false);
      ASSERT_EQ(s.relations(), before);
    }
  }
}

TEST(SessionPropertyTest, PairCountLaw) {
  std::mt19937 rng(9);
  for (int round = 0; round < 200; ++round) {
    const AnnotationSession s = testing::RandomSession(rng);
    for (const Sentence &sentence : s.sentences()) {
      std::size_t n = 0;
      for (const auto &[id, e] : s.entities()) n += e.sentence_id == sentence.id;
      ASSERT_EQ(s.EntityPairs(sentence.id).size(), n * (n == 0 ? 0 : n - 1));
    }
  }
}

TEST(SessionPropertyTest, NoEmptyMentionAndNoDanglingAfterRandomOps) {
  std::mt19937 rng(21);
  for (int round = 0; round < 300; ++round) {
    AnnotationSession s = testing::RandomSession(rng);
    for (int i = 0; i < 5 && !s.entities().empty(); ++i) {
      auto it = s.entities().begin();
      std::advance(it, rng() % s.entities().size());
      s.DeleteEntity(it->first);
    }
    for (const auto &[key, r] : s.relations()) {
      ASSERT_FALSE(r.relation_names.empty());
      ASSERT_NE(s.FindEntity(r.arg1), nullptr);
      ASSERT_NE(s.FindEntity(r.arg2), nullptr);
    }
  }
}

// Brute-force case-insensitive substring scan.
bool OracleContains(const std::string &hay, const std::string &needle) {
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size() && match; ++j) {
      match = std::tolower(static_cast<unsigned char>(hay[i + j])) ==
              std::tolower(static_cast<unsigned char>(needle[j]));
    }
    if (match) return true;
  }
  return false;
}

TEST_F(SessionTest, SearchLabels) {
  session_.IngestLabels(
      "/business/company/founders\n/people/person/place_of_birth\n"
      "/business/person/company");
  const std::vector<std::string> expected = {"/people/person/place_of_birth",
                                             "/business/person/company"};
  EXPECT_EQ(session_.SearchLabels("person"), expected);
  EXPECT_EQ(session_.SearchLabels("PERSON"), expected);
  EXPECT_EQ(session_.SearchLabels("").size(), 3u);
  EXPECT_TRUE(session_.SearchLabels("zzz").empty());
}

TEST(SessionPropertyTest, SearchAgreesWithSubstringOracle) {
  std::mt19937 rng(17);
  const std::string alphabet = "abAB/_-x";
  const auto random_text = [&](std::size_t max_len) {
    std::string s;
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
    return s;
  };
  for (int round = 0; round < 300; ++round) {
    AnnotationSession s(SteppingClock());
    std::string raw;
    for (int i = 0; i < 8; ++i) raw += random_text(6) + "x\n";
    s.IngestLabels(raw);
    const std::string query = random_text(3);
    std::vector<std::string> expected;
    for (const RelationLabel &l : s.labels()) {
      if (OracleContains(l.name, query)) expected.push_back(l.name);
    }
    ASSERT_EQ(s.SearchLabels(query), expected) << "query '" << query << "'";
  }
}

TEST_F(SessionTest, Reset) {
  session_.Reset();
  EXPECT_TRUE(session_.sentences().empty());
  AnnotationSession demo = demo::BuildDemoSession(SteppingClock());
  demo.Reset();
  EXPECT_TRUE(demo.sentences().empty());
  EXPECT_TRUE(demo.labels().empty());
  EXPECT_TRUE(demo.entities().empty());
  EXPECT_TRUE(demo.relations().empty());
  EXPECT_TRUE(demo.events().entries.empty());
  demo.IngestSentences("again");
  EXPECT_EQ(demo.sentences()[0].id, 0u);
  EXPECT_EQ(demo.AddEntity(0, Span{0, 5}), 0u);
}

TEST(EventLogTest, LogsKindsAndSentences) {
  AnnotationSession s(SteppingClock(10));
  s.IngestSentences("a b");
  s.IngestLabels("r");
  const EntityId a = s.AddEntity(0, Span{0, 1});
  const EntityId b = s.AddEntity(0, Span{2, 3});
  s.SetRelation(0, a, b, "r", true);
  s.SetRelation(0, a, b, "r", false);
  s.DeleteEntity(b);
  const std::vector<Event> expected = {
      {10, EventKind::kSentencesAdded, std::nullopt},
      {20, EventKind::kLabelsAdded, std::nullopt},
      {30, EventKind::kEntityAdded, 0},
      {40, EventKind::kEntityAdded, 0},
      {50, EventKind::kRelationSet, 0},
      {60, EventKind::kRelationUnset, 0},
      {70, EventKind::kEntityDeleted, 0},
  };
  EXPECT_EQ(s.events().entries, expected);
  EXPECT_STREQ(EventKindName(EventKind::kRelationUnset), "relation_unset");
}

TEST(EventLogTest, BackwardsClockIsClampedMonotone) {
  std::int64_t values[] = {100, 50, 200, 10, 10, 300};
  std::size_t next = 0;
  AnnotationSession s([&] { return values[next++ % 6]; });
  s.IngestSentences("a b c d e f");
  for (std::size_t i = 0; i < 5; ++i) s.AddEntity(0, Span{i, i + 1});
  const auto &entries = s.events().entries;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    EXPECT_LE(entries[i - 1].timestamp_ms, entries[i].timestamp_ms);
  }
  EXPECT_NO_THROW(ComputeTimingStats(s.events()));
}

TEST(FromPartsTest, KeepsIdsAndReservesDanglingArgs) {
  SessionParts parts;
  parts.sentences = {{0, "a b"}};
  parts.labels = {{"r"}};
  parts.entities = {{4, 0, {0, 1}, "a"}};
  parts.relations = {{0, 4, 9, {"r"}}};
  AnnotationSession s = AnnotationSession::FromParts(parts, SteppingClock());
  EXPECT_NE(s.FindEntity(4), nullptr);
  EXPECT_EQ(s.AddEntity(0, Span{2, 3}), 10u);
}

}  // namespace
}  // namespace relanno
