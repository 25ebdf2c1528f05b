// Copyright 2026 The CoG Toolkit Authors.
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

#include <random>

#include <gtest/gtest.h>

#include "cog/schema.hpp"
#include "test_support.hpp"

namespace cog {
namespace {

TEST(ValidateCorpus, WellFormedPair) {
  const auto s = validate_corpus({{"a", "Q?", "A", "truthfulqa"}});
  EXPECT_EQ(s.valid, 1u);
  EXPECT_EQ(s.empty_field_rejects, 0u);
  EXPECT_EQ(s.duplicate_id_rejects, 0u);
}

TEST(ValidateCorpus, DuplicateId) {
  const std::vector<QAPair> pairs = {{"a", "Q1?", "A1", ""}, {"a", "Q2?", "A2", ""}};
  const auto s = validate_corpus(pairs);
  EXPECT_EQ(s.valid, 1u);
  EXPECT_EQ(s.duplicate_id_rejects, 1u);
  EXPECT_EQ(s.rejected_positions, std::vector<std::size_t>{1});
}

TEST(ValidateCorpus, WhitespaceOnlyQuestion) {
  const auto s = validate_corpus({{"b", "  ", "A", ""}});
  EXPECT_EQ(s.valid, 0u);
  EXPECT_EQ(s.empty_field_rejects, 1u);
}

TEST(ParaphraseTechnique, CodeLabelBijection) {
  std::set<std::string> labels;
  for (auto t : kAllTechniques) {
    EXPECT_EQ(technique_from_code(code(t)), t);
    EXPECT_EQ(technique_from_label(label(t)), t);
    labels.insert(std::string(label(t)));
  }
  EXPECT_EQ(labels.size(), 4u);
  EXPECT_THROW(technique_from_code(0), UsageError);
  EXPECT_THROW(technique_from_code(5), UsageError);
}

TEST(Selection, StringForms) {
  EXPECT_EQ(to_string(Selection::ranked(3)), "ranked(3)");
  EXPECT_EQ(parse_selection("ranked(12)"), Selection::ranked(12));
  EXPECT_EQ(parse_selection("dont-know-fallback"), Selection::dont_know_fallback());
  EXPECT_THROW(parse_selection("ranked()"), DataError);
  EXPECT_THROW(parse_selection("ranked(x)"), DataError);
  EXPECT_THROW(parse_selection("kept"), DataError);
}

ExpandedSet random_set(std::mt19937& rng, int id) {
  ExpandedSet set;
  set.seed = {"s" + std::to_string(id), "Question " + std::to_string(id) + "?", "Answer \"" + std::to_string(rng()) + "\"",
              "src"};
  set.variants.push_back({set.seed.id, 0, std::nullopt, set.seed.question, std::nullopt, std::nullopt,
                          set.seed.answer, Selection::original_kept()});
  const int n = 1 + static_cast<int>(rng() % 4);
  for (int i = 1; i <= n; ++i) {
    VariantRecord v;
    v.seed_id = set.seed.id;
    v.variant_index = i;
    v.technique = kAllTechniques[static_cast<std::size_t>(i - 1)];
    v.question = "Paraphrase " + std::to_string(i) + " of " + std::to_string(id) + " \xE2\x80\x99 \n tab\t";
    if (rng() % 2) v.preliminary_answer = "long answer " + std::to_string(rng());
    if (rng() % 2) v.brief_answer = "brief " + std::to_string(rng());
    v.final_answer = "final " + std::to_string(rng());
    const Selection choices[] = {Selection::ranked(1 + static_cast<int>(rng() % 5)), Selection::dont_know_fallback(),
                                 Selection::parse_failure_fallback()};
    v.selection = choices[rng() % 3];
    set.variants.push_back(std::move(v));
  }
  set.n_paraphrases = n;
  return set;
}

// Property: writing expanded sets and reading them back is lossless.
TEST(ExpandedFile, RoundTripProperty) {
  testing::TempDir dir;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ExpandedSet> sets;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) sets.push_back(random_set(rng, trial * 10 + i));
    const auto path = dir.file("expanded.jsonl");
    write_expanded_file(path, sets);
    EXPECT_EQ(read_expanded_file(path), sets);
  }
}

TEST(SeedFile, RoundTripProperty) {
  testing::TempDir dir;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<QAPair> pairs;
    for (int i = 0; i < 5; ++i) {
      pairs.push_back({"id-" + std::to_string(rng()), "Q \"quoted\" " + std::to_string(rng()) + "?\n",
                       "A\\" + std::to_string(rng()), "src"});
    }
    write_seed_file(dir.file("seeds.jsonl"), pairs);
    EXPECT_EQ(read_seed_file(dir.file("seeds.jsonl")), pairs);
  }
}

TEST(ExpandedFile, LinesEchoNParaphrasesAndFieldNames) {
  std::mt19937 rng(3);
  const auto set = random_set(rng, 1);
  for (const auto& line : expanded_set_lines(set)) {
    for (const char* field : {"seed_id", "variant_index", "technique", "question", "preliminary_answer",
                              "brief_answer", "final_answer", "selection", "n_paraphrases"}) {
      EXPECT_TRUE(line.contains(field)) << field;
    }
    EXPECT_EQ(line["n_paraphrases"], set.n_paraphrases);
  }
}

TEST(ExpandedSet, InvariantViolationsAreRejected) {
  std::mt19937 rng(5);
  auto set = random_set(rng, 1);
  EXPECT_NO_THROW(check_expanded_set(set));

  auto wrong_count = set;
  wrong_count.n_paraphrases += 1;
  EXPECT_THROW(check_expanded_set(wrong_count), DataError);

  auto altered_original = set;
  altered_original.variants[0].final_answer += "!";
  EXPECT_THROW(check_expanded_set(altered_original), DataError);

  auto duplicate_question = set;
  duplicate_question.variants[1].question = set.seed.question + "  ";
  EXPECT_THROW(check_expanded_set(duplicate_question), DataError);

  auto no_technique = set;
  no_technique.variants[1].technique.reset();
  EXPECT_THROW(check_expanded_set(no_technique), DataError);
}

TEST(ConsistencyReportJson, FieldNames) {
  ConsistencyReport r;
  r.backend = "rouge-l";
  r.run_label = "after-cog";
  r.per_question = {{"a", 0.5}, {"b", 1.0}};
  r.corpus_mean = 0.75;
  r.pair_count = 40;
  r.skipped_groups = 1;
  const json j = r;
  for (const char* f : {"backend", "run_label", "per_question", "corpus_mean", "pair_count", "skipped_groups"})
    EXPECT_TRUE(j.contains(f)) << f;
  EXPECT_EQ(j.get<ConsistencyReport>(), r);
}

}  // namespace
}  // namespace cog
