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

#include <gtest/gtest.h>

#include "cog/templates.hpp"

namespace cog::templates {
namespace {

constexpr const char* kChili = "What is the spiciest part of a chili pepper?";

TEST(ParaphrasePrompt, FillsTechniqueAndSentence) {
  const auto p = render_paraphrase_prompt(kChili, ParaphraseTechnique::kSynonyms);
  EXPECT_NE(p.find("Technique Number: 1\n"), std::string::npos);
  EXPECT_NE(p.find(std::string("Sentence: ") + kChili + "\nParaphrase:"), std::string::npos);
  EXPECT_TRUE(p.ends_with("Paraphrase:"));
  EXPECT_TRUE(p.starts_with("Today I want you to learn the ways of paraphrasing a sentence."));
  // All four few-shot methods are present.
  for (const char* m : {"1. Use synonyms", "2. Change word forms (parts of speech)",
                        "3. Change the structure of a sentence", "4. Change conjunctions"}) {
    EXPECT_NE(p.find(m), std::string::npos) << m;
  }
}

TEST(ParaphrasePrompt, EmptyQuestionIsRejected) {
  EXPECT_THROW(render_paraphrase_prompt("", ParaphraseTechnique::kSynonyms), UsageError);
  EXPECT_THROW(render_paraphrase_prompt("   ", ParaphraseTechnique::kSynonyms), UsageError);
}

TEST(ParaphrasePrompt, TechniquesDifferOnlyInTechniqueLine) {
  const auto a = render_paraphrase_prompt(kChili, ParaphraseTechnique::kWordForms);
  const auto b = render_paraphrase_prompt(kChili, ParaphraseTechnique::kSentenceStructure);
  ASSERT_EQ(a.size(), b.size());
  std::size_t diffs = 0, where = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      ++diffs;
      where = i;
    }
  }
  EXPECT_EQ(diffs, 1u);
  const auto line_start = a.rfind('\n', where) + 1;
  EXPECT_EQ(a.substr(line_start, 18), "Technique Number: ");
}

TEST(ParaphrasePrompt, PlaceholdersInUserTextStayLiteral) {
  const auto p = render_paraphrase_prompt("Is {method} a word?", ParaphraseTechnique::kConjunctions);
  EXPECT_NE(p.find("Sentence: Is {method} a word?"), std::string::npos);
}

TEST(AnswerPrompt, ContainsFewShotRowsAndEndsWithAnswer) {
  const std::string ctx = "The Earth is closest to the Sun at perihelion, around January 3.";
  const auto p = render_answer_prompt(ctx, "When is the Earth closest to the Sun?");
  EXPECT_NE(p.find("Answer: 165 mph."), std::string::npos);
  EXPECT_NE(p.find("Answer: 24-72 hours."), std::string::npos);
  EXPECT_NE(p.find("Answer: 10-20%."), std::string::npos);
  EXPECT_NE(p.find("Context: " + ctx + "\nQuestion: When is the Earth closest to the Sun?\nAnswer:"),
            std::string::npos);
  EXPECT_TRUE(p.ends_with("\nAnswer:"));
  // Seven few-shot examples plus the filled slot.
  std::size_t contexts = 0;
  for (auto at = p.find("Context: "); at != std::string::npos; at = p.find("Context: ", at + 1)) ++contexts;
  EXPECT_EQ(contexts, 8u);
}

TEST(AnswerPrompt, EmptyInputsAreRejected) {
  EXPECT_THROW(render_answer_prompt("", "Q"), UsageError);
  EXPECT_THROW(render_answer_prompt("ctx", ""), UsageError);
}

TEST(AnswerPrompt, RenderingIsPure) {
  EXPECT_EQ(render_answer_prompt("ctx", "q"), render_answer_prompt("ctx", "q"));
}

TEST(RankPrompt, FourAnswersGiveFiveOptions) {
  RankOptions opts(kChili, {"The placenta.", "The seeds.", "The skin.", "The stem."});
  EXPECT_EQ(opts.rendered_count(), 5u);
  const auto p = render_rank_prompt(opts);
  EXPECT_EQ(p,
            "Question: What is the spiciest part of a chili pepper?\n"
            "For the question above there are several options given, choose one among them which seems to be the "
            "most correct.\n"
            "Option 1: The placenta.\n"
            "Option 2: The seeds.\n"
            "Option 3: The skin.\n"
            "Option 4: The stem.\n"
            "Option 5: Don't know the correct answer\n"
            "Answer:");
}

TEST(RankPrompt, SingleAnswerGivesTwoOptions) {
  const auto p = render_rank_prompt(RankOptions("Q?", {"A"}));
  EXPECT_NE(p.find("Option 1: A\nOption 2: Don't know the correct answer\nAnswer:"), std::string::npos);
  EXPECT_EQ(p.find("Option 3"), std::string::npos);
}

TEST(RankPrompt, InvalidOptionSets) {
  EXPECT_THROW(RankOptions("Q?", {}), UsageError);
  EXPECT_THROW(RankOptions("Q?", {"Georgia.", "georgia"}), UsageError);
  EXPECT_THROW(RankOptions("", {"A"}), UsageError);
}

TEST(ParseRank, PaperStyles) {
  EXPECT_EQ(parse_rank_response("Option 3: The hottest section of a chili pepper is the placenta, which contains "
                                "the highest concentration of capsaicin",
                                4),
            RankChoice{RankChoice::Option{3}});
  EXPECT_TRUE(parse_rank_response("Option 5", 4).is_dont_know());
  const std::string ramble =
      "Capsaicinoids are a group of chemicals that are responsible for the pungency of hot peper.";
  EXPECT_EQ(parse_rank_response(ramble, 4), RankChoice{RankChoice::ParseFailure{ramble}});
}

TEST(ParseRank, FirstOccurrenceWins) {
  EXPECT_EQ(parse_rank_response("Option 2: X. Option 5 would be wrong.", 4).option_index(), 2u);
}

TEST(ParseRank, OutOfRangeIsFailureNotClamped) {
  EXPECT_TRUE(parse_rank_response("Option 7", 4).is_parse_failure());
  EXPECT_TRUE(parse_rank_response("Option 0", 4).is_parse_failure());
  EXPECT_TRUE(parse_rank_response("9", 4).is_parse_failure());
}

TEST(ParseRank, LeadingIntegerFallback) {
  EXPECT_EQ(parse_rank_response("  2. The seeds", 4).option_index(), 2u);
  EXPECT_TRUE(parse_rank_response("3rd option", 4).is_parse_failure());
}

TEST(ParseRank, EveryValidIndexParses) {
  for (std::size_t k = 1; k <= 12; ++k) {
    for (std::size_t j = 1; j <= k + 1; ++j) {
      const auto c = parse_rank_response("Option " + std::to_string(j), k);
      EXPECT_FALSE(c.is_parse_failure()) << j << "/" << k;
      EXPECT_EQ(c.is_dont_know(), j == k + 1);
    }
  }
  EXPECT_THROW(parse_rank_response("Option 1", 0), UsageError);
}

TEST(StripLabel, RemovesLeadingLabelOnly) {
  EXPECT_EQ(strip_label("  Paraphrase: X? ", "Paraphrase"), "X?");
  EXPECT_EQ(strip_label("answer: Georgia.", "Answer"), "Georgia.");
  EXPECT_EQ(strip_label("Georgia. Answer: no", "Answer"), "Georgia. Answer: no");
}

}  // namespace
}  // namespace cog::templates
