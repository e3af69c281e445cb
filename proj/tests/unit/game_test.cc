// Copyright 2026 The cgtherm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cgt/game.h"

#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "cgt/parser.h"
#include "cgt/random_games.h"
#include "naive_game.h"

namespace cgt {
namespace {

using testing::NaiveLeq;
using testing::NaiveOutcome;
using testing::ToNaive;

class GameTest : public ::testing::Test {
 protected:
  GameHandle P(std::string_view text) { return ParseGame(store_, text); }
  GameStore store_;
};

TEST_F(GameTest, MakeIsHashConsed) {
  GameHandle zero = store_.Make({}, {});
  EXPECT_EQ(zero, store_.Zero());
  GameHandle star = store_.Make({zero}, {zero});
  EXPECT_EQ(star, store_.Star());
  GameHandle a = store_.Make({store_.Integer(1), zero}, {star});
  GameHandle b = store_.Make({zero, store_.Integer(1), zero}, {star});
  EXPECT_EQ(a, b);
}

TEST_F(GameTest, ForeignHandlesAreRejected) {
  GameStore other;
  GameHandle foreign = other.Integer(3);
  EXPECT_THROW(store_.Negate(foreign), InvalidHandleError);
  EXPECT_THROW(store_.Make({foreign}, {}), InvalidHandleError);
  EXPECT_THROW(store_.OutcomeOf(GameHandle()), InvalidHandleError);
}

TEST_F(GameTest, IntegersFollowTheRecursiveDefinition) {
  GameHandle one = store_.Make({store_.Zero()}, {});
  GameHandle two = store_.Make({one}, {});
  EXPECT_EQ(store_.Integer(1), one);
  EXPECT_EQ(store_.Integer(2), two);
  EXPECT_EQ(store_.Integer(-2), store_.Negate(two));
}

TEST_F(GameTest, NegationUnfoldsAndIsAnInvolution) {
  EXPECT_EQ(store_.Negate(store_.Zero()), store_.Zero());
  EXPECT_EQ(store_.Negate(P("{5|2}")), P("{-2|-5}"));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    GameHandle g = RandomGame(store_, rng);
    EXPECT_EQ(store_.Negate(store_.Negate(g)), g);
  }
}

TEST_F(GameTest, SumExamples) {
  GameHandle g = P("{5|{3|1}}");
  EXPECT_EQ(store_.OutcomeOf(store_.Difference(store_.Sum(g, store_.Zero()), g)),
            Outcome::kPrevious);
  EXPECT_TRUE(store_.Eq(store_.Sum(store_.Integer(1), store_.Integer(1)),
                        store_.Integer(2)));
  GameHandle pm = P("{1|-1}");
  EXPECT_EQ(store_.OutcomeOf(store_.Sum(pm, pm)), Outcome::kPrevious);
}

TEST_F(GameTest, OutcomeClassesAndOrder) {
  EXPECT_EQ(store_.OutcomeOf(store_.Zero()), Outcome::kPrevious);
  EXPECT_EQ(store_.OutcomeOf(store_.Star()), Outcome::kNext);
  EXPECT_EQ(store_.OutcomeOf(store_.Up()), Outcome::kLeft);
  EXPECT_EQ(store_.OutcomeOf(store_.Down()), Outcome::kRight);
  EXPECT_TRUE(OutcomeLeq(Outcome::kRight, Outcome::kNext));
  EXPECT_TRUE(OutcomeLeq(Outcome::kPrevious, Outcome::kLeft));
  EXPECT_FALSE(OutcomeLeq(Outcome::kNext, Outcome::kPrevious));
  EXPECT_FALSE(OutcomeLeq(Outcome::kPrevious, Outcome::kNext));
}

TEST_F(GameTest, ComparisonExamples) {
  EXPECT_TRUE(store_.Leq(store_.Zero(), store_.Integer(1)));
  EXPECT_TRUE(store_.ConfusedWith(store_.Star(), store_.Zero()));
  EXPECT_TRUE(store_.Less(store_.Zero(), store_.Up()));
  EXPECT_TRUE(store_.ConfusedWith(store_.Up(), store_.Star()));
}

TEST_F(GameTest, CanonicalExamples) {
  EXPECT_EQ(store_.Canonical(P("{-1,0|1}")), P("{0|1}"));
  EXPECT_EQ(store_.Canonical(P("{0|1}")), store_.Number(Dyadic::Parse("1/2")));
  EXPECT_EQ(store_.Canonical(P("{*|*}")), store_.Zero());
  GameHandle star2 = P("{0,*|0,*}");
  EXPECT_EQ(store_.Canonical(star2), star2);
}

TEST_F(GameTest, NumbersFromDyadics) {
  GameHandle half = store_.Number(Dyadic::Parse("1/2"));
  EXPECT_TRUE(store_.Eq(store_.Sum(half, half), store_.Integer(1)));
  Dyadic x = Dyadic::Parse("3/4");
  EXPECT_EQ(store_.Number(-x), store_.Negate(store_.Number(x)));
  EXPECT_TRUE(store_.IsCanonical(store_.Number(Dyadic::Parse("-13/8"))));
  EXPECT_EQ(store_.NumberValue(P("{1|{3|2}}")), Dyadic(2));
  EXPECT_EQ(store_.NumberValue(P("{1|-1}")), std::nullopt);
  EXPECT_EQ(store_.NumberValue(P("{1|2}")), Dyadic::Parse("3/2"));
}

TEST_F(GameTest, AddAgreesWithLiteralSum) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    GameHandle g = RandomGame(store_, rng), h = RandomGame(store_, rng);
    GameHandle added = store_.Add(g, h);
    EXPECT_TRUE(store_.IsCanonical(added));
    EXPECT_EQ(added, store_.Canonical(store_.Sum(g, h)));
  }
}

// Every comparison the store makes is replayed on plain trees.
TEST_F(GameTest, LeqAndOutcomeMatchNaiveOracle) {
  std::mt19937_64 rng(3);
  RandomGameParams params{.depth = 3, .max_options = 2};
  for (int i = 0; i < 300; ++i) {
    GameHandle g = RandomGame(store_, rng, params);
    GameHandle h = RandomGame(store_, rng, params);
    auto ng = ToNaive(store_, g), nh = ToNaive(store_, h);
    EXPECT_EQ(store_.Leq(g, h), NaiveLeq(ng, nh));
    EXPECT_EQ(store_.OutcomeOf(g), NaiveOutcome({ng}));
    EXPECT_EQ(store_.OutcomeOf(store_.Sum(g, h)), NaiveOutcome({ng, nh}));
  }
}

TEST_F(GameTest, CanonicalFormProperties) {
  std::mt19937_64 rng(4);
  std::vector<GameHandle> games;
  for (int i = 0; i < 1000; ++i) games.push_back(RandomGame(store_, rng));
  for (GameHandle g : games) {
    GameHandle c = store_.Canonical(g);
    EXPECT_EQ(store_.Canonical(c), c);
    EXPECT_EQ(store_.OutcomeOf(store_.Difference(g, c)), Outcome::kPrevious);
  }
  for (std::size_t i = 0; i + 1 < games.size(); ++i) {
    GameHandle g = games[i], h = games[i + 1];
    EXPECT_EQ(store_.Eq(g, h), store_.Canonical(g) == store_.Canonical(h));
    Outcome diff = store_.OutcomeOf(store_.Difference(g, h));
    EXPECT_EQ(store_.Leq(g, h),
              diff == Outcome::kPrevious || diff == Outcome::kRight);
  }
}

TEST_F(GameTest, CanonicalFormsHaveNoDominatedOptions) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    GameHandle c = store_.Canonical(RandomGame(store_, rng));
    auto left = store_.LeftOptions(c);
    for (std::size_t a = 0; a < left.size(); ++a) {
      for (std::size_t b = 0; b < left.size(); ++b) {
        if (a != b) EXPECT_FALSE(store_.Leq(left[a], left[b]));
      }
    }
  }
}

TEST_F(GameTest, SemanticsIgnoreCanonicalization) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    GameHandle g = RandomGame(store_, rng), h = RandomGame(store_, rng);
    GameHandle cg = store_.Canonical(g), ch = store_.Canonical(h);
    EXPECT_EQ(store_.OutcomeOf(g), store_.OutcomeOf(cg));
    EXPECT_EQ(store_.Leq(g, h), store_.Leq(cg, ch));
  }
}

TEST_F(GameTest, PrintRoundTripsCanonicalForms) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    GameHandle c = store_.Canonical(RandomGame(store_, rng));
    std::string text = store_.Print(c);
    EXPECT_EQ(ParseGame(store_, text), c) << text;
  }
  EXPECT_EQ(store_.Print(P("{0|*}")), "^");
  EXPECT_EQ(store_.Print(P("{3|-3}")), "\xC2\xB1" "3");
  EXPECT_EQ(store_.Print(store_.Number(Dyadic::Parse("-3/4"))), "-3/4");
}

TEST(GameStoreLimits, NodeCapRaisesResourceError) {
  GameStore store;
  store.SetLimits({.max_nodes = 50});
  std::mt19937_64 rng(9);
  EXPECT_THROW(
      {
        for (int i = 0; i < 1000; ++i) store.Canonical(RandomGame(store, rng));
      },
      ResourceError);
}

TEST(GameStoreConcurrency, ThreadsAgreeWithSerialResults) {
  std::mt19937_64 rng(10);
  GameStore serial;
  std::vector<std::string> expected;
  std::vector<std::string> texts;
  for (int i = 0; i < 200; ++i) {
    GameHandle g = RandomGame(serial, rng);
    texts.push_back(serial.Print(g));
    expected.push_back(serial.Print(serial.Canonical(g)) + " " +
                       std::string(OutcomeName(serial.OutcomeOf(g))));
  }
  GameStore shared;
  std::vector<std::vector<std::string>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < texts.size(); ++i) {
        std::size_t k = (i * 7 + t * 13) % texts.size();
        GameHandle g = ParseGame(shared, texts[k]);
        results[t].push_back(shared.Print(shared.Canonical(g)) + " " +
                             std::string(OutcomeName(shared.OutcomeOf(g))) +
                             "#" + std::to_string(k));
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& rows : results) {
    for (const std::string& row : rows) {
      std::size_t hash = row.rfind('#');
      std::size_t k = std::stoul(row.substr(hash + 1));
      EXPECT_EQ(row.substr(0, hash), expected[k]);
    }
  }
}

}  // namespace
}  // namespace cgt
