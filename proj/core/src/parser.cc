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

#include "cgt/parser.h"

#include <cctype>
#include <vector>

namespace cgt {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::invalid_argument("parse error at offset " + std::to_string(offset) +
                            ": " + message),
      offset_(offset) {}

namespace {

constexpr std::string_view kPlusMinus = "\xC2\xB1";    // ±
constexpr std::string_view kStarSign = "\xE2\x88\x97";  // ∗
constexpr std::string_view kUpArrow = "\xE2\x86\x91";   // ↑
constexpr std::string_view kDownArrow = "\xE2\x86\x93";  // ↓

class Parser {
 public:
  Parser(GameStore& store, std::string_view text)
      : store_(store), text_(text) {}

  GameHandle ParseAll() {
    GameHandle g = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void Fail(const std::string& message) {
    throw ParseError(message, pos_);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Accept(std::string_view token) {
    SkipSpace();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void Expect(std::string_view token) {
    if (!Accept(token)) Fail("expected '" + std::string(token) + "'");
  }

  GameHandle ParseExpr() {
    GameHandle g = ParseTerm();
    while (true) {
      if (Accept("+")) {
        g = store_.Sum(g, ParseTerm());
      } else if (Accept("-")) {
        g = store_.Sum(g, store_.Negate(ParseTerm()));
      } else {
        return g;
      }
    }
  }

  GameHandle ParseTerm() {
    if (Accept("-")) return store_.Negate(ParseTerm());
    if (Accept(kPlusMinus)) return store_.PlusMinus(ParseTerm());
    return ParseAtom();
  }

  GameHandle ParseAtom() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return ParseNumber();
    if (Accept("*") || Accept(kStarSign)) return store_.Star();
    if (Accept("^") || Accept(kUpArrow)) return store_.Up();
    if (Accept("v") || Accept(kDownArrow)) return store_.Down();
    if (Accept("(")) {
      GameHandle g = ParseExpr();
      Expect(")");
      return g;
    }
    if (Accept("{")) {
      std::vector<GameHandle> left = ParseList();
      Expect("|");
      std::vector<GameHandle> right = ParseList();
      Expect("}");
      return store_.Make(left, right);
    }
    Fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::vector<GameHandle> ParseList() {
    std::vector<GameHandle> items;
    SkipSpace();
    if (pos_ < text_.size() && (text_[pos_] == '|' || text_[pos_] == '}')) {
      return items;
    }
    if (pos_ >= text_.size()) return items;
    items.push_back(ParseExpr());
    while (Accept(",")) items.push_back(ParseExpr());
    return items;
  }

  GameHandle ParseNumber() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    } else if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      digits();
      // "2^q" denominator; a bare "^" after the number would be a syntax
      // error anyway, so only a following digit makes it an exponent.
      if (pos_ + 1 < text_.size() && text_[pos_] == '^' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        digits();
      }
    }
    std::string_view literal = text_.substr(start, pos_ - start);
    try {
      return store_.Number(Dyadic::Parse(literal));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  GameStore& store_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GameHandle ParseGame(GameStore& store, std::string_view text) {
  return Parser(store, text).ParseAll();
}

}  // namespace cgt
