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

#ifndef CGT_PARSER_H_
#define CGT_PARSER_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cgt/game.h"

namespace cgt {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t offset);
  // Byte offset into the input where parsing failed.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses game notation:
//
//   expr := term (("+" | "-") term)*
//   term := "-" term | "±" term | atom
//   atom := number | "*" | "^" | "v" | "{" list "|" list "}" | "(" expr ")"
//   list := empty | expr ("," expr)*
//
// Numbers are integers, p/2^q, p/d with d a power of two, or decimals with a
// dyadic fraction. "*" (or U+2217) is {0|0}, "^" (or U+2191) is {0|*}, "v"
// (or U+2193) is {*|0}, and "±G" is {G|-G}. Braces build the literal node;
// "+" and "-" build literal sums and negatives. Whitespace is ignored.
GameHandle ParseGame(GameStore& store, std::string_view text);

}  // namespace cgt

#endif  // CGT_PARSER_H_
