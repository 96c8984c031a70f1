// Copyright 2026 The cftkit Authors. All Rights Reserved.
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
#include <string>

#include "../support/generators.hpp"
#include "cft/dsl.hpp"
#include "cft/fixtures.hpp"
#include "cft/flatten.hpp"
#include "doctest.h"

using namespace cft;

namespace {

SourceLoc error_loc(std::string_view text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.loc();
  }
  FAIL("no parse error for: " << text);
  return {};
}

std::string error_message(std::string_view text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.message();
  }
  return {};
}

}  // namespace

TEST_CASE("fixture files parse into the programmatic models") {
  const auto sd = parse_model(fixtures::situation_display_source());
  CHECK(to_system_model(sd, fixtures::kSituationDisplaySystem) ==
        fixtures::situation_display_cft());
  CHECK(same_structure(to_fault_tree(sd, fixtures::kSituationDisplayTree),
                       fixtures::situation_display_classic()));

  const auto cl = parse_model(fixtures::crosslink_source());
  CHECK(to_system_model(cl, fixtures::kCrossLinkSystem) == fixtures::crosslink_cft());
  CHECK(same_structure(to_fault_tree(cl, fixtures::kCrossLinkTree),
                       fixtures::crosslink_classic()));
  CHECK(validate_source(sd).diagnostics.empty());
  CHECK(validate_source(cl).diagnostics.empty());
}

TEST_CASE("round trip on the fixtures") {
  for (const auto& f : fixtures::source_files()) {
    const auto model = parse_model(f.text);
    const auto text = serialize_model(model);
    CHECK(parse_model(text) == model);
    CHECK(serialize_model(parse_model(text)) == text);
  }
}

TEST_CASE("round trip on random models") {
  testing::Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto model = testing::random_source(rng);
    const auto text = serialize_model(model);
    const auto back = parse_model(text);
    REQUIRE(back == model);
  }
}

TEST_CASE("operator precedence and grouping") {
  const auto m = parse_model(
      "tree T {\n"
      "  event a p=0.1\n  event b p=0.1\n  event c p=0.1\n"
      "  x = a | b & c\n"
      "  y = a | b | c\n"
      "  z = (a | b) | c\n"
      "  w = a ^ b | c\n"
      "  top x as \"x\"\n}\n");
  const auto* t = m.find_tree("T");
  REQUIRE(t);
  CHECK(t->nodes[0].expr ==
        Expr::or_of({Expr::ref("a"), Expr::and_of({Expr::ref("b"), Expr::ref("c")})}));
  CHECK(t->nodes[1].expr ==
        Expr::or_of({Expr::ref("a"), Expr::ref("b"), Expr::ref("c")}));
  CHECK(t->nodes[2].expr ==
        Expr::or_of({Expr::or_of({Expr::ref("a"), Expr::ref("b")}), Expr::ref("c")}));
  CHECK(t->nodes[3].expr ==
        Expr::or_of({Expr::xor_of(Expr::ref("a"), Expr::ref("b")), Expr::ref("c")}));
  // Grouping survives serialization.
  CHECK(parse_model(serialize_model(m)) == m);
}

TEST_CASE("syntax errors carry line and column") {
  SUBCASE("unexpected token") {
    const auto loc = error_loc("component A {\n  out o: loss\n  event e p=0.1\n  o.loss = e |\n}\n");
    CHECK(loc.line == 5);
    CHECK(loc.column == 1);
  }
  SUBCASE("missing colon") {
    const auto loc = error_loc("component A {\n  out o loss\n}");
    CHECK(loc.line == 2);
    CHECK(loc.column == 9);
  }
  SUBCASE("bad probability") {
    CHECK(error_loc("tree T {\n event a p=1.5\n}").line == 2);
    CHECK(error_message("tree T {\n event a p=abc\n}").find("expected") != std::string::npos);
  }
  SUBCASE("chained xor") {
    CHECK(error_message("tree T { event a p=0.1 event b p=0.1 x = a ^ b ^ a top x as \"x\" }")
              .find("parenthesize") != std::string::npos);
  }
  SUBCASE("unterminated string and stray characters") {
    CHECK(error_loc("tree T {\n  top x as \"x\n}").line == 2);
    const auto loc = error_loc("component A {\n  out o: loss $\n}");
    CHECK(loc.line == 2);
    CHECK(loc.column == 15);
  }
  SUBCASE("reserved words") { CHECK(error_loc("component system {}").column == 11); }
  SUBCASE("nesting limit") {
    std::string deep = "tree T { event a p=0.1 x = ";
    for (int i = 0; i < 1000; ++i) deep += "(";
    deep += "a";
    for (int i = 0; i < 1000; ++i) deep += ")";
    deep += " top x as \"x\" }";
    CHECK_THROWS_AS(parse_model(deep), ParseError);
  }
}

TEST_CASE("semantic errors in tree blocks") {
  CHECK_THROWS_AS(to_fault_tree(parse_model("tree T { event a p=0.1 x = a | y y = x & a top x as \"x\" }"), "T"),
                  ModelError);
  CHECK_THROWS_AS(to_fault_tree(parse_model("tree T { event a p=0.1 x = a | b top x as \"x\" }"), "T"),
                  ModelError);
  CHECK_THROWS_AS(to_fault_tree(parse_model("tree T { event a p=0.1 top q as \"x\" }"), "T"),
                  ModelError);
  CHECK_THROWS_AS(to_fault_tree(parse_model("tree T { event a p=0.1 event b p=0.1 x = a | b top x as \"x\" }"), "U"),
                  UnknownNameError);
  try {
    to_fault_tree(parse_model("tree T {\n event a p=0.1\n x = a | b\n top x as \"x\"\n}"), "T");
  } catch (const ModelError& e) {
    CHECK(e.loc().line == 3);
  }
}

TEST_CASE("tree blocks from fault trees") {
  const auto ft = flatten(fixtures::crosslink_cft());
  const auto block = to_tree_block(ft, "Flat");
  const auto back = to_fault_tree(block);
  CHECK(back.event_names() == ft.event_names());
  // Same function, possibly different gate labels.
  for (const auto& [top, id] : ft.roots()) CHECK(back.find_root(top));
  SourceModel m;
  m.declarations.emplace_back(block);
  CHECK(parse_model(serialize_model(m)) == m);
}

TEST_CASE("parser fuzzing never crashes") {
  std::mt19937_64 rng(99);
  const std::string alphabet = "{}()=:,.|&^->\"# \n\tabcxyz_019p.e+";
  const std::vector<std::string> words = {"component", "system", "tree", "in", "out",
                                          "event", "inst", "connect", "top", "as", "p="};
  int parsed = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto& files = fixtures::source_files();
    std::string text(files[rng() % files.size()].text);
    const int edits = 1 + int(rng() % 8);
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = text.empty() ? 0 : rng() % text.size();
      switch (rng() % 5) {
        case 0: text.erase(pos, 1 + rng() % 20); break;
        case 1: text.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
        case 2: if (!text.empty()) text[pos] = char(rng() % 256); break;
        case 3: text.insert(pos, words[rng() % words.size()]); break;
        case 4: text = text.substr(0, pos); break;
      }
    }
    try {
      const auto model = parse_model(text);
      ++parsed;
      validate_source(model);
      CHECK(parse_model(serialize_model(model)) == model);
    } catch (const Error&) {
    }
  }
  MESSAGE(parsed << " mutants still parsed");
}
