// Copyright 2026 The clp2chc Authors
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
#include <gtest/gtest.h>

#include "clp2chc/smtlib.hpp"
#include "clp2chc/syntax.hpp"
#include "clp2chc/translator.hpp"
#include "support/files.hpp"

using namespace clp2chc;
using namespace clp2chc::smt;

namespace {

Script golden(const std::string& name) { return parse_script(testfiles::read("tests/golden/" + name + ".smt2")); }

Script translated(const std::string& name, DatatypeStyle style = DatatypeStyle::kModern) {
  auto db = syntax::parse_program(testfiles::read("tests/golden/" + name + ".pl"));
  // through text, so the printer is part of the check
  return parse_script(emit(translate_program(db), style));
}

}  // namespace

TEST(Symbols, Quoting) {
  EXPECT_EQ(quote_symbol("father_1"), "father_1");
  EXPECT_EQ(quote_symbol("hello world"), "|hello world|");
  EXPECT_EQ(quote_symbol("assert"), "|assert|");
  EXPECT_EQ(quote_symbol("1st"), "|1st|");
  EXPECT_TRUE(is_simple_symbol("foo$1"));
  EXPECT_FALSE(is_simple_symbol(""));
}

TEST(Emit, ClaireGolden) {
  auto s = translated("claire");
  EXPECT_TRUE(structurally_equal(s, golden("claire")));
  // the golden lists claire first, collection order puts father first
  EXPECT_FALSE(structurally_equal(s, golden("claire"), {.ordered_constructors = true}));
  std::string text = emit(s);
  EXPECT_NE(text.find("(father (father_1 U))"), std::string::npos);
  EXPECT_NE(text.find("(man (father claire))"), std::string::npos);
}

TEST(Emit, LegacyStyle) {
  auto db = syntax::parse_program(testfiles::read("tests/corpus/cities.pl"));
  std::string text = emit(translate_program(db), DatatypeStyle::kLegacy);
  EXPECT_NE(text.find("(declare-datatypes\n    ()"), std::string::npos);
  EXPECT_NE(text.find("(waypoint (waypoint_1 U) (waypoint_2 U))"), std::string::npos);
  EXPECT_TRUE(structurally_equal(parse_script(text), golden("cities")));
}

TEST(Emit, ModernStyleSingleSort) {
  std::string text = emit(translated("claire"));
  EXPECT_NE(text.find("(declare-datatype U"), std::string::npos);
  auto db = syntax::parse_program(testfiles::read("tests/corpus/cities.pl"));
  EXPECT_NE(emit(translate_program(db)).find("(declare-datatypes\n    ((U 0) (L 0))"), std::string::npos);
}

TEST(Parse, RoundTripCitiesGolden) {
  auto s = golden("cities");
  for (auto style : {DatatypeStyle::kModern, DatatypeStyle::kLegacy}) {
    auto again = parse_script(emit(s, style));
    EXPECT_TRUE(structurally_equal(again, s, {.ordered_constructors = true}));
    EXPECT_EQ(emit(again), emit(s));
  }
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_script("(check-sat)"), SmtParseError);  // no set-logic
  EXPECT_THROW(parse_script("(set-logic HORN)"), SmtParseError);  // no check-sat
  EXPECT_THROW(parse_script("(set-logic HORN) (assert (p x)"), SmtParseError);
  EXPECT_THROW(parse_script("(set-logic HORN) (assert (forall ((X U) (X U)) (p X))) (check-sat)"),
               SmtParseError);
  EXPECT_THROW(parse_script("(set-logic HORN) (assert true) (declare-fun p () Bool) (check-sat)"),
               SmtParseError);
  EXPECT_NO_THROW(parse_script("(set-logic HORN) (declare-fun p () Bool) (assert p) (check-sat)"));
}

TEST(Parse, Terms) {
  auto t = parse_term("((_ is aList) (cons |a b| nil))");
  EXPECT_EQ(to_string(t), "((_ is aList) (cons |a b| nil))");
  EXPECT_EQ(to_string(parse_term("(- 5)")), "(- 5)");
  EXPECT_EQ(to_string(parse_term("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(StructuralEquality, Goldens) {
  EXPECT_TRUE(structurally_equal(translated("claire"), golden("claire")));
  EXPECT_TRUE(structurally_equal(translated("list_concat"), golden("list_concat")));
  EXPECT_TRUE(structurally_equal(translated("cities"), golden("cities")));
  EXPECT_TRUE(structurally_equal(translated("cities", DatatypeStyle::kLegacy), golden("cities")));
  EXPECT_FALSE(structurally_equal(translated("claire"), golden("list_concat")));
}

TEST(StructuralEquality, AlphaAndConjunctions) {
  auto a = parse_script(
      "(set-logic HORN) (declare-fun p (U) Bool) (declare-fun q (U U) Bool)"
      "(assert (forall ((X U) (Y U)) (=> (and (p X) (and (p Y))) (q X Y)))) (check-sat)");
  auto b = parse_script(
      "(set-logic HORN) (declare-fun p (U) Bool) (declare-fun q (U U) Bool)"
      "(assert (forall ((B U) (A U)) (=> (and (p B) (p A)) (q B A)))) (check-sat)");
  auto c = parse_script(
      "(set-logic HORN) (declare-fun p (U) Bool) (declare-fun q (U U) Bool)"
      "(assert (forall ((X U) (Y U)) (=> (and (p X) (p Y)) (q Y X)))) (check-sat)");
  EXPECT_TRUE(structurally_equal(a, b));
  EXPECT_FALSE(structurally_equal(a, c));
}

TEST(StructuralEquality, ConstructorOrder) {
  auto a = parse_script("(set-logic HORN) (declare-datatype U ((a) (b))) (check-sat)");
  auto b = parse_script("(set-logic HORN) (declare-datatype U ((b) (a))) (check-sat)");
  EXPECT_TRUE(structurally_equal(a, b));
  EXPECT_FALSE(structurally_equal(a, b, {.ordered_constructors = true}));
}

TEST(Validate, Invariants) {
  Script s;
  s.commands.push_back(CheckSat{});
  EXPECT_FALSE(validate(s).empty());
  Script ok{{SetLogic{"HORN"}, CheckSat{}}};
  EXPECT_TRUE(validate(ok).empty());
}
