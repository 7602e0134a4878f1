#include <doctest.h>

#include <map>
#include <sstream>

#include "gaw/textgen.hpp"

using namespace gaw;

namespace {

textgen::Lexicon tiny_lexicon() {
  textgen::Lexicon lex;
  lex.subjects = {"COUNT"};
  lex.predicates = {"OLD"};
  lex.connectives = {"AND"};
  return lex;
}

} // namespace

TEST_CASE("singleton pools force the output sentence") {
  rng::State rng = rng::seeded(1);
  const auto tpl = textgen::parse_template("THE {S} IS {P}.");
  const auto lines = textgen::generate(tiny_lexicon(), {tpl}, 1, rng);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == "THE COUNT IS OLD.");
}

TEST_CASE("fixed seed reproduces identical lines") {
  textgen::Lexicon lex;
  lex.subjects = {"A", "B", "C"};
  lex.predicates = {"X", "Y"};
  const auto tpl = textgen::parse_template("{S}-{P}");
  rng::State a = rng::seeded(42);
  rng::State b = rng::seeded(42);
  CHECK(textgen::generate(lex, {tpl}, 4, a) == textgen::generate(lex, {tpl}, 4, b));
}

TEST_CASE("template parsing keeps literals and slot order") {
  const auto tpl = textgen::parse_template("NO {S} IS {P} {C} {S}!");
  REQUIRE(tpl.slots.size() == 9);
  CHECK(tpl.slots[0].kind == textgen::SlotKind::literal);
  CHECK(tpl.slots[0].text == "NO ");
  CHECK(tpl.slots[1].kind == textgen::SlotKind::subject);
  CHECK(tpl.slots[5].kind == textgen::SlotKind::connective);
  CHECK(tpl.slots[7].kind == textgen::SlotKind::subject);
  CHECK(tpl.slots[8].text == "!");
}

TEST_CASE("templates need at least one subject and one predicate slot") {
  CHECK_THROWS_AS(textgen::parse_template("THE {S} SLEEPS."), Error);
  CHECK_THROWS_AS(textgen::parse_template("ALWAYS {P}."), Error);
  CHECK_NOTHROW(textgen::parse_template("{S}{P}"));
}

TEST_CASE("braces that are not slot markers stay literal") {
  const auto tpl = textgen::parse_template("{X} {S} {P} {");
  std::string flat;
  for (const auto& s : tpl.slots)
    if (s.kind == textgen::SlotKind::literal) flat += s.text;
  CHECK(flat == "{X}   {");
}

TEST_CASE("generation fails when a template references an empty pool") {
  textgen::Lexicon lex = tiny_lexicon();
  lex.connectives.clear();
  rng::State rng = rng::seeded(1);
  const auto tpl = textgen::parse_template("{S} IS {P} {C} MORE");
  CHECK_THROWS_AS(textgen::generate(lex, {tpl}, 1, rng), Error);
}

TEST_CASE("lexicon loader parses sections, skips comments, rejects duplicates") {
  std::istringstream in(
      "# comment\n[subjects]\nCOUNT\nCASTLE\n\n[predicates]\nOLD\n[connectives]\nAND\n");
  const auto lex = textgen::load_lexicon(in, "t");
  CHECK(lex.subjects == std::vector<std::string>{"COUNT", "CASTLE"});
  CHECK(lex.predicates == std::vector<std::string>{"OLD"});
  CHECK(lex.connectives == std::vector<std::string>{"AND"});

  std::istringstream dup("[subjects]\nA\nA\n[predicates]\nX\n");
  CHECK_THROWS_AS(textgen::load_lexicon(dup, "t"), Error);
  std::istringstream nosubj("[predicates]\nX\n");
  CHECK_THROWS_AS(textgen::load_lexicon(nosubj, "t"), Error);
}

TEST_CASE("every output matches the pattern induced by its template") {
  textgen::Lexicon lex;
  lex.subjects = {"DOG", "CAT"};
  lex.predicates = {"FAST", "SLOW"};
  const auto tpl = textgen::parse_template("A {S} IS {P}.");
  rng::State rng = rng::seeded(5);
  for (const std::string& line : textgen::generate(lex, {tpl}, 50, rng)) {
    CHECK(line.rfind("A ", 0) == 0);
    CHECK(line.find(" IS ") != std::string::npos);
    CHECK(line.back() == '.');
    const std::string subject = line.substr(2, line.find(" IS ") - 2);
    CHECK((subject == "DOG" || subject == "CAT"));
  }
}

TEST_CASE("pool draws are uniform over 10^4 sentences") {
  textgen::Lexicon lex;
  for (int i = 0; i < 10; ++i) lex.subjects.push_back("S" + std::to_string(i));
  lex.predicates = {"P"};
  const auto tpl = textgen::parse_template("{S} {P}");
  rng::State rng = rng::seeded(2718);
  std::map<std::string, int> counts;
  const int n = 10000;
  for (const std::string& line : textgen::generate(lex, {tpl}, n, rng))
    ++counts[line.substr(0, line.find(' '))];
  REQUIRE(counts.size() == 10);
  for (const auto& [subject, count] : counts) {
    const double f = static_cast<double>(count) / n;
    CHECK(f > 0.08);
    CHECK(f < 0.12);
  }
}
