#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gaw/rng.hpp"

// Stochastic text generation: random lexicon picks dropped into fixed
// grammatical templates.
//
// Lexicon files are line-oriented UTF-8 with [subjects] / [predicates] /
// [connectives] sections; '#' starts a comment line. Template files hold one
// template per line; {S}, {P} and {C} mark subject, predicate and connective
// slots, everything else is literal text.

namespace gaw::textgen {

struct Lexicon {
  std::vector<std::string> subjects;
  std::vector<std::string> predicates;
  std::vector<std::string> connectives;
};

enum class SlotKind { literal, subject, predicate, connective };

struct Slot {
  SlotKind kind = SlotKind::literal;
  std::string text; // literal content; empty for pool slots
};

struct SentenceTemplate {
  std::vector<Slot> slots;
  std::string source; // the original DSL line
};

Lexicon load_lexicon(std::istream& in, const std::string& name);
Lexicon load_lexicon_file(const std::string& path);

// Throws validation error unless the template holds at least one {S} and one {P}.
SentenceTemplate parse_template(const std::string& line);

std::vector<SentenceTemplate> load_templates(std::istream& in, const std::string& name);
std::vector<SentenceTemplate> load_templates_file(const std::string& path);

// n_sentences lines; per sentence one integer draw selects the template,
// then each pool slot takes one integer draw over its pool, left to right.
std::vector<std::string> generate(const Lexicon& lexicon,
                                  const std::vector<SentenceTemplate>& templates,
                                  int n_sentences, rng::State& rng);

} // namespace gaw::textgen
