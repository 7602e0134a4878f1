#include "gaw/textgen.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gaw::textgen {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

void check_unique(const std::vector<std::string>& pool, const std::string& name,
                  const std::string& section) {
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (pool[i] == pool[j])
        fail(ErrorCode::validation,
             name + ": duplicate entry '" + pool[i] + "' in [" + section + "]");
}

} // namespace

Lexicon load_lexicon(std::istream& in, const std::string& name) {
  Lexicon lex;
  std::vector<std::string>* current = nullptr;
  std::string section;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = t.substr(1, t.size() - 2);
      if (section == "subjects") current = &lex.subjects;
      else if (section == "predicates") current = &lex.predicates;
      else if (section == "connectives") current = &lex.connectives;
      else
        fail(ErrorCode::parse, name + ": unknown section [" + section + "] at line " +
                                   std::to_string(lineno));
      continue;
    }
    if (current == nullptr)
      fail(ErrorCode::parse,
           name + ": entry before any section at line " + std::to_string(lineno));
    current->push_back(t);
  }
  if (lex.subjects.empty())
    fail(ErrorCode::validation, name + ": [subjects] is empty");
  if (lex.predicates.empty())
    fail(ErrorCode::validation, name + ": [predicates] is empty");
  check_unique(lex.subjects, name, "subjects");
  check_unique(lex.predicates, name, "predicates");
  check_unique(lex.connectives, name, "connectives");
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::io, "cannot open '" + path + "'");
  return load_lexicon(in, path);
}

SentenceTemplate parse_template(const std::string& line) {
  SentenceTemplate tpl;
  tpl.source = line;
  std::string literal;
  auto flush_literal = [&]() {
    if (!literal.empty()) {
      tpl.slots.push_back({SlotKind::literal, literal});
      literal.clear();
    }
  };
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '{' && i + 2 < line.size() && line[i + 2] == '}') {
      SlotKind kind;
      switch (line[i + 1]) {
        case 'S': kind = SlotKind::subject; break;
        case 'P': kind = SlotKind::predicate; break;
        case 'C': kind = SlotKind::connective; break;
        default: literal += line[i]; continue;
      }
      flush_literal();
      tpl.slots.push_back({kind, ""});
      i += 2;
      continue;
    }
    literal += line[i];
  }
  flush_literal();

  const auto has = [&](SlotKind k) {
    return std::any_of(tpl.slots.begin(), tpl.slots.end(),
                       [&](const Slot& s) { return s.kind == k; });
  };
  if (!has(SlotKind::subject) || !has(SlotKind::predicate))
    fail(ErrorCode::validation,
         "template needs at least one {S} and one {P}: '" + line + "'");
  return tpl;
}

std::vector<SentenceTemplate> load_templates(std::istream& in, const std::string& name) {
  std::vector<SentenceTemplate> templates;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    templates.push_back(parse_template(line));
  }
  if (templates.empty())
    fail(ErrorCode::validation, name + ": no templates");
  return templates;
}

std::vector<SentenceTemplate> load_templates_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::io, "cannot open '" + path + "'");
  return load_templates(in, path);
}

std::vector<std::string> generate(const Lexicon& lexicon,
                                  const std::vector<SentenceTemplate>& templates,
                                  int n_sentences, rng::State& rng) {
  if (n_sentences < 1)
    fail(ErrorCode::invalid_argument, "n_sentences must be >= 1");
  if (templates.empty())
    fail(ErrorCode::validation, "no templates");
  if (lexicon.subjects.empty() || lexicon.predicates.empty())
    fail(ErrorCode::validation, "lexicon pools must not be empty");
  for (const SentenceTemplate& tpl : templates)
    for (const Slot& slot : tpl.slots)
      if (slot.kind == SlotKind::connective && lexicon.connectives.empty())
        fail(ErrorCode::validation,
             "template '" + tpl.source + "' uses {C} but the connective pool is empty");

  auto pick = [&](const std::vector<std::string>& pool) -> const std::string& {
    const auto i = rng::next_int(rng, 0, static_cast<std::int64_t>(pool.size()) - 1);
    return pool[static_cast<std::size_t>(i)];
  };

  std::vector<std::string> lines;
  lines.reserve(static_cast<std::size_t>(n_sentences));
  for (int s = 0; s < n_sentences; ++s) {
    const auto ti = rng::next_int(rng, 0, static_cast<std::int64_t>(templates.size()) - 1);
    const SentenceTemplate& tpl = templates[static_cast<std::size_t>(ti)];
    std::string line;
    for (const Slot& slot : tpl.slots) {
      switch (slot.kind) {
        case SlotKind::literal: line += slot.text; break;
        case SlotKind::subject: line += pick(lexicon.subjects); break;
        case SlotKind::predicate: line += pick(lexicon.predicates); break;
        case SlotKind::connective: line += pick(lexicon.connectives); break;
      }
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

} // namespace gaw::textgen
