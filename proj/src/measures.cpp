#include "gaw/measures.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

#include "gaw/numfmt.hpp"

namespace gaw::measures {

void validate_distribution(const Distribution& p) {
  if (p.empty())
    fail(ErrorCode::validation, "distribution is empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0)) // also rejects NaN
      fail(ErrorCode::validation,
           "distribution entry " + std::to_string(i) + " is negative or NaN");
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > 1e-9)
    fail(ErrorCode::validation,
         "distribution sums to " + std::to_string(sum) + ", expected 1");
}

double entropy(const Distribution& p) {
  validate_distribution(p);
  double h = 0.0;
  for (double pi : p)
    if (pi > 0.0) h -= pi * std::log2(pi);
  return h < 0.0 ? 0.0 : h; // -0 from rounding
}

double max_entropy(std::size_t n) {
  if (n == 0)
    fail(ErrorCode::validation, "max_entropy of an empty distribution");
  return std::log2(static_cast<double>(n));
}

double redundancy(const Distribution& p) {
  if (p.size() < 2)
    fail(ErrorCode::validation,
         "redundancy undefined for fewer than 2 symbols");
  return 1.0 - entropy(p) / max_entropy(p.size());
}

void validate_grid(const SymbolGrid& g) {
  if (g.width < 1 || g.height < 1)
    fail(ErrorCode::validation, "grid dimensions must be at least 1x1");
  if (g.alphabet < 1)
    fail(ErrorCode::validation, "grid alphabet must hold at least one symbol");
  const auto expected = static_cast<std::size_t>(g.width) * static_cast<std::size_t>(g.height);
  if (g.cells.size() != expected)
    fail(ErrorCode::validation,
         "grid holds " + std::to_string(g.cells.size()) + " cells, expected " +
             std::to_string(expected));
  for (std::size_t i = 0; i < g.cells.size(); ++i)
    if (g.cells[i] < 0 || g.cells[i] >= g.alphabet)
      fail(ErrorCode::validation,
           "cell " + std::to_string(i) + " holds symbol " + std::to_string(g.cells[i]) +
               " outside alphabet [0, " + std::to_string(g.alphabet) + ")");
}

Distribution symbol_distribution(const SymbolGrid& g) {
  validate_grid(g);
  std::vector<std::size_t> counts(static_cast<std::size_t>(g.alphabet), 0);
  for (int c : g.cells) ++counts[static_cast<std::size_t>(c)];
  const double total = static_cast<double>(g.cells.size());
  Distribution p(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    p[i] = static_cast<double>(counts[i]) / total;
  return p;
}

double block_entropy(const SymbolGrid& g, int block_w, int block_h) {
  validate_grid(g);
  if (block_w < 1 || block_h < 1)
    fail(ErrorCode::invalid_argument, "block dimensions must be positive");
  if (g.width % block_w != 0 || g.height % block_h != 0)
    fail(ErrorCode::invalid_argument,
         "block " + std::to_string(block_w) + "x" + std::to_string(block_h) +
             " does not tile a " + std::to_string(g.width) + "x" +
             std::to_string(g.height) + " grid");

  std::map<std::vector<int>, std::size_t> counts;
  std::vector<int> block(static_cast<std::size_t>(block_w) * block_h);
  for (int by = 0; by < g.height; by += block_h) {
    for (int bx = 0; bx < g.width; bx += block_w) {
      std::size_t k = 0;
      for (int dy = 0; dy < block_h; ++dy)
        for (int dx = 0; dx < block_w; ++dx)
          block[k++] = g.at(by + dy, bx + dx);
      ++counts[block];
    }
  }
  const double total = static_cast<double>((g.width / block_w) * (g.height / block_h));
  Distribution p;
  p.reserve(counts.size());
  for (const auto& [_, n] : counts)
    p.push_back(static_cast<double>(n) / total);
  return entropy(p);
}

SemanticSpace enumerate_semantic_space(const std::vector<PropertyPair>& properties) {
  const std::size_t n = properties.size();
  if (n > 20)
    fail(ErrorCode::invalid_argument,
         "semantic space with " + std::to_string(n) +
             " properties exceeds the enumeration bound of 20");
  SemanticSpace space;
  space.properties = properties;
  space.q = std::uint64_t{1} << n;
  space.conjunctions.reserve(space.q);
  for (std::uint64_t pattern = 0; pattern < space.q; ++pattern) {
    std::string conj;
    for (std::size_t j = 0; j < n; ++j) {
      // property 0 is the most significant bit, so patterns list in
      // lexicographic order with term < antonym
      const bool antonym = (pattern >> (n - 1 - j)) & 1u;
      if (j > 0) conj += " and ";
      conj += antonym ? properties[j].antonym : properties[j].term;
    }
    space.conjunctions.push_back(std::move(conj));
  }
  return space;
}

std::string report_csv(const SymbolGrid& g, const std::vector<int>& block_edges) {
  const Distribution p = symbol_distribution(g);
  const double h = entropy(p);
  const double hmax = max_entropy(p.size());
  std::ostringstream out;
  out << "metric,value\n";
  out << "width," << g.width << "\n";
  out << "height," << g.height << "\n";
  out << "alphabet," << g.alphabet << "\n";
  out << "h_bits," << numfmt::fixed(h, 9) << "\n";
  out << "h_max_bits," << numfmt::fixed(hmax, 9) << "\n";
  if (p.size() >= 2)
    out << "redundancy," << numfmt::fixed(redundancy(p), 9) << "\n";
  for (int edge : block_edges) {
    if (edge < 1 || g.width % edge != 0 || g.height % edge != 0) continue;
    out << "block_h_" << edge << "x" << edge << "_bits,"
        << numfmt::fixed(block_entropy(g, edge, edge), 9) << "\n";
  }
  return out.str();
}

} // namespace gaw::measures
