#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gaw/error.hpp"

// Statistical aesthetic measures over discrete distributions and symbol
// grids, plus Carnap-style enumeration of semantic spaces.
//
// Conventions fixed here:
//   - logarithm base 2 throughout (entropies are in bits)
//   - 0 * log 0 == 0
//   - block entropy tiles the grid without overlap

namespace gaw::measures {

using Distribution = std::vector<double>;

// Throws validation error unless every p >= 0 and sum(p) == 1 within 1e-9.
void validate_distribution(const Distribution& p);

// H(p) = -sum p_i log2 p_i, in bits. Validates p.
double entropy(const Distribution& p);

double max_entropy(std::size_t n);

// R = 1 - H/Hmax with Hmax = log2(len). 0 for uniform, 1 for certainty.
// Requires len >= 2 (Hmax would be 0 otherwise).
double redundancy(const Distribution& p);

// 2D grid of discrete symbol ids, row-major. The alphabet is [0, alphabet).
struct SymbolGrid {
  int width = 0;
  int height = 0;
  int alphabet = 1;
  std::vector<int> cells;

  int at(int row, int col) const { return cells[static_cast<std::size_t>(row) * width + col]; }
};

// Throws validation error on dimension/alphabet/cell-range violations.
void validate_grid(const SymbolGrid& g);

// p_i = count(symbol i) / (width*height); length = alphabet.
Distribution symbol_distribution(const SymbolGrid& g);

// Entropy of the distribution over distinct block contents when the grid is
// tiled by block_w x block_h blocks without overlap. Block dims must divide
// the grid dims. A constant grid gives 0.
double block_entropy(const SymbolGrid& g, int block_w, int block_h);

// One binary property: a term and its antonym ("red"/"blue").
struct PropertyPair {
  std::string term;
  std::string antonym;
};

struct SemanticSpace {
  std::vector<PropertyPair> properties;
  std::vector<std::string> conjunctions; // all 2^n state descriptions
  std::uint64_t q = 1;                   // == conjunctions.size()
};

// Enumerates all 2^n conjunctions in lexicographic order of the
// (term=0, antonym=1) bit patterns, property 0 being the most significant
// bit: entry 0 is all terms, entry 2^n-1 all antonyms. Literals are joined
// with " and "; n == 0 yields the single empty conjunction "".
// n is capped at 20 (enumeration bound).
SemanticSpace enumerate_semantic_space(const std::vector<PropertyPair>& properties);

// CSV report over a grid: H, Hmax, R and block entropies for every requested
// block edge that divides the grid. Used verbatim by the CLI `measure`
// subcommand so stdout and file output share one byte-exact formatter.
std::string report_csv(const SymbolGrid& g, const std::vector<int>& block_edges);

} // namespace gaw::measures
