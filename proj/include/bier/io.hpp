#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bier/poset.hpp"
#include "bier/simplicial.hpp"

namespace bier {

// Complex text format: one facet per line as space-separated positive
// integers; "." is the empty face; "#" starts a comment; optional "n=<k>"
// header pins the universe (otherwise 1..max used vertex).
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);
void write_complex(std::ostream& out, const SimplicialComplex& k);

// Poset JSON: {"elements": [labels...], "covers": [[i,j], ...]} with i <. j.
Poset read_poset_json(std::istream& in);
Poset read_poset_json_file(const std::string& path);
void write_poset_json(std::ostream& out, const Poset& p);

// Ideal JSON: {"members": [element indices...]}.
std::vector<int> read_ideal_json(std::istream& in, const Poset& host);
std::vector<int> read_ideal_json_file(const std::string& path, const Poset& host);

// Bier-sphere vertices exported numerically: v- -> 2v-1, v+ -> 2v.
SimplicialComplex to_numeric_bier_labels(const SimplicialComplex& k, int n);

} // namespace bier
