#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bier/simplicial.hpp"

namespace bier {

// Finite bounded poset on elements 0..m-1. The full order relation is kept
// as a dense bit matrix; labels are opaque strings used only for reporting.
// Values are immutable after construction.
class Poset {
public:
    // Transitive closure of an acyclic cover relation; requires a unique
    // minimum and maximum. Throws CyclicCovers / NotBounded / BadParameter.
    static Poset from_covers(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& covers);

    // Builds from an order predicate, validating partial-order axioms on
    // posets of moderate size. Throws NotBounded.
    static Poset from_relation(std::vector<std::string> labels,
                               const std::function<bool(int, int)>& leq);

    int size() const { return m_; }
    const std::string& label(int e) const { return labels_[e]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool leq(int a, int b) const { return (leq_[a * words_ + (b >> 6)] >> (b & 63)) & 1; }
    bool lt(int a, int b) const { return a != b && leq(a, b); }

    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int length() const { return length_; }

    // Longest chain length from bottom to e; the rank function when graded.
    const std::vector<int>& height() const { return height_; }

    // True covers a <. b, derived from the closure, sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<std::vector<int>>& upper_covers() const { return up_adj_; }
    const std::vector<int>& lower_covers(int e) const { return down_adj_[e]; }

    std::vector<int> proper_elements() const;
    std::vector<int> interval_elements(int x, int y) const; // requires x <= y
    int interval_length(int x, int y) const;                // l(x,y), longest chain in [x,y]

    bool is_lattice() const;
    int meet(int a, int b) const; // throws NotALattice when undefined
    int join(int a, int b) const;

private:
    Poset() = default;
    void finish(); // bottom/top/length/height/covers from the closure

    std::vector<std::string> labels_;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> leq_; // row a: bits of {b : a <= b}
    std::vector<std::uint64_t> geq_; // row a: bits of {b : b <= a}
    int bottom_ = -1, top_ = -1, length_ = 0;
    std::vector<int> height_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_adj_, down_adj_;
};

Poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<int, int>>& covers);

// Standard test posets.
Poset boolean_lattice(int n);  // elements indexed by subset mask 0..2^n-1
Poset polygon_lattice(int m);  // face lattice of an m-gon, m >= 3
Poset opposite(const Poset& p);
Poset product(const Poset& p, const Poset& q);
Poset induced_interval(const Poset& p, int x, int y); // [x,y] as a bounded poset

// Graded iff all maximal chains have the same length; then ranks are heights.
bool is_graded(const Poset& p);
std::optional<std::vector<int>> rank_function(const Poset& p);

// Every nontrivial interval has equally many odd- and even-rank elements.
// Requires a graded poset (NotGraded).
bool is_eulerian(const Poset& p);

bool is_ideal(const Poset& p, const std::vector<int>& members);
bool is_proper_ideal(const Poset& p, const std::vector<int>& members);

// Complex of chains of the proper part; {} (the empty-face complex) when the
// proper part is empty. Requires length >= 1.
SimplicialComplex order_complex(const Poset& p);

// Elements of rank i (the whole poset, top included).
std::vector<long long> rank_counts(const Poset& p);

} // namespace bier
