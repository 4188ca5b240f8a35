#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bier/poset.hpp"
#include "bier/simplicial.hpp"

namespace bier {

// Down-sets of a poset on <= 64 elements, encoded as element-index masks.
// Enumeration order is the deterministic DFS over a fixed linear extension.

// Proper ideals only: bottom in, top out. `rank_counts[r]` tracks the number
// of chosen elements of rank r and is maintained incrementally.
void for_each_proper_ideal(const Poset& p,
                           const std::function<void(std::uint64_t members,
                                                    const std::vector<int>& level_counts)>& fn);

std::uint64_t count_proper_ideals(const Poset& p, int shards = 1);

// Proper ideals of B_n containing the empty set, streamed as complexes.
// Hard cap n <= 6 (the exhaustive desk-scale limit).
class IdealStream {
public:
    explicit IdealStream(int n);
    // Faces of the next ideal (masks, ascending), or nullopt when exhausted.
    std::optional<std::vector<Mask>> next();
    int n() const { return n_; }

private:
    int n_ = 0;
    int m_ = 0;                           // 2^n
    std::vector<std::uint64_t> covers_;   // lower-cover mask per subset
    std::vector<int> decision_;           // DFS stack: subset masks, sign via taken_
    std::vector<char> taken_;
    bool started_ = false, done_ = false;
    std::uint64_t chosen_ = 0;
    bool advance();                       // move to next leaf
};

std::vector<Mask> ideal_faces(std::uint64_t members, int n);
SimplicialComplex ideal_to_complex(std::uint64_t members, int n);

enum class IsoMode {
    Exhaustive, // all proper ideals; n <= 5
    Restricted, // complete (floor((n-1)/2)-1)-skeleton plus any middle-level subset
    CentrallySymmetric, // even n: cs_construct selections
};

std::uint64_t count_bier_isoclasses(int n, IsoMode mode = IsoMode::Exhaustive, int shards = 1);

// The Restricted family, materialized (2^(middle level size) ideals).
std::vector<SimplicialComplex> restricted_family(int n);

// Deterministic pseudo-random proper ideal: downward closure of a
// density-biased antichain sample; density 0 -> {0}, density 1 -> B_n minus
// its top set. Same seed, same result.
SimplicialComplex random_complex(int n, std::uint64_t seed, double density);

} // namespace bier
