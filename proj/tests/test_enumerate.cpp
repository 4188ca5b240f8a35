#include "doctest.h"

#include <array>
#include <numeric>
#include <set>

#include "bier/bier_sphere.hpp"
#include "bier/enumerate.hpp"
#include "bier/error.hpp"

using namespace bier;

namespace {
std::string error_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}
} // namespace

TEST_CASE("proper ideal counts") {
    CHECK(count_proper_ideals(boolean_lattice(1)) == 1);
    CHECK(count_proper_ideals(boolean_lattice(2)) == 4);
    CHECK(count_proper_ideals(boolean_lattice(3)) == 18);
    CHECK(count_proper_ideals(boolean_lattice(4)) == 166);
    CHECK(count_proper_ideals(boolean_lattice(5)) == 7579);

    // stability across shard configurations
    for (int shards : {2, 3, 4}) {
        CHECK(count_proper_ideals(boolean_lattice(3), shards) == 18);
        CHECK(count_proper_ideals(boolean_lattice(4), shards) == 166);
    }

    // generic posets enumerate too
    CHECK(count_proper_ideals(polygon_lattice(3)) > 0);
}

TEST_CASE("ideal stream") {
    IdealStream stream(3);
    std::set<std::vector<Mask>> seen;
    long long count = 0;
    auto first = stream.next();
    REQUIRE(first.has_value());
    CHECK(*first == std::vector<Mask>{0}); // the ideal {0}
    seen.insert(*first);
    ++count;
    while (auto ideal = stream.next()) {
        ++count;
        CHECK(seen.insert(*ideal).second); // no repeats
        // downward closed and proper
        auto k = complex_on_ground(3, *ideal);
        CHECK(k.face_count() == static_cast<long long>(ideal->size()));
        CHECK_FALSE(k.contains(full_mask(3)));
    }
    CHECK(count == 18);
    CHECK_FALSE(stream.next().has_value());

    // deterministic across runs
    IdealStream a(4), b(4);
    while (true) {
        auto x = a.next(), y = b.next();
        CHECK(x == y);
        if (!x) break;
    }

    CHECK(error_code([] { IdealStream s(7); }) == "TooLarge");
}

TEST_CASE("for_each matches the stream") {
    IdealStream stream(4);
    std::vector<std::uint64_t> stream_signatures;
    while (auto ideal = stream.next()) {
        std::uint64_t bits = 0;
        for (Mask f : *ideal) bits |= std::uint64_t{1} << f;
        stream_signatures.push_back(bits);
    }
    std::set<std::uint64_t> via_callback;
    for_each_proper_ideal(boolean_lattice(4),
                          [&](std::uint64_t members, const std::vector<int>& counts) {
                              via_callback.insert(members);
                              // level counts track cardinalities
                              std::array<int, 5> expect{};
                              for (Mask f : ideal_faces(members, 4)) ++expect[card(f)];
                              for (int i = 0; i <= 4; ++i) CHECK(counts[i] == expect[i]);
                          });
    CHECK(via_callback.size() == stream_signatures.size());
    for (std::uint64_t s : stream_signatures) CHECK(via_callback.count(s));
}

TEST_CASE("isomorphism class counts") {
    CHECK(count_bier_isoclasses(2) == 1);
    CHECK(count_bier_isoclasses(3) == 4);
    for (int shards : {2, 4}) CHECK(count_bier_isoclasses(3, IsoMode::Exhaustive, shards) == 4);
    CHECK(count_bier_isoclasses(4) == count_bier_isoclasses(4, IsoMode::Exhaustive, 3));

    // cs selections at n = 4: 8 labeled choices, at most 8 classes
    CHECK(count_bier_isoclasses(4, IsoMode::CentrallySymmetric) <= 8);
    CHECK(count_bier_isoclasses(4, IsoMode::CentrallySymmetric) >= 1);

    CHECK(error_code([] { count_bier_isoclasses(6); }) == "TooLarge");
}

TEST_CASE("restricted family at n=5 matches orbit counting") {
    // complete 1-skeleton plus any family of triples: 2^10 labeled complexes
    auto family = restricted_family(5);
    CHECK(family.size() == 1024);

    std::set<std::string> keys;
    for (const auto& delta : family)
        keys.insert(canonicalize(bier_complex(delta, 5).complex).key());

    // orbit count of triple-families under S_5, by direct enumeration
    std::vector<Mask> triples;
    for (Mask s = 0; s <= full_mask(5); ++s)
        if (card(s) == 3) triples.push_back(s);
    std::array<int, 32> triple_index{};
    for (std::size_t i = 0; i < triples.size(); ++i) triple_index[triples[i]] = static_cast<int>(i);

    std::array<int, 5> perm{0, 1, 2, 3, 4};
    long long fixed_total = 0;
    long long perm_count = 0;
    std::sort(perm.begin(), perm.end());
    do {
        ++perm_count;
        // cycles of the induced action on triples
        std::array<int, 10> image{};
        for (std::size_t i = 0; i < triples.size(); ++i) {
            Mask img = 0;
            for (int v : mask_elems(triples[i])) img |= elem_bit(perm[v - 1] + 1);
            image[i] = triple_index[img];
        }
        std::array<char, 10> visited{};
        int cycles = 0;
        for (int i = 0; i < 10; ++i) {
            if (visited[i]) continue;
            ++cycles;
            for (int j = i; !visited[j]; j = image[j]) visited[j] = 1;
        }
        fixed_total += 1LL << cycles;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(perm_count == 120);
    long long orbits = fixed_total / 120;

    CHECK(static_cast<long long>(keys.size()) == orbits);
}

TEST_CASE("random complexes") {
    CHECK(random_complex(5, 42, 0.0).empty_only());

    auto top = random_complex(4, 7, 1.0);
    std::set<Mask> expect;
    for (int v = 1; v <= 4; ++v) expect.insert(full_mask(4) & ~elem_bit(v));
    CHECK(std::set<Mask>(top.facets().begin(), top.facets().end()) == expect);

    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        auto a = random_complex(6, seed, 0.5);
        auto b = random_complex(6, seed, 0.5);
        CHECK(a.facets() == b.facets());
        CHECK_FALSE(a.contains(full_mask(6))); // always proper
        CHECK(a.contains(0));
    }
    CHECK(random_complex(6, 1, 0.5).facets() != random_complex(6, 2, 0.5).facets());
}
