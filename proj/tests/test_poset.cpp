#include "doctest.h"

#include <algorithm>
#include <functional>

#include "bier/error.hpp"
#include "bier/poset.hpp"

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

TEST_CASE("build_poset from covers") {
    Poset chain = build_poset({"0^", "a", "1^"}, {{0, 1}, {1, 2}});
    CHECK(chain.length() == 2);
    CHECK(chain.bottom() == 0);
    CHECK(chain.top() == 2);
    CHECK(chain.leq(0, 2));
    CHECK_FALSE(chain.leq(2, 0));

    Poset b2 = build_poset({"{}", "{1}", "{2}", "{1,2}"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(b2.size() == 4);
    CHECK(b2.length() == 2);

    CHECK(error_code([] {
              build_poset({"0", "a", "b"}, {{0, 1}, {0, 2}});
          }) == "NotBounded");
    CHECK(error_code([] {
              build_poset({"a", "b"}, {{0, 1}, {1, 0}});
          }) == "CyclicCovers");
}

TEST_CASE("transitive closure of covers equals leq") {
    Poset p = polygon_lattice(5);
    // every cover pair is a strict relation and the closure has no extra covers
    for (auto [a, b] : p.covers()) {
        CHECK(p.lt(a, b));
        CHECK(p.interval_elements(a, b).size() == 2);
    }
    // reachability along covers reproduces leq
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            if (!p.lt(a, b)) continue;
            bool step = false;
            for (auto [u, v] : p.covers())
                if (u == a && p.leq(v, b)) step = true;
            CHECK(step);
        }
}

TEST_CASE("standard posets") {
    Poset b3 = boolean_lattice(3);
    CHECK(b3.size() == 8);
    CHECK(b3.length() == 3);

    Poset sq = polygon_lattice(4);
    CHECK(sq.size() == 10);
    CHECK(sq.length() == 3);

    CHECK(error_code([] { polygon_lattice(2); }) == "BadParameter");
    CHECK(error_code([] { boolean_lattice(0); }) == "BadParameter");

    // opposite(B_2) is B_2 under complementation
    Poset b2 = boolean_lattice(2);
    Poset op = opposite(b2);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(op.leq(a, b) == b2.leq(3 - a, 3 - b));

    Poset prod = product(boolean_lattice(1), boolean_lattice(1));
    CHECK(prod.size() == 4);
    CHECK(prod.length() == 2);
    CHECK(is_eulerian(prod));
}

TEST_CASE("gradedness and rank") {
    auto r3 = rank_function(boolean_lattice(3));
    REQUIRE(r3.has_value());
    for (int s = 0; s < 8; ++s) CHECK((*r3)[s] == card(static_cast<Mask>(s)));

    // maximal chains of lengths 2 and 3
    Poset mixed = build_poset({"0", "a", "b", "c", "1"},
                              {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    CHECK_FALSE(is_graded(mixed));
    CHECK_FALSE(rank_function(mixed).has_value());
    CHECK(error_code([&] { is_eulerian(mixed); }) == "NotGraded");

    auto rp = rank_function(polygon_lattice(5));
    REQUIRE(rp.has_value());
    CHECK(*std::max_element(rp->begin(), rp->end()) == 3);

    // rank(x) + rank-in-opposite(x) = length
    Poset p = polygon_lattice(4);
    Poset op = opposite(p);
    auto r = rank_function(p);
    auto ro = rank_function(op);
    REQUIRE(r);
    REQUIRE(ro);
    for (int e = 0; e < p.size(); ++e) CHECK((*r)[e] + (*ro)[e] == p.length());
}

TEST_CASE("Eulerian posets") {
    CHECK(is_eulerian(boolean_lattice(4)));
    CHECK(is_eulerian(polygon_lattice(4)));

    // the 3-chain has a length-2 interval with three elements: unbalanced
    Poset chain = build_poset({"0^", "a", "1^"}, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_eulerian(chain));

    // four-element chain fails inside [0,b] as well
    Poset chain4 = build_poset({"0", "a", "b", "1"}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(is_eulerian(chain4));

    // two atoms below the top form a copy of B_2, which is Eulerian
    Poset diamond = build_poset({"0^", "a", "b", "1^"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(is_eulerian(diamond));

    for (int n = 1; n <= 6; ++n) CHECK(is_eulerian(boolean_lattice(n)));
}

TEST_CASE("ideals") {
    Poset b3 = boolean_lattice(3); // element index = subset mask
    CHECK(is_ideal(b3, {0, 1}));
    CHECK_FALSE(is_ideal(b3, {1}));
    std::vector<int> all;
    for (int s = 0; s < 8; ++s) all.push_back(s);
    CHECK(is_ideal(b3, all));
    CHECK_FALSE(is_proper_ideal(b3, all));
    CHECK(is_proper_ideal(b3, {0, 1, 2, 4}));
    CHECK_FALSE(is_proper_ideal(b3, {}));
}

TEST_CASE("order complexes") {
    SimplicialComplex s0 = order_complex(boolean_lattice(2));
    CHECK(f_vector(s0, 2) == FVector{1, 2, 0});

    SimplicialComplex hex = order_complex(boolean_lattice(3));
    CHECK(f_vector(hex, 3) == FVector{1, 6, 6, 0});
    CHECK(hex.is_pure());

    Poset chain = build_poset({"0^", "a", "1^"}, {{0, 1}, {1, 2}});
    SimplicialComplex pt = order_complex(chain);
    CHECK(f_vector(pt, 1) == FVector{1, 1});

    // proper part empty: the (-1)-sphere
    Poset two = build_poset({"0^", "1^"}, {{0, 1}});
    CHECK(order_complex(two).empty_only());

    // order complex is pure iff the poset is graded
    Poset mixed = build_poset({"0", "a", "b", "c", "1"},
                              {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    CHECK_FALSE(order_complex(mixed).is_pure());
    CHECK(order_complex(polygon_lattice(6)).is_pure());
}

TEST_CASE("lattice operations") {
    Poset b3 = boolean_lattice(3);
    CHECK(b3.is_lattice());
    CHECK(b3.meet(3, 6) == 2); // {1,2} ^ {2,3} = {2}
    CHECK(b3.join(1, 4) == 5); // {1} v {3} = {1,3}

    // two incomparable middle elements with two upper bounds: not a lattice
    Poset nolat = build_poset({"0", "a", "b", "x", "y", "1"},
                              {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}});
    CHECK_FALSE(nolat.is_lattice());
    CHECK(error_code([&] { nolat.join(1, 2); }) == "NotALattice");
}

TEST_CASE("interval machinery") {
    Poset b4 = boolean_lattice(4);
    CHECK(b4.interval_length(0, 15) == 4);
    CHECK(b4.interval_length(1, 11) == 2); // [{1},{1,2,4}]
    CHECK(b4.interval_elements(1, 3).size() == 2);

    Poset sub = induced_interval(b4, 1, 11);
    CHECK(sub.size() == 4);
    CHECK(sub.length() == 2);
    CHECK(is_eulerian(sub));
}
