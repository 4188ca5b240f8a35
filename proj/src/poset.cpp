#include "bier/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "bier/error.hpp"

namespace bier {

namespace {
constexpr int kMaxElements = 4096; // dense bit-matrix budget
} // namespace

void Poset::finish() {
    m_ = static_cast<int>(labels_.size());
    words_ = (m_ + 63) / 64;

    geq_.assign(static_cast<std::size_t>(m_) * words_, 0);
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b)
            if (leq(a, b)) geq_[b * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);

    // Unique minimum and maximum.
    bottom_ = top_ = -1;
    for (int e = 0; e < m_; ++e) {
        int below_all = 1, above_all = 1;
        for (int o = 0; o < m_; ++o) {
            below_all &= static_cast<int>(leq(e, o));
            above_all &= static_cast<int>(leq(o, e));
        }
        if (below_all) {
            if (bottom_ != -1) fail("NotBounded", "two minimum candidates");
            bottom_ = e;
        }
        if (above_all) {
            if (top_ != -1) fail("NotBounded", "two maximum candidates");
            top_ = e;
        }
    }
    if (bottom_ == -1) fail("NotBounded", "no unique minimum");
    if (top_ == -1) fail("NotBounded", "no unique maximum");

    // True covers: a <. b iff [a,b] = {a,b}.
    covers_.clear();
    up_adj_.assign(m_, {});
    down_adj_.assign(m_, {});
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b) {
            if (a == b || !leq(a, b)) continue;
            int count = 0;
            for (int w = 0; w < words_; ++w)
                count += std::popcount(leq_[a * words_ + w] & geq_[b * words_ + w]);
            if (count == 2) {
                covers_.emplace_back(a, b);
                up_adj_[a].push_back(b);
                down_adj_[b].push_back(a);
            }
        }
    std::sort(covers_.begin(), covers_.end());

    // Longest chain from bottom, DP along a linear extension by below-count.
    std::vector<int> order(m_), below(m_);
    for (int e = 0; e < m_; ++e) {
        int cnt = 0;
        for (int w = 0; w < words_; ++w) cnt += std::popcount(geq_[e * words_ + w]);
        below[e] = cnt;
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return below[a] != below[b] ? below[a] < below[b] : a < b;
    });
    height_.assign(m_, 0);
    for (int e : order)
        for (int u : down_adj_[e]) height_[e] = std::max(height_[e], height_[u] + 1);
    length_ = height_[top_];
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& covers) {
    const int m = static_cast<int>(labels.size());
    if (m == 0) fail("BadParameter", "empty element list");
    if (m > kMaxElements) fail("TooLarge", "more than 4096 elements");

    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : covers) {
        if (a < 0 || b < 0 || a >= m || b >= m || a == b)
            fail("BadParameter", "cover pair out of range");
        edges.insert({a, b});
    }
    std::vector<std::vector<int>> up(m);
    std::vector<int> indeg(m, 0);
    for (auto [a, b] : edges) {
        up[a].push_back(b);
        ++indeg[b];
    }

    // Kahn: topological order, cycle detection.
    std::vector<int> topo;
    std::vector<int> deg = indeg;
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int e = 0; e < m; ++e)
        if (deg[e] == 0) ready.push(e);
    while (!ready.empty()) {
        int e = ready.top();
        ready.pop();
        topo.push_back(e);
        for (int w : up[e])
            if (--deg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(topo.size()) != m) fail("CyclicCovers", "cover relation has a cycle");

    Poset p;
    p.labels_ = std::move(labels);
    p.m_ = m;
    p.words_ = (m + 63) / 64;
    p.leq_.assign(static_cast<std::size_t>(m) * p.words_, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int e = *it;
        auto* row = &p.leq_[e * p.words_];
        row[e >> 6] |= std::uint64_t{1} << (e & 63);
        for (int w : up[e]) {
            const auto* wrow = &p.leq_[w * p.words_];
            for (int i = 0; i < p.words_; ++i) row[i] |= wrow[i];
        }
    }
    p.finish();
    return p;
}

Poset Poset::from_relation(std::vector<std::string> labels,
                           const std::function<bool(int, int)>& rel) {
    const int m = static_cast<int>(labels.size());
    if (m == 0) fail("BadParameter", "empty element list");
    if (m > kMaxElements) fail("TooLarge", "more than 4096 elements");

    Poset p;
    p.labels_ = std::move(labels);
    p.m_ = m;
    p.words_ = (m + 63) / 64;
    p.leq_.assign(static_cast<std::size_t>(m) * p.words_, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (rel(a, b)) p.leq_[a * p.words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);

    for (int a = 0; a < m; ++a) {
        if (!p.leq(a, a)) fail("BadParameter", "relation is not reflexive");
        for (int b = a + 1; b < m; ++b)
            if (p.leq(a, b) && p.leq(b, a)) fail("BadParameter", "relation is not antisymmetric");
    }
    if (m <= 2048) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                if (!p.leq(a, b)) continue;
                // row(b) must be contained in row(a)
                for (int w = 0; w < p.words_; ++w)
                    if (p.leq_[b * p.words_ + w] & ~p.leq_[a * p.words_ + w])
                        fail("BadParameter", "relation is not transitive");
            }
    }
    p.finish();
    return p;
}

std::vector<int> Poset::proper_elements() const {
    std::vector<int> out;
    for (int e = 0; e < m_; ++e)
        if (e != bottom_ && e != top_) out.push_back(e);
    return out;
}

std::vector<int> Poset::interval_elements(int x, int y) const {
    if (!leq(x, y)) fail("BadParameter", "interval bounds are not comparable");
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = leq_[x * words_ + w] & geq_[y * words_ + w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

int Poset::interval_length(int x, int y) const {
    auto elems = interval_elements(x, y);
    std::sort(elems.begin(), elems.end(),
              [&](int a, int b) { return height_[a] != height_[b] ? height_[a] < height_[b] : a < b; });
    std::vector<int> lp(m_, -1);
    lp[x] = 0;
    for (int e : elems) {
        if (e == x) continue;
        for (int u : down_adj_[e])
            if (leq(x, u) && lp[u] >= 0) lp[e] = std::max(lp[e], lp[u] + 1);
    }
    return lp[y];
}

namespace {
// Greatest lower bound if it exists, else -1.
int bound_impl(const Poset& p, int a, int b, bool lower) {
    std::vector<int> bounds;
    for (int e = 0; e < p.size(); ++e) {
        bool in = lower ? (p.leq(e, a) && p.leq(e, b)) : (p.leq(a, e) && p.leq(b, e));
        if (in) bounds.push_back(e);
    }
    for (int c : bounds) {
        bool extreme = true;
        for (int o : bounds) {
            bool ok = lower ? p.leq(o, c) : p.leq(c, o);
            if (!ok) {
                extreme = false;
                break;
            }
        }
        if (extreme) return c;
    }
    return -1;
}
} // namespace

bool Poset::is_lattice() const {
    for (int a = 0; a < m_; ++a)
        for (int b = a + 1; b < m_; ++b)
            if (bound_impl(*this, a, b, true) == -1) return false;
    return true;
}

int Poset::meet(int a, int b) const {
    int c = bound_impl(*this, a, b, true);
    if (c == -1) fail("NotALattice", "no meet for " + labels_[a] + ", " + labels_[b]);
    return c;
}

int Poset::join(int a, int b) const {
    int c = bound_impl(*this, a, b, false);
    if (c == -1) fail("NotALattice", "no join for " + labels_[a] + ", " + labels_[b]);
    return c;
}

Poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<int, int>>& covers) {
    return Poset::from_covers(std::move(labels), covers);
}

Poset boolean_lattice(int n) {
    if (n < 1) fail("BadParameter", "boolean lattice needs n >= 1");
    if (n > 12) fail("TooLarge", "boolean lattice beyond 2^12 elements");
    const int m = 1 << n;
    std::vector<std::string> labels(m);
    for (int s = 0; s < m; ++s) labels[s] = mask_to_string(static_cast<Mask>(s));
    return Poset::from_relation(std::move(labels), [](int a, int b) { return (a & ~b) == 0; });
}

Poset polygon_lattice(int m) {
    if (m < 3) fail("BadParameter", "polygon needs at least 3 vertices");
    if (2 * m + 2 > kMaxElements) fail("TooLarge", "polygon too large");
    std::vector<std::string> labels;
    labels.push_back("0^");
    for (int i = 1; i <= m; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 1; i <= m; ++i) labels.push_back("e" + std::to_string(i));
    labels.push_back("1^");
    const int top = 2 * m + 1;
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= m; ++i) covers.emplace_back(0, i);
    for (int i = 1; i <= m; ++i) {
        int edge = m + i;
        covers.emplace_back(i, edge);
        covers.emplace_back(i % m + 1, edge); // edge i joins v_i and v_{i+1}
        covers.emplace_back(edge, top);
    }
    return Poset::from_covers(std::move(labels), covers);
}

Poset opposite(const Poset& p) {
    std::vector<std::string> labels = p.labels();
    return Poset::from_relation(std::move(labels), [&p](int a, int b) { return p.leq(b, a); });
}

Poset product(const Poset& p, const Poset& q) {
    const int mp = p.size(), mq = q.size();
    if (static_cast<long long>(mp) * mq > kMaxElements) fail("TooLarge", "product too large");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(mp) * mq);
    for (int a = 0; a < mp; ++a)
        for (int b = 0; b < mq; ++b) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
    return Poset::from_relation(std::move(labels), [&p, &q, mq](int e, int f) {
        return p.leq(e / mq, f / mq) && q.leq(e % mq, f % mq);
    });
}

Poset induced_interval(const Poset& p, int x, int y) {
    auto elems = p.interval_elements(x, y);
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (int e : elems) labels.push_back(p.label(e));
    return Poset::from_relation(std::move(labels), [&p, &elems](int a, int b) {
        return p.leq(elems[a], elems[b]);
    });
}

bool is_graded(const Poset& p) {
    for (auto [a, b] : p.covers())
        if (p.height()[b] != p.height()[a] + 1) return false;
    return true;
}

std::optional<std::vector<int>> rank_function(const Poset& p) {
    if (!is_graded(p)) return std::nullopt;
    return p.height();
}

bool is_eulerian(const Poset& p) {
    if (!is_graded(p)) fail("NotGraded", "Eulerian condition needs a graded poset");
    const auto& rank = p.height();
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (!p.lt(x, y)) continue;
            int balance = 0;
            for (int z : p.interval_elements(x, y)) balance += (rank[z] & 1) ? 1 : -1;
            if (balance != 0) return false;
        }
    return true;
}

bool is_ideal(const Poset& p, const std::vector<int>& members) {
    std::vector<char> in(p.size(), 0);
    for (int e : members) {
        if (e < 0 || e >= p.size()) fail("BadParameter", "ideal member out of range");
        in[e] = 1;
    }
    for (int e = 0; e < p.size(); ++e) {
        if (!in[e]) continue;
        for (int o = 0; o < p.size(); ++o)
            if (p.leq(o, e) && !in[o]) return false;
    }
    return true;
}

bool is_proper_ideal(const Poset& p, const std::vector<int>& members) {
    if (!is_ideal(p, members)) return false;
    std::vector<char> in(p.size(), 0);
    for (int e : members) in[e] = 1;
    return in[p.bottom()] && !in[p.top()];
}

SimplicialComplex order_complex(const Poset& p) {
    if (p.length() < 1) fail("BadParameter", "order complex needs length >= 1");
    auto proper = p.proper_elements();
    if (proper.size() > 64) fail("TooLarge", "proper part exceeds 64 vertices");
    if (proper.empty())
        return SimplicialComplex::from_facets({}, {Mask{0}});

    std::vector<int> vertex_of(p.size(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < proper.size(); ++i) {
        vertex_of[proper[i]] = static_cast<int>(i);
        labels.push_back(p.label(proper[i]));
    }

    // Maximal chains of the proper part = interiors of bottom-top cover paths.
    std::vector<Mask> facets;
    std::vector<int> path;
    auto dfs = [&](auto&& self, int e) -> void {
        if (e == p.top()) {
            Mask f = 0;
            for (int v : path) f |= Mask{1} << vertex_of[v];
            facets.push_back(f);
            return;
        }
        for (int w : p.upper_covers()[e]) {
            if (w != p.top()) path.push_back(w);
            self(self, w);
            if (w != p.top()) path.pop_back();
        }
    };
    dfs(dfs, p.bottom());
    return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

std::vector<long long> rank_counts(const Poset& p) {
    std::vector<long long> f(p.length() + 1, 0);
    for (int e = 0; e < p.size(); ++e) ++f[p.height()[e]];
    return f;
}

} // namespace bier
