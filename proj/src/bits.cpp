#include "bier/bits.hpp"

#include <array>

#include "bier/error.hpp"

namespace bier {

std::vector<int> mask_elems(Mask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

std::string mask_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int v : mask_elems(m)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

namespace {
struct BinomialTable {
    std::array<std::array<long long, 66>, 66> c{};
    BinomialTable() {
        for (int n = 0; n < 66; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};
const BinomialTable kBinomial;
} // namespace

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n > 64) fail("BadParameter", "binomial beyond the 64-element cap");
    return kBinomial.c[n][k];
}

} // namespace bier
