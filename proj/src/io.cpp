#include "bier/io.hpp"

#include <fstream>
#include <sstream>

#include "bier/error.hpp"
#include "json.hpp"

namespace bier {

namespace {
std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("BadParameter", "cannot open " + path);
    return in;
}
} // namespace

SimplicialComplex read_complex(std::istream& in) {
    std::vector<Mask> facets;
    std::optional<int> header_n;
    int max_vertex = 0;
    std::string line;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("n=", 0) == 0) {
            int n = 0;
            try {
                n = std::stoi(line.substr(2));
            } catch (const std::exception&) {
                fail("BadParameter", "bad header line: " + line);
            }
            if (n < 0 || n > 64) fail("TooLarge", "universe must have 0..64 vertices");
            header_n = n;
            continue;
        }
        if (line == ".") {
            facets.push_back(0);
            continue;
        }
        std::istringstream ls(line);
        Mask f = 0;
        long long v;
        while (ls >> v) {
            if (v < 1 || v > 64) fail("VertexOutOfUniverse", "vertex " + std::to_string(v));
            f |= elem_bit(static_cast<int>(v));
            max_vertex = std::max<int>(max_vertex, static_cast<int>(v));
        }
        if (!ls.eof()) fail("BadParameter", "bad facet line: " + line);
        facets.push_back(f);
    }
    int n = header_n.value_or(max_vertex);
    if (max_vertex > n) fail("VertexOutOfUniverse", "vertex beyond the declared universe");
    return complex_on_ground(n, std::move(facets));
}

SimplicialComplex read_complex_file(const std::string& path) {
    auto in = open_or_fail(path);
    return read_complex(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& k) {
    out << "n=" << k.universe_size() << "\n";
    for (Mask f : k.facets()) {
        if (f == 0) {
            out << ".\n";
            continue;
        }
        bool first = true;
        for (int v : mask_elems(f)) {
            if (!first) out << " ";
            out << v;
            first = false;
        }
        out << "\n";
    }
}

Poset read_poset_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("BadParameter", std::string("bad poset JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array() ||
        !j.contains("covers") || !j["covers"].is_array())
        fail("BadParameter", "poset JSON needs \"elements\" and \"covers\"");
    std::vector<std::string> labels;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) fail("BadParameter", "element labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer())
            fail("BadParameter", "covers must be [i,j] index pairs");
        covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return build_poset(std::move(labels), covers);
}

Poset read_poset_json_file(const std::string& path) {
    auto in = open_or_fail(path);
    return read_poset_json(in);
}

void write_poset_json(std::ostream& out, const Poset& p) {
    nlohmann::ordered_json j;
    j["elements"] = p.labels();
    j["covers"] = nlohmann::ordered_json::array();
    for (auto [a, b] : p.covers()) j["covers"].push_back({a, b});
    out << j.dump(2) << "\n";
}

std::vector<int> read_ideal_json(std::istream& in, const Poset& host) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("BadParameter", std::string("bad ideal JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("members") || !j["members"].is_array())
        fail("BadParameter", "ideal JSON needs a \"members\" index array");
    std::vector<int> members;
    for (const auto& m : j["members"]) {
        if (!m.is_number_integer()) fail("BadParameter", "members must be element indices");
        int e = m.get<int>();
        if (e < 0 || e >= host.size()) fail("BadParameter", "member index out of range");
        members.push_back(e);
    }
    return members;
}

std::vector<int> read_ideal_json_file(const std::string& path, const Poset& host) {
    auto in = open_or_fail(path);
    return read_ideal_json(in, host);
}

SimplicialComplex to_numeric_bier_labels(const SimplicialComplex& k, int n) {
    std::vector<Mask> facets;
    facets.reserve(k.facets().size());
    for (Mask f : k.facets()) {
        Mask out = 0;
        for (int i : mask_elems(f)) {
            const std::string& l = k.universe()[i - 1];
            int v = std::stoi(l.substr(0, l.size() - 1));
            out |= elem_bit(l.back() == '-' ? 2 * v - 1 : 2 * v);
        }
        facets.push_back(out);
    }
    return complex_on_ground(2 * n, std::move(facets));
}

} // namespace bier
