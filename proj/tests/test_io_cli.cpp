#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "bier/bier_sphere.hpp"
#include "bier/error.hpp"
#include "bier/io.hpp"

using namespace bier;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("bier-test-" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = dir / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(BIER_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("complex file round trip") {
    std::istringstream in("# comment\nn=4\n1 2\n3\n");
    auto k = read_complex(in);
    CHECK(k.universe_size() == 4);
    CHECK(k.facets() == std::vector<Mask>{0b100, 0b011});

    std::ostringstream out;
    write_complex(out, k);
    std::istringstream back(out.str());
    CHECK(read_complex(back).facets() == k.facets());

    std::istringstream dot(".\n");
    CHECK(read_complex(dot).empty_only());

    std::istringstream empty("");
    CHECK(read_complex(empty).is_void());

    std::istringstream bad("n=3\n1 5\n");
    CHECK_THROWS_AS(read_complex(bad), Error);
}

TEST_CASE("poset and ideal json") {
    std::istringstream in(R"({"elements": ["0", "a", "1"], "covers": [[0,1],[1,2]]})");
    Poset p = read_poset_json(in);
    CHECK(p.length() == 2);

    std::ostringstream out;
    write_poset_json(out, p);
    std::istringstream back(out.str());
    Poset q = read_poset_json(back);
    CHECK(q.size() == p.size());
    CHECK(q.covers() == p.covers());

    std::istringstream ideal(R"({"members": [0, 1]})");
    auto members = read_ideal_json(ideal, p);
    CHECK(members == std::vector<int>{0, 1});

    std::istringstream bad(R"({"members": [9]})");
    CHECK_THROWS_AS(read_ideal_json(bad, p), Error);
}

TEST_CASE("numeric relabeling of Bier spheres") {
    auto s = bier_complex(complex_on_ground(3, {1, 2, 4}), 3);
    auto numeric = to_numeric_bier_labels(s.complex, 3);
    CHECK(numeric.universe_size() == 6);
    FVector f = f_vector(numeric, 6);
    CHECK(f[1] == 6);
    CHECK(f[2] == 6);
    // antipodes 2v-1, 2v are never edges
    for (int v = 1; v <= 3; ++v)
        CHECK_FALSE(numeric.contains(elem_bit(2 * v - 1) | elem_bit(2 * v)));
}

TEST_CASE("cli gvec reproduces the worked values") {
    TempDir tmp;
    auto delta = tmp.file("delta.txt", "1\n2\n3\n");
    auto res = run_cli("gvec " + delta + " -n 4");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "f(Bier): (1, 7, 15, 10)"));
    CHECK(contains(res.output, "g(theorem): (1, 3)"));
    CHECK(contains(res.output, "check k-sequence: PASS"));
    CHECK(contains(res.output, "result: OK"));

    auto js = run_cli("--json gvec " + delta + " -n 4");
    CHECK(js.exit_code == 0);
    CHECK(contains(js.output, "\"ok\": true"));
}

TEST_CASE("cli shell output") {
    TempDir tmp;
    auto delta = tmp.file("delta.txt", "1\n2\n3\n");
    auto res = run_cli("shell " + delta + " -n 3");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "step[0]: 1 | 2"));
    CHECK(contains(res.output, "h-from-restrictions: (1, 4, 1)"));
    CHECK(contains(res.output, "check chi-lex-order-shells: PASS"));
}

TEST_CASE("cli guards") {
    TempDir tmp;
    auto delta = tmp.file("delta.txt", "1\n2\n3\n");
    CHECK(run_cli("bier " + delta + " -n 9000").exit_code == 2);
    CHECK(run_cli("bier missing.txt -n 3").exit_code == 2);
    CHECK(run_cli("realize \"1,2,4\" -n 9").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli bier output feeds fvec") {
    TempDir tmp;
    auto delta = tmp.file("delta.txt", "1\n2\n3\n");
    auto out = tmp.path("sphere.txt");
    auto res = run_cli("bier " + delta + " -n 4 -o " + out);
    CHECK(res.exit_code == 0);
    auto fv = run_cli("fvec " + out + " -n 4");
    CHECK(fv.exit_code == 0);
    CHECK(contains(fv.output, "f: (1, 7, 15, 10, 0)"));
    CHECK(contains(fv.output, "h: (1, 4, 4, 1)"));
}

TEST_CASE("cli flip and neighborly") {
    TempDir tmp;
    auto delta = tmp.file("delta.txt", "1\n2\n3\n");
    auto res = run_cli("flip " + delta + " -n 3 --face \"1 2\"");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "check flip-matches-extended-bier: PASS"));
    CHECK(contains(res.output, "g-after: (1, 2)"));

    auto pairs = tmp.file("pairs.txt", "1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n");
    auto nb = run_cli("neighborly " + pairs + " -n 5 -k 2");
    CHECK(nb.exit_code == 0);
    CHECK(contains(nb.output, "centrally-symmetric: yes"));
    CHECK(contains(nb.output, "k-nearly-neighborly: yes"));
}

TEST_CASE("cli enumerate and realize") {
    auto res = run_cli("enumerate -n 3 --count-iso");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "isomorphism-classes: 4"));

    auto sharded = run_cli("enumerate -n 4 --shards 4");
    CHECK(sharded.exit_code == 0);
    CHECK(contains(sharded.output, "proper-ideals: 166"));

    auto suite = run_cli("enumerate -n 3 --suite gtheorem");
    CHECK(suite.exit_code == 0);
    CHECK(contains(suite.output, "check suite-clean: PASS"));

    TempDir tmp;
    auto out = tmp.path("realized.txt");
    auto realize = run_cli("realize \"1,3\" -n 4 -o " + out);
    CHECK(realize.exit_code == 0);
    CHECK(contains(realize.output, "g(Bier): (1, 3)"));
    auto gv = run_cli("gvec " + out + " -n 4");
    CHECK(gv.exit_code == 0);
    CHECK(contains(gv.output, "g(theorem): (1, 3)"));
}

TEST_CASE("cli subdivide-verify and verify") {
    TempDir tmp;
    // B_2 as a poset file, ideal {0, {1}}
    auto poset = tmp.file("b2.json",
                          R"({"elements": ["{}", "{1}", "{2}", "{1,2}"],)"
                          R"( "covers": [[0,1],[0,2],[1,3],[2,3]]})");
    auto ideal = tmp.file("ideal.json", R"({"members": [0, 1]})");
    auto res = run_cli("subdivide-verify " + poset + " " + ideal);
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "check complexes-equal: PASS"));

    auto delta = tmp.file("delta.txt", "1\n2\n3\n");
    auto ver = run_cli("verify " + delta + " -n 3");
    CHECK(ver.exit_code == 0);
    CHECK(contains(ver.output, "check face-poset-eulerian: PASS"));
    CHECK(contains(ver.output, "check sphere.gf2-homology: PASS"));
}
