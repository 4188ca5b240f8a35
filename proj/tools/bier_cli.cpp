// Command-line front end: f/h/g vectors, Bier spheres and posets, duals,
// shellings, subdivision and sphere verification, enumeration suites.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bier/bier_poset.hpp"
#include "bier/bier_sphere.hpp"
#include "bier/enumerate.hpp"
#include "bier/error.hpp"
#include "bier/io.hpp"

namespace {

using namespace bier;

struct Out {
    bool json = false;
    int emit(const Report& rep) const {
        if (json)
            std::cout << rep.to_json() << "\n";
        else
            rep.print_text(std::cout);
        return rep.ok() ? 0 : 1;
    }
};

int g_exit = 0;

void guard_n(int n) {
    if (n < 1 || n > 32) fail("BadParameter", "need 1 <= n <= 32");
}

SimplicialComplex load_delta(const std::string& path, int n) {
    guard_n(n);
    SimplicialComplex k = read_complex_file(path);
    if (k.universe_size() > n) fail("BadParameter", "complex universe exceeds -n");
    return k;
}

void write_output(const std::string& path, const SimplicialComplex& k) {
    std::ofstream out(path);
    if (!out) fail("BadParameter", "cannot write " + path);
    write_complex(out, k);
}

std::string trim_to_sphere(const FVector& f, int n) {
    FVector head(f.begin(), f.begin() + n);
    return seq_to_string(head);
}

FVector parse_sequence(const std::string& text) {
    FVector seq;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',' || c == '(' || c == ')') c = ' ';
    std::istringstream in(cleaned);
    long long v;
    while (in >> v) seq.push_back(v);
    if (!in.eof() || seq.empty()) fail("BadParameter", "bad sequence: " + text);
    return seq;
}

Mask parse_face(const std::string& text) {
    Mask f = 0;
    if (text == "-") return f;
    std::istringstream in(text);
    long long v;
    while (in >> v) {
        if (v < 1 || v > 64) fail("VertexOutOfUniverse", "vertex " + std::to_string(v));
        f |= elem_bit(static_cast<int>(v));
    }
    if (!in.eof()) fail("BadParameter", "bad face: " + text);
    return f;
}

void cmd_fvec(const std::string& file, int n_opt, const Out& out) {
    SimplicialComplex k = read_complex_file(file);
    int n = n_opt > 0 ? n_opt : k.universe_size();
    guard_n(n);
    Report rep;
    rep.command = "fvec";
    rep.value("n", std::to_string(n));
    FVector f = f_vector(k, n);
    FVector h = h_from_f(f, n);
    rep.value("f", seq_to_string(f));
    rep.value("h", seq_to_string(h));
    rep.value("g", seq_to_string(g_from_h(h)));
    rep.check("f-h-roundtrip", f_from_h(h, n) == f);
    g_exit = out.emit(rep);
}

void cmd_bier(const std::string& file, int n, const std::string& out_path, const Out& out) {
    BierSphere s = bier_complex(load_delta(file, n), n);
    Report rep;
    rep.command = "bier";
    rep.value("n", std::to_string(n));
    rep.value("facet-count", std::to_string(s.facets.size()));
    rep.value("vertex-count", std::to_string(card(s.complex.vertex_set())));
    for (std::size_t i = 0; i < s.facets.size(); ++i)
        rep.value("facet[" + std::to_string(i) + "]", facet_to_string(s.facets[i]));
    std::ostringstream labeled;
    for (Mask f : s.complex.facets()) {
        bool first = true;
        for (int v : mask_elems(f)) {
            if (!first) labeled << " ";
            labeled << s.complex.universe()[v - 1];
            first = false;
        }
        labeled << "; ";
    }
    rep.value("complex-facets", labeled.str());
    SimplicialComplex numeric = to_numeric_bier_labels(s.complex, n);
    if (!out_path.empty()) {
        write_output(out_path, numeric);
        rep.value("written", out_path);
    } else {
        std::ostringstream block;
        write_complex(block, numeric);
        rep.value("complex-file", "\n" + block.str());
    }
    g_exit = out.emit(rep);
}

void cmd_bier_poset(const std::string& poset_file, const std::string& ideal_file,
                    const std::string& out_path, const Out& out) {
    Poset p = read_poset_json_file(poset_file);
    auto members = read_ideal_json_file(ideal_file, p);
    BierPoset b = bier_poset(p, members);
    Report rep;
    rep.command = "bier-poset";
    rep.value("input-length", std::to_string(p.length()));
    rep.value("bier-length", std::to_string(b.poset.length()));
    rep.value("bier-size", std::to_string(b.poset.size()));
    rep.check("length-preserved", b.poset.length() == p.length());
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) fail("BadParameter", "cannot write " + out_path);
        write_poset_json(f, b.poset);
        rep.value("written", out_path);
    } else {
        std::ostringstream block;
        write_poset_json(block, b.poset);
        rep.value("poset-json", "\n" + block.str());
    }
    g_exit = out.emit(rep);
}

void cmd_dual(const std::string& file, int n, const std::string& out_path, const Out& out) {
    SimplicialComplex d = alexander_dual(load_delta(file, n), n);
    Report rep;
    rep.command = "dual";
    rep.value("n", std::to_string(n));
    rep.value("f", seq_to_string(f_vector(d, n)));
    if (!out_path.empty()) {
        write_output(out_path, d);
        rep.value("written", out_path);
    } else {
        std::ostringstream block;
        write_complex(block, d);
        rep.value("complex-file", "\n" + block.str());
    }
    g_exit = out.emit(rep);
}

void cmd_djoin(const std::string& file, int n, const std::string& out_path, const Out& out) {
    SimplicialComplex delta = load_delta(file, n);
    SimplicialComplex dj = deleted_join(delta, alexander_dual(delta, n), n);
    Report rep;
    rep.command = "djoin";
    rep.value("n", std::to_string(n));
    rep.value("f", trim_to_sphere(f_vector(dj, 2 * n), n));
    rep.check("matches-bier-sphere",
              is_isomorphic(dj, bier_complex(delta, n).complex));
    if (!out_path.empty()) {
        // The deleted join of Delta with its dual uses the block numbering
        // v- -> v, v+ -> n+v from its own universe order.
        std::vector<Mask> facets = dj.facets();
        write_output(out_path, complex_on_ground(2 * n, std::move(facets)));
        rep.value("written", out_path);
    }
    g_exit = out.emit(rep);
}

void cmd_shell(const std::string& file, int n, const Out& out) {
    SimplicialComplex delta = load_delta(file, n);
    BierSphere s = bier_complex(delta, n);
    auto order = shelling_order(delta, n);
    Report rep;
    rep.command = "shell";
    rep.value("n", std::to_string(n));
    rep.value("facet-count", std::to_string(order.size()));

    std::vector<Mask> order_faces;
    for (const auto& f : order)
        order_faces.push_back(interval_face(IntervalBC{f.a, f.support()}, n,
                                            s.complex.universe()));
    auto check = is_shelling(s.complex, order_faces);

    FVector h_restr(n, 0);
    for (std::size_t j = 0; j < order.size(); ++j) {
        const auto& f = order[j];
        std::ostringstream line;
        line << facet_to_string(f) << "  chi=" << seq_to_string(chi(f))
             << "  R=" << mask_to_string(restriction(f).b) << ","
             << mask_to_string(restriction(f).c) << "  rank=" << restriction_rank(f);
        rep.value("step[" + std::to_string(j) + "]", line.str());
        ++h_restr[restriction_rank(f)];
    }
    rep.check("chi-lex-order-shells", check.valid,
              check.valid ? "" : "fails at step " + std::to_string(check.fail_step));
    bool restr_match = check.valid;
    if (check.valid)
        for (std::size_t j = 0; j < order.size(); ++j)
            if (check.restrictions[j] !=
                interval_face(restriction(order[j]), n, s.complex.universe()))
                restr_match = false;
    rep.check("restriction-faces-match", restr_match);
    rep.value("h-from-restrictions", seq_to_string(h_restr));
    rep.check("h-agrees-with-complex",
              h_restr == h_from_f(f_vector(s.complex, n), n));
    g_exit = out.emit(rep);
}

void cmd_gvec(const std::string& file, int n, const Out& out) {
    SimplicialComplex delta = load_delta(file, n);
    Report rep;
    rep.command = "gvec";
    rep.value("n", std::to_string(n));
    FVector f_delta = f_vector(delta, n);
    rep.value("f(Delta)", seq_to_string(f_delta));
    BierSphere s = bier_complex(delta, n);
    FVector f_bier = f_vector(s.complex, n);
    FVector h = h_from_f(f_bier, n);
    rep.value("f(Bier)", trim_to_sphere(f_bier, n));
    rep.value("h(Bier)", seq_to_string(h));
    FVector g_thm = g_bier(delta, n);
    FVector g_h = g_from_h(h);
    FVector g_restr = g_from_h(h_via_restriction(delta, n));
    rep.value("g(theorem)", seq_to_string(g_thm));
    rep.value("g(from-h)", seq_to_string(g_h));
    rep.check("g-agreement", g_thm == g_h && g_thm == g_restr);
    bool ds = true;
    for (int i = 0; i < n; ++i)
        if (h[i] != h[n - 1 - i]) ds = false;
    rep.check("dehn-sommerville", ds);
    rep.check("k-sequence", kk_is_ksequence(g_thm), seq_to_string(g_thm));
    g_exit = out.emit(rep);
}

void cmd_delta_prime(const std::string& file, int n, const std::string& out_path,
                     const Out& out) {
    SimplicialComplex delta = load_delta(file, n);
    SimplicialComplex dp = delta_prime(delta, n);
    Report rep;
    rep.command = "delta-prime";
    rep.value("n", std::to_string(n));
    FVector f = f_vector(delta, n), fp = f_vector(dp, n);
    rep.value("f(Delta)", seq_to_string(f));
    rep.value("f(Delta')", seq_to_string(fp));
    bool subcomplex = true;
    for (Mask face : dp.facets())
        if (!delta.contains(face)) subcomplex = false;
    rep.check("subcomplex", subcomplex);
    bool d_ok = true;
    for (int i = 0; i <= n; ++i) {
        long long want = i <= n / 2 ? f[i] - f[n - i] : 0;
        std::ostringstream line;
        line << "f_" << i << "(Delta') = " << fp[i] << ", f_" << i << " - f_" << (n - i)
             << " = " << (i <= n / 2 ? std::to_string(f[i] - f[n - i]) : std::string("-"));
        rep.value("proof[" + std::to_string(i) + "]", line.str());
        if (fp[i] != want) d_ok = false;
    }
    rep.check("d-vector-realized", d_ok);
    if (!out_path.empty()) {
        write_output(out_path, dp);
        rep.value("written", out_path);
    }
    g_exit = out.emit(rep);
}

void cmd_realize(const std::string& seq_text, int n, const std::string& out_path,
                 const Out& out) {
    guard_n(n);
    FVector seq = parse_sequence(seq_text);
    SimplicialComplex delta = realize_ksequence(seq, n);
    Report rep;
    rep.command = "realize";
    rep.value("n", std::to_string(n));
    rep.value("sequence", seq_to_string(seq));
    rep.value("f(Delta)", seq_to_string(f_vector(delta, n)));
    FVector g = g_bier(delta, n);
    rep.value("g(Bier)", seq_to_string(g));
    bool round = true;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != (i < seq.size() ? seq[i] : 0)) round = false;
    rep.check("g-realizes-sequence", round);
    if (!out_path.empty()) {
        write_output(out_path, delta);
        rep.value("written", out_path);
    } else {
        std::ostringstream block;
        write_complex(block, delta);
        rep.value("complex-file", "\n" + block.str());
    }
    g_exit = out.emit(rep);
}

void cmd_flip(const std::string& file, int n, const std::string& face_text, const Out& out) {
    SimplicialComplex delta = load_delta(file, n);
    Mask g_face = parse_face(face_text);
    auto res = add_face_flip(delta, n, g_face);
    Report rep;
    rep.command = "flip";
    rep.value("n", std::to_string(n));
    rep.value("added-face", mask_to_string(g_face));
    std::string a_labels, b_labels;
    for (const auto& l : res.flip_face) a_labels += l + " ";
    for (const auto& l : res.b_face) b_labels += l + " ";
    rep.value("flip-face-A", a_labels);
    rep.value("B", b_labels);
    rep.value("flip-index", std::to_string(res.flip_index));
    rep.value("g-before", seq_to_string(res.g_before));
    rep.value("g-after", seq_to_string(res.g_after));
    rep.merge(res.verification, "");
    g_exit = out.emit(rep);
}

void cmd_subdivide_verify(const std::string& poset_file, const std::string& ideal_file,
                          const Out& out) {
    Poset p = read_poset_json_file(poset_file);
    auto members = read_ideal_json_file(ideal_file, p);
    Report rep = verify_subdivision_theorem(p, members);
    rep.command = "subdivide-verify";
    g_exit = out.emit(rep);
}

void cmd_verify(const std::string& file, int n, const Out& out) {
    SimplicialComplex delta = load_delta(file, n);
    BierSphere s = bier_complex(delta, n);
    Report rep;
    rep.command = "verify";
    rep.value("n", std::to_string(n));
    rep.merge(sphere_checks(s.complex, n - 2), "sphere.");
    if (n - 2 >= 0) rep.merge(link_homology_checks(s.complex, n - 2), "");

    if (n <= 6) {
        Poset bn = boolean_lattice(n);
        std::vector<int> members;
        for (Mask f : delta.faces()) members.push_back(static_cast<int>(f));
        BierPoset bp = bier_poset(bn, members);
        rep.check("face-poset-eulerian", is_eulerian(bp.poset));
        auto counts = rank_counts(bp.poset);
        long long alt = 0;
        for (int i = 0; i <= bp.poset.length(); ++i)
            alt += ((bp.poset.length() - i) % 2 == 0 ? 1 : -1) * counts[i];
        rep.value("f(face-poset)", seq_to_string(counts));
        rep.check("alternating-f-sum-zero", alt == 0, "sum = " + std::to_string(alt));
    }
    g_exit = out.emit(rep);
}

void cmd_neighborly(const std::string& file, int n, int k, const Out& out) {
    SimplicialComplex delta = load_delta(file, n);
    std::optional<int> kk;
    if (k > 0) kk = k;
    auto res = symmetry_checks(delta, n, kk);
    Report rep;
    rep.command = "neighborly";
    rep.value("n", std::to_string(n));
    if (kk) rep.value("k", std::to_string(*kk));
    rep.value("centrally-symmetric", res.centrally_symmetric ? "yes" : "no");
    rep.value("pairing-ok", res.pairing_ok ? "yes" : "no");
    if (res.k_nearly_neighborly)
        rep.value("k-nearly-neighborly", *res.k_nearly_neighborly ? "yes" : "no");
    g_exit = out.emit(rep);
}

void cmd_enumerate(int n, bool count_iso, const std::string& mode, const std::string& suite,
                   int shards, const Out& out) {
    if (shards < 1 || shards > 64) fail("BadParameter", "shards must be 1..64");
    Report rep;
    rep.command = "enumerate";
    rep.value("n", std::to_string(n));
    rep.value("shards", std::to_string(shards));

    if (count_iso) {
        IsoMode m = IsoMode::Exhaustive;
        if (mode == "restricted")
            m = IsoMode::Restricted;
        else if (mode == "cs")
            m = IsoMode::CentrallySymmetric;
        else if (!mode.empty() && mode != "exhaustive")
            fail("BadParameter", "mode must be exhaustive, restricted, or cs");
        rep.value("isomorphism-classes", std::to_string(count_bier_isoclasses(n, m, shards)));
        g_exit = out.emit(rep);
        return;
    }

    if (suite.empty()) {
        if (n < 1 || n > 6) fail("TooLarge", "exhaustive enumeration capped at n = 6");
        rep.value("proper-ideals", std::to_string(count_proper_ideals(boolean_lattice(n), shards)));
        g_exit = out.emit(rep);
        return;
    }

    if (n < 1 || n > 5) fail("TooLarge", "suites run at n <= 5");
    long long total = 0, failures = 0;
    std::string witness;
    for_each_proper_ideal(boolean_lattice(n), [&](std::uint64_t members, const std::vector<int>&) {
        ++total;
        auto delta = ideal_to_complex(members, n);
        bool ok = true;
        if (suite == "gtheorem") {
            auto s = bier_complex(delta, n);
            FVector h = h_from_f(f_vector(s.complex, n), n);
            ok = g_bier(delta, n) == g_from_h(h) &&
                 g_bier(delta, n) == g_from_h(h_via_restriction(delta, n));
        } else if (suite == "dehn-sommerville") {
            FVector h = h_via_restriction(delta, n);
            for (int i = 0; i < n; ++i)
                if (h[i] != h[n - 1 - i]) ok = false;
        } else if (suite == "shelling") {
            auto s = bier_complex(delta, n);
            auto order = shelling_order(delta, n);
            std::vector<Mask> faces;
            for (const auto& f : order)
                faces.push_back(interval_face(IntervalBC{f.a, f.support()}, n,
                                              s.complex.universe()));
            ok = is_shelling(s.complex, faces).valid;
        } else if (suite == "spheres") {
            auto s = bier_complex(delta, n);
            ok = sphere_checks(s.complex, n - 2).ok();
        } else if (suite == "kseq") {
            ok = kk_is_ksequence(g_bier(delta, n));
        } else {
            fail("BadParameter", "unknown suite " + suite);
        }
        if (!ok) {
            ++failures;
            if (witness.empty()) witness = "ideal with f = " + seq_to_string(f_vector(delta, n));
        }
    });
    rep.value("suite", suite);
    rep.value("ideals", std::to_string(total));
    rep.check("suite-clean", failures == 0,
              failures == 0 ? "" : std::to_string(failures) + " failures; first: " + witness);
    g_exit = out.emit(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bier posets and Bier spheres: constructions and verification"};
    app.require_subcommand(1);
    Out out;
    app.add_flag("--json", out.json, "emit one JSON document instead of text");

    std::string file, poset_file, ideal_file, out_path, face_text, seq_text, suite, mode;
    int n = 0, k = 0, shards = 1;
    bool count_iso = false;

    auto* fvec = app.add_subcommand("fvec", "f/h/g vectors of a complex");
    fvec->add_option("file", file)->required();
    fvec->add_option("-n", n, "ambient size (default: universe)");
    fvec->callback([&] { cmd_fvec(file, n, out); });

    auto* bier = app.add_subcommand("bier", "facets and complex of Bier(B_n, Delta)");
    bier->add_option("file", file)->required();
    bier->add_option("-n", n)->required();
    bier->add_option("-o,--out", out_path, "write the complex to a file");
    bier->callback([&] { cmd_bier(file, n, out_path, out); });

    auto* bp = app.add_subcommand("bier-poset", "Bier(P, I) as a poset file");
    bp->add_option("poset", poset_file)->required();
    bp->add_option("ideal", ideal_file)->required();
    bp->add_option("-o,--out", out_path);
    bp->callback([&] { cmd_bier_poset(poset_file, ideal_file, out_path, out); });

    auto* dual = app.add_subcommand("dual", "Alexander dual");
    dual->add_option("file", file)->required();
    dual->add_option("-n", n)->required();
    dual->add_option("-o,--out", out_path);
    dual->callback([&] { cmd_dual(file, n, out_path, out); });

    auto* djoin = app.add_subcommand("djoin", "deleted join with the dual");
    djoin->add_option("file", file)->required();
    djoin->add_option("-n", n)->required();
    djoin->add_option("-o,--out", out_path);
    djoin->callback([&] { cmd_djoin(file, n, out_path, out); });

    auto* shell = app.add_subcommand("shell", "chi-lexicographic shelling order");
    shell->add_option("file", file)->required();
    shell->add_option("-n", n)->required();
    shell->callback([&] { cmd_shell(file, n, out); });

    auto* gvec = app.add_subcommand("gvec", "Bier g-vector three ways");
    gvec->add_option("file", file)->required();
    gvec->add_option("-n", n)->required();
    gvec->callback([&] { cmd_gvec(file, n, out); });

    auto* dp = app.add_subcommand("delta-prime", "difference subcomplex");
    dp->add_option("file", file)->required();
    dp->add_option("-n", n)->required();
    dp->add_option("-o,--out", out_path);
    dp->callback([&] { cmd_delta_prime(file, n, out_path, out); });

    auto* realize = app.add_subcommand("realize", "complex realizing a K-sequence");
    realize->add_option("sequence", seq_text, "e.g. \"1,3\"")->required();
    realize->add_option("-n", n)->required();
    realize->add_option("-o,--out", out_path);
    realize->callback([&] { cmd_realize(seq_text, n, out_path, out); });

    auto* flip = app.add_subcommand("flip", "add-face bistellar flip with certificate");
    flip->add_option("file", file)->required();
    flip->add_option("-n", n)->required();
    flip->add_option("--face", face_text, "e.g. \"1 2\"")->required();
    flip->callback([&] { cmd_flip(file, n, face_text, out); });

    auto* sv = app.add_subcommand("subdivide-verify", "edge-subdivision identity for Bier(P, I)");
    sv->add_option("poset", poset_file)->required();
    sv->add_option("ideal", ideal_file)->required();
    sv->callback([&] { cmd_subdivide_verify(poset_file, ideal_file, out); });

    auto* verify = app.add_subcommand("verify", "sphere checks and Eulerian face poset");
    verify->add_option("file", file)->required();
    verify->add_option("-n", n)->required();
    verify->callback([&] { cmd_verify(file, n, out); });

    auto* nb = app.add_subcommand("neighborly", "central symmetry and neighborliness");
    nb->add_option("file", file)->required();
    nb->add_option("-n", n)->required();
    nb->add_option("-k", k, "neighborliness index");
    nb->callback([&] { cmd_neighborly(file, n, k, out); });

    auto* en = app.add_subcommand("enumerate", "ideal enumeration and suites");
    en->add_option("-n", n)->required();
    en->add_flag("--count-iso", count_iso, "count isomorphism classes");
    en->add_option("--mode", mode, "exhaustive | restricted | cs");
    en->add_option("--suite", suite, "gtheorem | dehn-sommerville | shelling | spheres | kseq");
    en->add_option("--shards", shards, "parallel shard count");
    en->callback([&] { cmd_enumerate(n, count_iso, mode, suite, shards, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
