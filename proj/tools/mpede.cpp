// Command-line front end: generation, checking, multipede building and
// twisting, game playing, and the counting-refinement oracle. All file I/O
// uses the .hg / .mpd text formats; exit codes are 0 = property holds /
// success, 1 = property fails / budget exhausted / spoiler wins, 2 = usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multipede/closure.hpp"
#include "multipede/cycles.hpp"
#include "multipede/density.hpp"
#include "multipede/game.hpp"
#include "multipede/generator.hpp"
#include "multipede/gf2.hpp"
#include "multipede/io.hpp"
#include "multipede/multipede.hpp"
#include "multipede/refine.hpp"
#include "multipede/structure.hpp"

namespace mp = multipede;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw mp::InputError("empty entry in list: " + s);
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw mp::InputError("cannot write " + path);
    out << text;
}

// ---------------------------------------------------------------- gen

int run_gen(const std::string& model, mp::GenConfig cfg, const std::string& base_str,
            const std::string& out_path, const std::string& report_path) {
    if (model == "binomial")
        cfg.model = mp::GenModel::Binomial;
    else if (model == "fixed")
        cfg.model = mp::GenModel::FixedEdges;
    else if (model == "circulant")
        cfg.model = mp::GenModel::Circulant;
    else
        throw mp::InputError("unknown model: " + model);
    if (!base_str.empty()) {
        auto b = parse_int_list(base_str);
        if (b.size() != 3) throw mp::InputError("--base needs three residues");
        cfg.base = {b[0], b[1], b[2]};
    }
    mp::GenResult res = mp::generate_odd_meager(cfg);
    std::string report = mp::format_report(res.report);
    if (!report_path.empty())
        write_text(report_path, report);
    else
        std::cout << report;
    if (!res.report.success) {
        std::cout << "status=exhausted attempts=" << res.report.attempts.size() << "\n";
        return 1;
    }
    std::cout << "status=success attempt=" << res.report.success_attempt
              << " n=" << res.graph->n() << " m=" << res.graph->edge_count() << "\n";
    if (!out_path.empty()) mp::save_hg(*res.graph, out_path);
    return 0;
}

// ---------------------------------------------------------------- check

int run_check(const std::string& path, int l, bool meager, bool modest, bool odd,
              bool red_green, bool cycles, const std::string& closure_str, int max_len) {
    mp::Hypergraph h = mp::load_hg(path);
    int picked = int(meager) + int(modest) + int(odd) + int(red_green) + int(cycles) +
                 int(!closure_str.empty());
    if (picked != 1)
        throw mp::InputError("pick exactly one of --meager --modest --odd --red-green "
                             "--cycles --closure");
    if (meager || modest) {
        mp::Verdict v = meager ? mp::is_meager(h, l) : mp::is_modest(h, l);
        std::cout << (meager ? "meager" : "modest") << " l=" << l << " "
                  << (v.ok ? "true" : "false");
        if (!v.ok && v.witness) std::cout << " witness=" << join(*v.witness);
        std::cout << "\n";
        return v.ok ? 0 : 1;
    }
    if (odd) {
        bool ok = mp::is_odd(h);
        std::cout << "odd " << (ok ? "true" : "false");
        if (!ok)
            if (auto x = mp::odd_failing_set(h)) std::cout << " failing_set=" << join(*x);
        std::cout << "\n";
        return ok ? 0 : 1;
    }
    if (red_green) {
        mp::RedGreenDecomposition d = mp::red_green(h, l);
        std::cout << "red_blocks " << d.red_blocks.size() << "\n";
        for (const auto& b : d.red_blocks) std::cout << "block " << join(b) << "\n";
        std::cout << "green " << join(d.green) << "\n"
                  << "blocks_disjoint " << d.blocks_disjoint << "\n"
                  << "adjacent_reds_share " << d.adjacent_reds_share << "\n"
                  << "green_one_red_neighbor " << d.green_one_red_neighbor << "\n";
        return 0;
    }
    if (cycles) {
        auto found = mp::find_witnessed_cycles(h, max_len);
        std::cout << "witnessed_cycles " << found.size() << "\n";
        for (const auto& wc : found)
            std::cout << "cycle xs=" << join(wc.xs) << " ys=" << join(wc.ys) << "\n";
        return 0;
    }
    mp::VertexSet x = mp::make_vertex_set(parse_int_list(closure_str));
    std::cout << "closure " << join(mp::closure(h, x)) << "\n";
    return 0;
}

// ---------------------------------------------------------------- mp

mp::Multipede load_mpd_checked(const std::string& path) { return mp::load_mpd(path); }

int run_mp_build(const std::string& hg_path, int level, const std::string& parity_str,
                 const std::string& out_path) {
    mp::Hypergraph h = mp::load_hg(hg_path);
    std::vector<uint8_t> parity(h.edge_count(), 0);
    if (!parity_str.empty()) {
        if (static_cast<int>(parity_str.size()) != h.edge_count())
            throw mp::InputError("--parity needs one bit per edge");
        for (size_t i = 0; i < parity_str.size(); ++i) {
            if (parity_str[i] != '0' && parity_str[i] != '1')
                throw mp::InputError("--parity must be a 0/1 string");
            parity[i] = parity_str[i] - '0';
        }
    }
    mp::Multipede m = mp::build_multipede(h, parity, level);
    mp::save_mpd(m, out_path);
    std::cout << "built segments=" << m.n() << " edges=" << m.edge_count()
              << " level=" << m.level << "\n";
    return 0;
}

int run_mp_validate(const std::string& path) {
    mp::Multipede m = load_mpd_checked(path);
    std::vector<std::string> errs = mp::validate(m);
    mp::RelStructure s = mp::to_structure(m);
    for (const auto& e : mp::validate_structure(s, m.level)) errs.push_back(e);
    for (const auto& e : errs) std::cout << "violation " << e << "\n";
    std::cout << (errs.empty() ? "valid" : "invalid") << "\n";
    return errs.empty() ? 0 : 1;
}

int run_mp_autos(const std::string& path) {
    mp::Multipede m = load_mpd_checked(path);
    if (m.level >= 3 && m.n() <= 12) {
        auto autos = mp::automorphisms_bruteforce(m);
        std::cout << "automorphisms " << autos.size() << "\n";
        for (const auto& a : autos)
            std::cout << "swap " << (a.empty() ? std::string("-") : join(a)) << "\n";
        std::cout << "rigid " << (mp::is_rigid(m) ? "true" : "false") << "\n";
        return 0;
    }
    if (m.level < 3) throw mp::InputError("mp autos needs level >= 3");
    std::cout << "rigid " << (mp::is_rigid(m) ? "true" : "false") << " (algebraic)\n";
    return 0;
}

int run_mp_iso(const std::string& a_path, const std::string& b_path) {
    mp::Multipede a = load_mpd_checked(a_path);
    mp::Multipede b = load_mpd_checked(b_path);
    mp::FootSwapIsos isos = mp::foot_swap_isomorphisms(a, b);
    if (!isos.solution) {
        std::cout << "isomorphic false\n";
        return 1;
    }
    std::cout << "isomorphic true swap="
              << (isos.solution->empty() ? std::string("-") : join(*isos.solution))
              << " kernel_dim=" << isos.kernel_basis.size() << "\n";
    return 0;
}

// ---------------------------------------------------------------- play

class InteractiveSpoiler : public mp::SpoilerStrategy {
  public:
    mp::SpoilerMove choose_move(const mp::GameState& st) override {
        std::cout << "round " << st.round << " board:";
        for (const auto& p : st.pairs())
            std::cout << " " << p.pebble << ":(" << p.a << "," << p.b << ")";
        std::cout << "\nspoiler> " << std::flush;
        std::string line = read_line();
        // Accept `spoiler i=<i> side=<M|N> X=<ids>`, optionally prefixed
        // with `round <r>`.
        std::istringstream ss(line);
        std::string tok;
        mp::SpoilerMove mv;
        bool have_i = false, have_side = false, have_x = false;
        while (ss >> tok) {
            if (tok.rfind("i=", 0) == 0) {
                mv.pebble = std::stoi(tok.substr(2));
                have_i = true;
            } else if (tok.rfind("side=", 0) == 0) {
                std::string s = tok.substr(5);
                if (s != "M" && s != "N") throw mp::InputError("side must be M or N");
                mv.side = (s == "N");
                have_side = true;
            } else if (tok.rfind("X=", 0) == 0) {
                mv.set = parse_int_list(tok.substr(2));
                have_x = true;
            }
        }
        if (!have_i || !have_side || !have_x)
            throw mp::InputError("expected: spoiler i=<i> side=<M|N> X=<ids>");
        return mv;
    }

    int pin(const mp::GameState&, const mp::SpoilerMove&, const std::vector<int>& y) override {
        std::cout << "dup Y=" << join(y) << "\npin> " << std::flush;
        std::string line = read_line();
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok)
            if (tok.rfind("y=", 0) == 0) return std::stoi(tok.substr(2));
        throw mp::InputError("expected: pin y=<id>");
    }

  private:
    static std::string read_line() {
        std::string line;
        if (!std::getline(std::cin, line)) throw mp::InputError("end of input");
        return line;
    }
};

int run_play(const std::string& a_path, const std::string& b_path, int k, int rounds,
             const std::string& spoiler_kind, uint64_t seed,
             const std::string& transcript_path) {
    mp::Multipede ma = load_mpd_checked(a_path);
    mp::Multipede mb = load_mpd_checked(b_path);
    mp::RelStructure sa = mp::to_structure(ma);
    mp::RelStructure sb = mp::to_structure(mb);
    mp::SafeDuplicator dup(ma, mb);
    std::unique_ptr<mp::SpoilerStrategy> spoiler;
    if (spoiler_kind == "random")
        spoiler = std::make_unique<mp::RandomSpoiler>(seed);
    else if (spoiler_kind == "greedy")
        spoiler = std::make_unique<mp::GreedySpoiler>(ma, mb, seed);
    else if (spoiler_kind == "interactive")
        spoiler = std::make_unique<InteractiveSpoiler>();
    else
        throw mp::InputError("unknown spoiler: " + spoiler_kind);
    mp::Transcript t = mp::run_match(sa, sb, k, rounds, *spoiler, dup);
    std::ostringstream body;
    for (const auto& line : t.lines) body << line << "\n";
    if (!transcript_path.empty())
        write_text(transcript_path, body.str());
    else
        std::cout << body.str();
    std::cout << "rounds=" << t.rounds_played << " strategy_failures=" << t.strategy_failures
              << " result="
              << (t.status == mp::GameState::kDuplicatorSurviving ? "duplicator_surviving"
                                                                  : "spoiler_won")
              << "\n";
    return t.status == mp::GameState::kDuplicatorSurviving ? 0 : 1;
}

int run_ck(const std::string& a_path, const std::string& b_path, int k, int max_size) {
    mp::RelStructure sa = mp::to_structure(load_mpd_checked(a_path));
    mp::RelStructure sb = mp::to_structure(load_mpd_checked(b_path));
    bool eq = mp::ck_equivalent(sa, sb, k, max_size);
    std::cout << "ck k=" << k << " " << (eq ? "equivalent" : "inequivalent") << "\n";
    return eq ? 0 : 1;
}

// ---------------------------------------------------------------- demo

int run_demo(const std::string& witness, int rounds, uint64_t seed) {
    mp::Hypergraph h;
    if (witness == "c9") {
        h = mp::circulant(9, {0, 1, 3});
    } else if (witness == "c13") {
        auto edges = mp::circulant(13, {0, 1, 3}).edges();
        edges.push_back(mp::make_edge(0, 4, 9));
        std::sort(edges.begin(), edges.end());
        h = mp::Hypergraph(13, edges);
    } else {
        throw mp::InputError("unknown witness: " + witness);
    }
    std::cout << "witness " << witness << " n=" << h.n() << " m=" << h.edge_count() << "\n";
    bool odd = mp::is_odd(h);
    bool meager = bool(mp::is_meager(h, 2));
    std::cout << "odd=" << odd << " meager(l=2)=" << meager << "\n";

    mp::Multipede m = mp::build_multipede(h, std::vector<uint8_t>(h.edge_count(), 0), 3);
    auto s_star = mp::noniso_twist_edges(m);
    mp::Multipede n = s_star ? mp::twist(m, *s_star) : m;
    if (s_star)
        std::cout << "twist edges=" << join(*s_star) << "\n";
    else
        std::cout << "twist none (trivial cokernel, comparing M with itself)\n";

    bool rigid_m = mp::is_rigid(m), rigid_n = mp::is_rigid(n);
    bool iso = bool(mp::foot_swap_isomorphisms(m, n).solution);
    mp::RelStructure sm = mp::to_structure(m), sn = mp::to_structure(n);
    bool ck = mp::ck_equivalent(sm, sn, 1);
    mp::SafeDuplicator dup(m, n);
    mp::GreedySpoiler spoiler(m, n, seed);
    mp::Transcript t = mp::run_match(sm, sn, 1, rounds, spoiler, dup);
    bool survived = t.status == mp::GameState::kDuplicatorSurviving;

    std::cout << "rigid=" << (rigid_m && rigid_n ? "true" : "false")
              << " isomorphic=" << (iso ? "true" : "false")
              << " ck(k=1)=" << (ck ? "equivalent" : "inequivalent")
              << " duplicator=" << (survived ? "survives" : "loses") << " rounds=" << rounds
              << "\n";
    bool headline = rigid_m && rigid_n && ck && survived && (s_star ? !iso : iso);
    std::cout << "verdict " << (headline ? "ok" : "unexpected") << "\n";
    return headline ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigid-structure toolkit"};
    app.require_subcommand(1);
    uint64_t global_seed = 0;
    bool verbose = false;
    app.add_option("--seed", global_seed, "global RNG seed");
    app.add_flag("--verbose", verbose, "log the effective configuration");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an odd meager hypergraph");
    mp::GenConfig cfg;
    std::string gen_model = "binomial", gen_base, gen_out, gen_report;
    gen->add_option("--l", cfg.l, "meagerness level");
    gen->add_option("--min-size", cfg.min_size, "minimum output cardinality");
    gen->add_option("--model", gen_model, "binomial|fixed|circulant");
    gen->add_option("--n", cfg.n, "vertex count (0 = default)");
    gen->add_option("--eps", cfg.eps, "binomial exponent offset");
    gen->add_option("--m", cfg.m, "edge count for the fixed model");
    gen->add_option("--base", gen_base, "circulant residues a,b,c");
    gen->add_option("--seed", cfg.seed, "generator seed");
    gen->add_option("--attempts", cfg.max_attempts, "attempt budget");
    gen->add_option("--out", gen_out, "output .hg path");
    gen->add_option("--report", gen_report, "report path (default stdout)");
    gen->add_flag("--override-eps-bound", cfg.override_eps_bound,
                  "allow eps >= 1/(2l+3)");

    // check
    auto* check = app.add_subcommand("check", "check properties of a .hg file");
    std::string check_file, check_closure;
    int check_l = 2, check_maxlen = 4;
    bool f_meager = false, f_modest = false, f_odd = false, f_rg = false, f_cyc = false;
    check->add_option("file", check_file, ".hg input")->required();
    check->add_option("--l", check_l, "level parameter");
    check->add_flag("--meager", f_meager);
    check->add_flag("--modest", f_modest);
    check->add_flag("--odd", f_odd);
    check->add_flag("--red-green", f_rg);
    check->add_flag("--cycles", f_cyc);
    check->add_option("--max-len", check_maxlen, "cycle length bound");
    check->add_option("--closure", check_closure, "vertex list a,b,c");

    // mp
    auto* mpc = app.add_subcommand("mp", "multipede operations");
    mpc->require_subcommand(1);
    auto* mb = mpc->add_subcommand("build", "build a multipede from a .hg file");
    std::string mb_hg, mb_parity, mb_out;
    int mb_level = 3;
    mb->add_option("--hg", mb_hg, "segment hypergraph")->required();
    mb->add_option("--level", mb_level, "1..4");
    mb->add_option("--parity", mb_parity, "0/1 string, one bit per edge");
    mb->add_option("--out", mb_out, "output .mpd path")->required();
    auto* mv = mpc->add_subcommand("validate", "validate a .mpd file");
    std::string mv_file;
    mv->add_option("file", mv_file)->required();
    auto* mf = mpc->add_subcommand("flip", "flip both feet of a segment");
    std::string mf_file, mf_out;
    int mf_segment = 0;
    mf->add_option("file", mf_file)->required();
    mf->add_option("--segment", mf_segment)->required();
    mf->add_option("--out", mf_out)->required();
    auto* mt = mpc->add_subcommand("twist", "flip parity bits of listed edges");
    std::string mt_file, mt_edges, mt_out;
    mt->add_option("file", mt_file)->required();
    mt->add_option("--edges", mt_edges, "edge indices idx,idx,...")->required();
    mt->add_option("--out", mt_out)->required();
    auto* ma = mpc->add_subcommand("autos", "automorphisms / rigidity");
    std::string ma_file;
    ma->add_option("file", ma_file)->required();
    auto* mi = mpc->add_subcommand("iso", "segment-fixing isomorphism test");
    std::string mi_a, mi_b;
    mi->add_option("a", mi_a)->required();
    mi->add_option("b", mi_b)->required();

    // play
    auto* play = app.add_subcommand("play", "run a counting pebble game match");
    std::string play_a, play_b, play_spoiler = "random", play_transcript;
    int play_k = 1, play_rounds = 100;
    uint64_t play_seed = 0;
    play->add_option("--a", play_a, "left .mpd")->required();
    play->add_option("--b", play_b, "right .mpd")->required();
    play->add_option("--k", play_k, "pebble pairs");
    play->add_option("--rounds", play_rounds, "survival horizon");
    play->add_option("--spoiler", play_spoiler, "random|greedy|interactive");
    play->add_option("--seed", play_seed, "spoiler seed");
    play->add_option("--transcript", play_transcript, "transcript output path");

    // ck
    auto* ck = app.add_subcommand("ck", "counting-refinement equivalence oracle");
    std::string ck_a, ck_b;
    int ck_k = 1, ck_max = 4096;
    ck->add_option("--a", ck_a)->required();
    ck->add_option("--b", ck_b)->required();
    ck->add_option("--k", ck_k, "variable count");
    ck->add_option("--max-size", ck_max, "structure size cap");

    // demo
    auto* demo = app.add_subcommand("demo", "end-to-end rigidity demo");
    std::string demo_witness = "c13";
    int demo_rounds = 100;
    demo->add_option("--witness", demo_witness, "c9|c13");
    demo->add_option("--rounds", demo_rounds, "survival horizon");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verbose) {
            std::cout << "config:";
            for (int i = 1; i < argc; ++i) std::cout << " " << argv[i];
            std::cout << "\n";
        }
        if (gen->parsed()) return run_gen(gen_model, cfg, gen_base, gen_out, gen_report);
        if (check->parsed())
            return run_check(check_file, check_l, f_meager, f_modest, f_odd, f_rg, f_cyc,
                             check_closure, check_maxlen);
        if (mpc->parsed()) {
            if (mb->parsed()) return run_mp_build(mb_hg, mb_level, mb_parity, mb_out);
            if (mv->parsed()) return run_mp_validate(mv_file);
            if (mf->parsed()) {
                mp::Multipede m = load_mpd_checked(mf_file);
                mp::save_mpd(mp::flip_segment_feet(m, mf_segment), mf_out);
                return 0;
            }
            if (mt->parsed()) {
                mp::Multipede m = load_mpd_checked(mt_file);
                mp::save_mpd(mp::twist(m, parse_int_list(mt_edges)), mt_out);
                return 0;
            }
            if (ma->parsed()) return run_mp_autos(ma_file);
            if (mi->parsed()) return run_mp_iso(mi_a, mi_b);
        }
        if (play->parsed())
            return run_play(play_a, play_b, play_k, play_rounds, play_spoiler,
                            play->count("--seed") ? play_seed : global_seed, play_transcript);
        if (ck->parsed()) return run_ck(ck_a, ck_b, ck_k, ck_max);
        if (demo->parsed()) return run_demo(demo_witness, demo_rounds, global_seed);
    } catch (const mp::InputError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const mp::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
