// ftor: enumerate small flag complexes with torsion in first homology.
//
// The search runs as a cascade of filters over connected graphs
// (tame -> cyclic links -> H1 torsion -> irreducible), each stage reading
// and writing graph6 line files so expensive phases never rerun after a
// crash. `table` drives whole rows; the remaining subcommands run single
// stages or reports.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "ftor/canon.hpp"
#include "ftor/classify.hpp"
#include "ftor/generate.hpp"
#include "ftor/homology.hpp"
#include "ftor/pipeline.hpp"
#include "ftor/poset.hpp"

namespace fs = std::filesystem;
using namespace ftor;

namespace {

std::string scratch_dir() {
    if (const char* env = std::getenv("FTOR_SCRATCH")) return env;
    return "scratch";
}

std::string stats_path_for(const std::string& dir, int n) {
    return dir + "/stats_n" + std::to_string(n) + ".tsv";
}

std::vector<Graph> load_graphs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) graphs.push_back(from_graph6(line));
    return graphs;
}

int stage_index(const std::string& name) {
    const char* names[] = {"gen", "tame", "links", "torsion", "irreducible"};
    for (int i = 0; i < 5; ++i)
        if (name == names[i]) return i;
    throw CLI::ValidationError("--stage", "unknown stage '" + name + "'");
}

void print_table_header(std::ostream& out) {
    out << "n\tconnected\ttame\tcyclic_links\ttorsion\tirreducible\n";
}

void print_table_row(std::ostream& out, const PipelineStats& st, int through) {
    out << st.n;
    for (int s = 0; s <= through; ++s) out << '\t' << st.count(s);
    for (int s = through + 1; s < 5; ++s) out << '\t';
    out << '\n';
}

struct CommonOpts {
    int n = 0;
    int workers = 0;
    int checkpoint_every = 16;
    bool extended = false;
    std::string dir;

    PipelineConfig config() const {
        PipelineConfig cfg;
        cfg.workers = workers;
        cfg.checkpoint_every = checkpoint_every;
        cfg.extended = extended;
        return cfg;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opt, bool needs_n = true) {
    if (needs_n) cmd->add_option("--n", opt.n, "vertex count")->required();
    cmd->add_option("--workers", opt.workers, "worker threads (default: hardware)");
    cmd->add_option("--checkpoint-every", opt.checkpoint_every,
                    "jobs between checkpoint flushes");
    cmd->add_flag("--extended", opt.extended, "permit n >= 11 full runs");
    cmd->add_option("--dir", opt.dir, "checkpoint/scratch directory (default: $FTOR_SCRATCH)");
}

void require_extended_for(int n, bool extended) {
    if (n >= 11 && !extended)
        throw CLI::ValidationError(
            "--n", "n >= 11 is an extended run (hours to days); pass --extended to confirm");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag complexes with torsion in first integral homology"};
    app.require_subcommand(1);

    CommonOpts gen_opt;
    int gen_dmin = 0, gen_dmax = -1;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "generate connected graphs up to isomorphism");
    add_common(gen_cmd, gen_opt);
    gen_cmd->add_option("--dmin", gen_dmin, "minimum degree (checked at full size)");
    gen_cmd->add_option("--dmax", gen_dmax, "maximum degree (default n-1)");
    gen_cmd->add_option("--out", gen_out, "output graph6 file");

    CommonOpts tame_opt;
    std::string tame_in, tame_out;
    auto* tame_cmd = app.add_subcommand("tame", "keep graphs with all degrees in [4, n-4]");
    add_common(tame_cmd, tame_opt);
    tame_cmd->add_option("--in", tame_in, "input graph6 file (default: gen stage file)");
    tame_cmd->add_option("--out", tame_out, "output graph6 file");

    CommonOpts links_opt;
    std::string links_in, links_out;
    auto* links_cmd =
        app.add_subcommand("links", "keep graphs whose every vertex link has nontrivial H1");
    add_common(links_cmd, links_opt);
    links_cmd->add_option("--in", links_in, "input graph6 file (default: tame stage file)");
    links_cmd->add_option("--out", links_out, "output graph6 file");

    CommonOpts torsion_opt;
    std::string torsion_in, torsion_out;
    auto* torsion_cmd =
        app.add_subcommand("torsion", "keep graphs whose clique complex has H1 torsion");
    add_common(torsion_cmd, torsion_opt);
    torsion_cmd->add_option("--in", torsion_in, "input graph6 file (default: links stage file)");
    torsion_cmd->add_option("--out", torsion_out, "output graph6 file");

    CommonOpts irr_opt;
    std::string irr_in, irr_out, irr_kset;
    auto* irr_cmd = app.add_subcommand(
        "irreducible", "keep torsion graphs no vertex deletion of which keeps torsion");
    add_common(irr_cmd, irr_opt);
    irr_cmd->add_option("--in", irr_in, "input graph6 file (default: torsion stage file)");
    irr_cmd->add_option("--out", irr_out, "output graph6 file");
    irr_cmd->add_option("--kset", irr_kset,
                        "11-vertex irreducible list for the n=12 cross-check");

    CommonOpts table_opt;
    std::string table_range, table_stage = "irreducible";
    auto* table_cmd = app.add_subcommand("table", "run the full cascade and print count rows");
    add_common(table_cmd, table_opt, false);
    table_cmd->add_option("--n", table_range, "vertex count or range, e.g. 8..10")->required();
    table_cmd->add_option("--stage", table_stage, "last stage to run (gen..irreducible)");

    std::string classify_in, classify_out;
    auto* classify_cmd =
        app.add_subcommand("classify", "label survivor clique complexes against RP2");
    classify_cmd->add_option("--in", classify_in, "survivor graph6 file")->required();
    classify_cmd->add_option("--out", classify_out, "report TSV (default: stdout)");

    std::string c5_in;
    auto* c5_cmd = app.add_subcommand("c5check", "report induced 5-cycles per graph");
    c5_cmd->add_option("--in", c5_in, "graph6 file")->required();

    CommonOpts posets_opt;
    std::string posets_out;
    auto* posets_cmd =
        app.add_subcommand("posets", "enumerate small posets and verify order-complex torsion");
    posets_cmd->add_option("--n", posets_opt.n, "element count (1..8)")->required();
    posets_cmd->add_option("--out", posets_out, "write the posets as cover lists");

    CommonOpts oracle_opt;
    std::string oracle_out;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "build the padded link lookup set for one vertex count");
    oracle_cmd->add_option("--n", oracle_opt.n, "padded vertex count (8..16)")->required();
    oracle_cmd->add_option("--out", oracle_out, "persist the canonical set as graph6 lines");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) {
            CommonOpts& o = gen_opt;
            require_extended_for(o.n, o.extended);
            if (gen_dmax < 0) gen_dmax = o.n - 1;
            std::string dir = o.dir.empty() ? scratch_dir() : o.dir;
            fs::create_directories(dir);
            bool bounded = gen_dmin != 0 || gen_dmax != o.n - 1;
            std::string out = !gen_out.empty() ? gen_out
                              : bounded ? dir + "/gen_n" + std::to_string(o.n) + "_d" +
                                              std::to_string(gen_dmin) + "-" +
                                              std::to_string(gen_dmax) + ".g6"
                                        : stage_file(dir, "gen", o.n);
            StageResult r = run_gen_stage(o.n, gen_dmin, gen_dmax, out, stats_path_for(dir, o.n),
                                          o.config());
            std::cout << "gen n=" << o.n << " [" << gen_dmin << "," << gen_dmax
                      << "]: " << r.kept << " graphs -> " << out
                      << (r.reused ? " (reused)" : "") << "\n";
        } else if (tame_cmd->parsed()) {
            CommonOpts& o = tame_opt;
            std::string dir = o.dir.empty() ? scratch_dir() : o.dir;
            std::string in = tame_in.empty() ? stage_file(dir, "gen", o.n) : tame_in;
            std::string out = tame_out.empty() ? stage_file(dir, "tame", o.n) : tame_out;
            StageResult r = run_tame_stage(o.n, in, out, stats_path_for(dir, o.n), o.config());
            std::cout << "tame n=" << o.n << ": " << r.kept << " of " << r.scanned << " -> "
                      << out << (r.reused ? " (reused)" : "") << "\n";
        } else if (links_cmd->parsed()) {
            CommonOpts& o = links_opt;
            std::string dir = o.dir.empty() ? scratch_dir() : o.dir;
            std::string in = links_in.empty() ? stage_file(dir, "tame", o.n) : links_in;
            std::string out = links_out.empty() ? stage_file(dir, "links", o.n) : links_out;
            StageResult r = run_links_stage(o.n, in, out, stats_path_for(dir, o.n), o.config());
            std::cout << "links n=" << o.n << ": " << r.kept << " of " << r.scanned << " -> "
                      << out << (r.reused ? " (reused)" : "") << "\n";
        } else if (torsion_cmd->parsed()) {
            CommonOpts& o = torsion_opt;
            std::string dir = o.dir.empty() ? scratch_dir() : o.dir;
            std::string in = torsion_in.empty() ? stage_file(dir, "links", o.n) : torsion_in;
            std::string out = torsion_out.empty() ? stage_file(dir, "torsion", o.n) : torsion_out;
            StageResult r = run_torsion_stage(o.n, in, out, stats_path_for(dir, o.n), o.config());
            std::cout << "torsion n=" << o.n << ": " << r.kept << " of " << r.scanned << " -> "
                      << out << (r.reused ? " (reused)" : "") << "\n";
        } else if (irr_cmd->parsed()) {
            CommonOpts& o = irr_opt;
            std::string dir = o.dir.empty() ? scratch_dir() : o.dir;
            std::string in = irr_in.empty() ? stage_file(dir, "torsion", o.n) : irr_in;
            std::string out = irr_out.empty() ? stage_file(dir, "irreducible", o.n) : irr_out;
            CanonicalSet kset;
            const CanonicalSet* kset_ptr = nullptr;
            if (o.n == 12) {
                std::string kpath =
                    irr_kset.empty() ? stage_file(dir, "irreducible", 11) : irr_kset;
                kset = CanonicalSet::from_graphs(load_graphs(kpath));
                kset_ptr = &kset;
            }
            StageResult r = run_irreducible_stage(o.n, in, out, stats_path_for(dir, o.n),
                                                  o.config(), kset_ptr);
            std::cout << "irreducible n=" << o.n << ": " << r.kept << " of " << r.scanned
                      << " -> " << out << (r.reused ? " (reused)" : "") << "\n";
        } else if (table_cmd->parsed()) {
            CommonOpts& o = table_opt;
            int lo = 0, hi = 0;
            auto dots = table_range.find("..");
            if (dots == std::string::npos) {
                lo = hi = std::stoi(table_range);
            } else {
                lo = std::stoi(table_range.substr(0, dots));
                hi = std::stoi(table_range.substr(dots + 2));
            }
            int through = stage_index(table_stage);
            std::string dir = o.dir.empty() ? scratch_dir() : o.dir;
            print_table_header(std::cout);
            for (int n = lo; n <= hi; ++n) {
                require_extended_for(n, o.extended);
                PipelineStats st = run_stage_table_through(n, dir, o.config(), through);
                print_table_row(std::cout, st, through);
                std::cout.flush();
            }
        } else if (classify_cmd->parsed()) {
            std::vector<Graph> graphs = load_graphs(classify_in);
            std::ofstream file;
            if (!classify_out.empty()) {
                file.open(classify_out);
                if (!file) throw std::runtime_error("cannot open " + classify_out);
            }
            std::ostream& out = classify_out.empty() ? std::cout : file;
            out << "graph6\tlabel\th1\tclosed\torientable\teuler\n";
            std::size_t tallies[4] = {0, 0, 0, 0};
            for (const Graph& g : graphs) {
                ClassLabel label = classify_complex(g);
                ++tallies[static_cast<int>(label)];
                SimplicialComplex full = clique_complex(g);
                SurfaceReport rep;
                if (dimension(full) == 2) rep = surface_check(full);
                HomologyGroup h1 = h1_clique(g);
                out << to_graph6(g) << '\t' << label_name(label) << '\t' << h1.to_string() << '\t'
                    << (rep.is_closed_surface ? 1 : 0) << '\t' << (rep.orientable ? 1 : 0) << '\t'
                    << rep.euler << '\n';
            }
            std::cerr << "homeomorphic: " << tallies[0] << ", collapsing: " << tallies[1]
                      << ", wedge-signature: " << tallies[2] << ", other: " << tallies[3] << "\n";
        } else if (c5_cmd->parsed()) {
            std::vector<Graph> graphs = load_graphs(c5_in);
            std::size_t with = 0;
            for (const Graph& g : graphs) {
                bool has = has_induced_c5(g);
                if (has) ++with;
                std::cout << to_graph6(g) << '\t' << (has ? "induced-C5" : "no-induced-C5")
                          << '\n';
            }
            std::cerr << with << " of " << graphs.size() << " contain an induced 5-cycle\n";
            if (with != graphs.size()) return 3;
        } else if (posets_cmd->parsed()) {
            int n = posets_opt.n;
            std::ofstream file;
            bool dump = !posets_out.empty();
            if (dump) {
                file.open(posets_out);
                if (!file) throw std::runtime_error("cannot open " + posets_out);
            }
            std::uint64_t classes = enumerate_posets(n, [&](const Poset& p) {
                if (dump) save_poset(p, file);
            });
            bool torsion_free = verify_small_posets(n);
            std::cout << "torsion-free: " << (torsion_free ? "yes" : "NO")
                      << ", classes: " << classes << "\n";
            if (!torsion_free) return 3;
        } else if (oracle_cmd->parsed()) {
            LinkOracle oracle = build_link_oracle(oracle_opt.n);
            std::cout << "link size k=" << oracle.k << ": " << oracle.base_nontrivial << " of "
                      << oracle.base_classes << " classes have nontrivial H1\n";
            std::cout << "random-link heuristic for n=" << oracle.n << ": "
                      << heuristic_expectation(oracle.base_nontrivial, oracle.base_classes,
                                               oracle.n)
                      << "\n";
            if (!oracle_out.empty()) {
                oracle.cset.save(oracle_out);
                std::cout << "canonical set -> " << oracle_out << "\n";
            }
        }
    } catch (const std::logic_error& e) {
        std::cerr << "assertion failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
