#include "ftor/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ftor/generate.hpp"
#include "ftor/homology.hpp"
#include "ftor/parallel.hpp"

namespace fs = std::filesystem;

namespace ftor {

std::uint64_t PipelineStats::count(int stage) const {
    switch (stage) {
        case 0: return connected;
        case 1: return tame;
        case 2: return cyclic_links;
        case 3: return torsion;
        default: return irreducible;
    }
}

bool PipelineStats::weakly_decreasing() const {
    for (int s = 0; s + 1 < 5; ++s)
        if (count(s + 1) > count(s)) return false;
    return true;
}

LinkOracle build_link_oracle(int n) {
    if (n < 8 || n > kMaxVertices)
        throw std::invalid_argument("build_link_oracle: need 8 <= n <= 16");
    LinkOracle oracle;
    oracle.n = n;
    oracle.k = n - 4;
    std::vector<CanonicalCode> codes;
    generate_all(oracle.k, 0, oracle.k - 1, [&](const Graph& g) {
        ++oracle.base_classes;
        if (h1_nontrivial(g)) {
            ++oracle.base_nontrivial;
            Graph padded = g;
            padded.n = n;
            codes.push_back(canonical_form(padded));
        }
    });
    oracle.cset = CanonicalSet(std::move(codes));
    return oracle;
}

bool has_cyclic_links(const Graph& g, const LinkOracle& oracle) {
    if (g.n != oracle.n)
        throw std::invalid_argument("has_cyclic_links: graph size does not match oracle");
    if (!is_tame(g))
        throw std::invalid_argument("has_cyclic_links: graph is not tame; a link could exceed " +
                                    std::to_string(oracle.k) + " vertices");
    for (int v = 0; v < g.n; ++v)
        if (!oracle.cset.contains(link_padded(g, v))) return false;
    return true;
}

bool is_irreducible_torsion(const Graph& g) {
    if (!has_h1_torsion(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (has_h1_torsion(delete_vertex(g, v))) return false;
    return true;
}

double heuristic_expectation(std::uint64_t base_size, std::uint64_t total_size, int n) {
    if (n == 0) return 1.0;
    if (total_size == 0) throw std::invalid_argument("heuristic_expectation: empty class total");
    return std::pow(static_cast<double>(base_size) / static_cast<double>(total_size), n);
}

std::string stage_file(const std::string& dir, const std::string& stage, int n) {
    return dir + "/stage_" + stage + "_n" + std::to_string(n) + ".g6";
}

namespace {

constexpr std::uint64_t kBlockLines = 2048;

int effective_workers(const PipelineConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

struct Manifest {
    std::string kind;
    int n = 0, dmin = 0, dmax = 0, seed_level = 0;
    std::uint64_t block_lines = 0;
    std::uint64_t jobs_done = 0;
    std::uint64_t bytes_flushed = 0;
    std::uint64_t scanned = 0;
    std::uint64_t kept = 0;
    double seconds = 0;

    bool same_params(const Manifest& o) const {
        return kind == o.kind && n == o.n && dmin == o.dmin && dmax == o.dmax &&
               seed_level == o.seed_level && block_lines == o.block_lines;
    }
};

void save_manifest(const std::string& path, const Manifest& m) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint manifest " + tmp);
        out << "ftor-manifest v1\n"
            << "kind " << m.kind << "\nn " << m.n << "\ndmin " << m.dmin << "\ndmax " << m.dmax
            << "\nseed_level " << m.seed_level << "\nblock_lines " << m.block_lines
            << "\njobs_done " << m.jobs_done << "\nbytes_flushed " << m.bytes_flushed
            << "\nscanned " << m.scanned << "\nkept " << m.kept << "\nseconds " << m.seconds
            << "\n";
        if (!out.flush()) throw std::runtime_error("write failure on manifest " + tmp);
    }
    fs::rename(tmp, path);
}

std::optional<Manifest> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string header;
    std::getline(in, header);
    if (header != "ftor-manifest v1")
        throw std::runtime_error("unrecognized manifest format in " + path);
    Manifest m;
    std::string key;
    while (in >> key) {
        if (key == "kind")
            in >> m.kind;
        else if (key == "n")
            in >> m.n;
        else if (key == "dmin")
            in >> m.dmin;
        else if (key == "dmax")
            in >> m.dmax;
        else if (key == "seed_level")
            in >> m.seed_level;
        else if (key == "block_lines")
            in >> m.block_lines;
        else if (key == "jobs_done")
            in >> m.jobs_done;
        else if (key == "bytes_flushed")
            in >> m.bytes_flushed;
        else if (key == "scanned")
            in >> m.scanned;
        else if (key == "kept")
            in >> m.kept;
        else if (key == "seconds")
            in >> m.seconds;
        else
            throw std::runtime_error("unknown manifest key '" + key + "' in " + path);
    }
    return m;
}

struct StatsRow {
    std::string stage;
    int n = 0;
    int dmin = -1;  // -1 for filter stages
    int dmax = -1;
    std::uint64_t scanned = 0;
    std::uint64_t kept = 0;
    double seconds = 0;
};

std::optional<StatsRow> stats_lookup(const std::string& path, const std::string& stage, int n,
                                     int dmin, int dmax) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    StatsRow row;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        if (ss >> row.stage >> row.n >> row.dmin >> row.dmax >> row.scanned >> row.kept >>
            row.seconds) {
            if (row.stage == stage && row.n == n && row.dmin == dmin && row.dmax == dmax)
                return row;
        }
    }
    return std::nullopt;
}

void stats_append(const std::string& path, const StatsRow& row) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to stats file " + path);
    out << row.stage << '\t' << row.n << '\t' << row.dmin << '\t' << row.dmax << '\t'
        << row.scanned << '\t' << row.kept << '\t' << row.seconds << '\n';
    if (!out.flush()) throw std::runtime_error("write failure on stats file " + path);
}

// Append-only stage output with an atomic manifest; a killed run resumes at
// the last checkpoint and reproduces the same bytes.
class CheckpointedWriter {
public:
    CheckpointedWriter(std::string final_path, Manifest params, int checkpoint_every)
        : final_path_(std::move(final_path)),
          part_path_(final_path_ + ".part"),
          manifest_path_(final_path_ + ".manifest"),
          state_(std::move(params)),
          checkpoint_every_(checkpoint_every < 1 ? 1 : checkpoint_every) {
        if (auto prev = load_manifest(manifest_path_)) {
            if (!prev->same_params(state_))
                throw std::runtime_error("checkpoint " + manifest_path_ +
                                         " was written with different parameters; remove it or "
                                         "rerun with the original arguments");
            state_ = *prev;
            if (!fs::exists(part_path_))
                throw std::runtime_error("manifest " + manifest_path_ + " without partial file");
            fs::resize_file(part_path_, state_.bytes_flushed);
        } else {
            std::ofstream(part_path_, std::ios::trunc);
            save_manifest(manifest_path_, state_);
        }
        out_.open(part_path_, std::ios::in | std::ios::out | std::ios::binary);
        if (!out_) throw std::runtime_error("cannot open stage output " + part_path_);
        out_.seekp(0, std::ios::end);
        session_start_ = std::chrono::steady_clock::now();
    }

    std::uint64_t jobs_done() const { return state_.jobs_done; }
    std::uint64_t scanned() const { return state_.scanned; }
    std::uint64_t kept() const { return state_.kept; }

    void append(WorkPiece&& piece) {
        out_.write(piece.lines.data(), static_cast<std::streamsize>(piece.lines.size()));
        if (!out_) throw std::runtime_error("write failure on " + part_path_);
        state_.scanned += piece.scanned;
        state_.kept += piece.kept;
        state_.bytes_flushed += piece.lines.size();
        ++state_.jobs_done;
        if (state_.jobs_done % static_cast<std::uint64_t>(checkpoint_every_) == 0) checkpoint();
    }

    double finalize() {
        checkpoint();
        out_.close();
        fs::rename(part_path_, final_path_);
        fs::remove(manifest_path_);
        return elapsed();
    }

private:
    double elapsed() const {
        return state_.seconds;
    }

    void checkpoint() {
        if (!out_.flush()) throw std::runtime_error("flush failure on " + part_path_);
        auto now = std::chrono::steady_clock::now();
        state_.seconds += std::chrono::duration<double>(now - session_start_).count();
        session_start_ = now;
        save_manifest(manifest_path_, state_);
    }

    std::string final_path_, part_path_, manifest_path_;
    Manifest state_;
    int checkpoint_every_;
    std::ofstream out_;
    std::chrono::steady_clock::time_point session_start_;
};

using GraphPredicate = std::function<bool(const Graph&)>;

StageResult gen_stage_impl(const std::string& stage_name, int n, int dmin, int dmax,
                           const std::string& out, const std::string& stats_path,
                           const PipelineConfig& cfg, const GraphPredicate& keep) {
    if (dmax > n - 1) dmax = n - 1;
    if (auto row = stats_lookup(stats_path, stage_name, n, dmin, dmax); row && fs::exists(out))
        return {row->scanned, row->kept, row->seconds, true};

    int seed_level = n >= 11 ? 8 : 7;
    if (seed_level >= n) seed_level = n - 1;

    std::vector<Graph> seeds;
    if (seed_level >= 1)
        seeds = connected_seeds(seed_level, dmax);
    else
        seeds.push_back(empty_graph(1));  // n == 1: the lone job emits K1 itself

    Manifest params;
    params.kind = "gen:" + stage_name;
    params.n = n;
    params.dmin = dmin;
    params.dmax = dmax;
    params.seed_level = seed_level;
    CheckpointedWriter writer(out, params, cfg.checkpoint_every);

    auto job = [&](std::size_t i) {
        WorkPiece piece;
        expand_connected_subtree(seeds[i], n, dmin, dmax, [&](const Graph& g) {
            ++piece.scanned;
            if (!keep || keep(g)) {
                ++piece.kept;
                piece.lines += to_graph6(g);
                piece.lines += '\n';
            }
        });
        return piece;
    };
    run_ordered(writer.jobs_done(), seeds.size(), effective_workers(cfg), job,
                [&](std::size_t, WorkPiece&& piece) { writer.append(std::move(piece)); });

    StageResult res{writer.scanned(), writer.kept(), 0, false};
    res.seconds = writer.finalize();
    stats_append(stats_path, {stage_name, n, dmin, dmax, res.scanned, res.kept, res.seconds});
    return res;
}

StageResult filter_stage_impl(const std::string& stage_name, int n, const std::string& in_path,
                              const std::string& out, const std::string& stats_path,
                              const PipelineConfig& cfg, const GraphPredicate& keep) {
    if (auto row = stats_lookup(stats_path, stage_name, n, -1, -1); row && fs::exists(out))
        return {row->scanned, row->kept, row->seconds, true};
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("missing stage input " + in_path);

    Manifest params;
    params.kind = "filter:" + stage_name;
    params.n = n;
    params.block_lines = kBlockLines;
    CheckpointedWriter writer(out, params, cfg.checkpoint_every);

    // Skip input already consumed by a previous session.
    std::string line;
    for (std::uint64_t skip = writer.jobs_done() * kBlockLines; skip > 0; --skip)
        if (!std::getline(in, line))
            throw std::runtime_error("stage input " + in_path + " shorter than checkpoint");

    std::mutex err_mtx;
    std::string error;
    auto map = [&](std::uint64_t, std::string&& block) {
        WorkPiece piece;
        try {
            std::size_t pos = 0;
            while (pos < block.size()) {
                std::size_t eol = block.find('\n', pos);
                if (eol == std::string::npos) eol = block.size();
                if (eol > pos) {
                    Graph g = from_graph6(block.substr(pos, eol - pos));
                    ++piece.scanned;
                    if (keep(g)) {
                        ++piece.kept;
                        piece.lines.append(block, pos, eol - pos);
                        piece.lines += '\n';
                    }
                }
                pos = eol + 1;
            }
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lk(err_mtx);
            if (error.empty()) error = e.what();
        }
        return piece;
    };
    {
        StreamPipeline pipe(effective_workers(cfg), map,
                            [&](std::uint64_t, WorkPiece&& piece) { writer.append(std::move(piece)); });
        std::string block;
        std::uint64_t lines_in_block = 0;
        while (std::getline(in, line)) {
            block += line;
            block += '\n';
            if (++lines_in_block == kBlockLines) {
                pipe.push(std::move(block));
                block.clear();
                lines_in_block = 0;
            }
        }
        if (lines_in_block) pipe.push(std::move(block));
        pipe.finish();
    }
    if (!error.empty()) throw std::logic_error("stage " + stage_name + ": " + error);

    StageResult res{writer.scanned(), writer.kept(), 0, false};
    res.seconds = writer.finalize();
    stats_append(stats_path, {stage_name, n, -1, -1, res.scanned, res.kept, res.seconds});
    return res;
}

// Direct (oracle-free) check that every link has nontrivial clique H1.
bool links_nontrivial_direct(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (!h1_nontrivial(induced(g, g.adj[v]))) return false;
    return true;
}

}  // namespace

StageResult run_gen_stage(int n, int dmin, int dmax, const std::string& out,
                          const std::string& stats_path, const PipelineConfig& cfg) {
    return gen_stage_impl("gen", n, dmin, dmax, out, stats_path, cfg, nullptr);
}

StageResult run_tame_stage(int n, const std::string& in, const std::string& out,
                           const std::string& stats_path, const PipelineConfig& cfg) {
    return filter_stage_impl("tame", n, in, out, stats_path, cfg,
                             [](const Graph& g) { return is_tame(g); });
}

StageResult run_links_stage(int n, const std::string& in, const std::string& out,
                            const std::string& stats_path, const PipelineConfig& cfg) {
    // Built on first use so reruns of a completed stage skip the base scan.
    struct Lazy {
        std::once_flag once;
        LinkOracle oracle;
    };
    auto lazy = std::make_shared<Lazy>();
    return filter_stage_impl("links", n, in, out, stats_path, cfg, [lazy, n](const Graph& g) {
        std::call_once(lazy->once, [&] { lazy->oracle = build_link_oracle(n); });
        return has_cyclic_links(g, lazy->oracle);
    });
}

StageResult run_torsion_stage(int n, const std::string& in, const std::string& out,
                              const std::string& stats_path, const PipelineConfig& cfg) {
    auto keep = [](const Graph& g) {
        if (!has_h1_torsion(g)) return false;
        // Every torsion survivor must be connected, tame, with cyclic links
        // (checked directly, not through the oracle).
        if (!is_connected(g) || !is_tame(g) || !links_nontrivial_direct(g))
            throw std::logic_error(
                "torsion survivor violates the connected/tame/cyclic-links invariant: " +
                to_graph6(g));
        return true;
    };
    return filter_stage_impl("torsion", n, in, out, stats_path, cfg, keep);
}

StageResult run_irreducible_stage(int n, const std::string& in, const std::string& out,
                                  const std::string& stats_path, const PipelineConfig& cfg,
                                  const CanonicalSet* kset) {
    if (n == 12 && (!kset || kset->size() == 0))
        throw std::invalid_argument(
            "irreducible stage at n = 12 needs the 11-vertex irreducible list for its "
            "cross-check; run the n = 11 table first");
    auto keep = [n, kset](const Graph& g) {
        if (!has_h1_torsion(g)) return false;  // stray non-torsion input
        bool irreducible = true;
        for (int v = 0; v < g.n && irreducible; ++v)
            if (has_h1_torsion(delete_vertex(g, v))) irreducible = false;
        if (n == 12 && kset) {
            // A reducible 12-vertex torsion graph must lose a vertex to one
            // of the known 11-vertex irreducible graphs, and vice versa.
            bool hits_kset = false;
            for (int v = 0; v < g.n && !hits_kset; ++v)
                if (kset->contains(delete_vertex(g, v))) hits_kset = true;
            if (irreducible == hits_kset)
                throw std::logic_error(
                    "reducibility disagreement between the definitional filter and the "
                    "11-vertex list on " +
                    to_graph6(g));
        }
        return irreducible;
    };
    return filter_stage_impl("irreducible", n, in, out, stats_path, cfg, keep);
}

PipelineStats run_stage_table_through(int n, const std::string& dir, const PipelineConfig& cfg,
                                      int last_stage) {
    if (n < 8 || n > 12)
        throw std::invalid_argument("run_stage_table: supported vertex counts are 8..12");
    if (n >= 11 && !cfg.extended)
        throw std::invalid_argument("run_stage_table: n >= 11 is an extended run; enable it "
                                    "explicitly (--extended)");
    if (last_stage < 0 || last_stage > 4)
        throw std::invalid_argument("run_stage_table: stage index out of range");
    fs::create_directories(dir);
    std::string stats_path = dir + "/stats_n" + std::to_string(n) + ".tsv";

    PipelineStats st;
    st.n = n;
    std::string tame_file = stage_file(dir, "tame", n);
    if (n <= 10) {
        std::string gen_file = stage_file(dir, "gen", n);
        StageResult gen = run_gen_stage(n, 0, n - 1, gen_file, stats_path, cfg);
        st.connected = gen.kept;
        st.seconds[0] = gen.seconds;
        if (last_stage < 1) return st;
        StageResult tame = run_tame_stage(n, gen_file, tame_file, stats_path, cfg);
        st.tame = tame.kept;
        st.seconds[1] = tame.seconds;
    } else if (n == 11) {
        // Fused generate+tame: the full connected stream would be ~11 GB.
        StageResult fused = gen_stage_impl("gentame", n, 0, n - 1, tame_file, stats_path, cfg,
                                           [](const Graph& g) { return is_tame(g); });
        st.connected = fused.scanned;
        st.tame = fused.kept;
        st.seconds[0] = fused.seconds;
    } else {
        // Degree bounds [4, 8] are exactly tameness at n = 12. The connected
        // count is not recomputed; it is the published value for this row.
        StageResult bounded = gen_stage_impl("tamedirect", n, 4, n - 4, tame_file, stats_path, cfg,
                                             nullptr);
        st.connected = 164059830476ull;
        st.tame = bounded.kept;
        st.seconds[1] = bounded.seconds;
    }
    if (last_stage < 2) return st;

    std::string links_file = stage_file(dir, "links", n);
    StageResult links = run_links_stage(n, tame_file, links_file, stats_path, cfg);
    st.cyclic_links = links.kept;
    st.seconds[2] = links.seconds;
    if (last_stage < 3) return st;

    std::string torsion_file = stage_file(dir, "torsion", n);
    StageResult torsion = run_torsion_stage(n, links_file, torsion_file, stats_path, cfg);
    st.torsion = torsion.kept;
    st.seconds[3] = torsion.seconds;
    if (last_stage < 4) return st;

    CanonicalSet kset;
    const CanonicalSet* kset_ptr = nullptr;
    if (n == 12) {
        std::string kfile = stage_file(dir, "irreducible", 11);
        if (!fs::exists(kfile))
            throw std::runtime_error("n = 12 needs " + kfile + "; run the n = 11 table first");
        std::ifstream kin(kfile);
        std::vector<Graph> kgraphs;
        std::string line;
        while (std::getline(kin, line))
            if (!line.empty()) kgraphs.push_back(from_graph6(line));
        kset = CanonicalSet::from_graphs(kgraphs);
        kset_ptr = &kset;
    }
    std::string irr_file = stage_file(dir, "irreducible", n);
    StageResult irr = run_irreducible_stage(n, torsion_file, irr_file, stats_path, cfg, kset_ptr);
    st.irreducible = irr.kept;
    st.seconds[4] = irr.seconds;

    if (!st.weakly_decreasing())
        throw std::logic_error("stage counts are not weakly decreasing at n = " +
                               std::to_string(n));
    return st;
}

PipelineStats run_stage_table(int n, const std::string& dir, const PipelineConfig& cfg) {
    return run_stage_table_through(n, dir, cfg, 4);
}

}  // namespace ftor
