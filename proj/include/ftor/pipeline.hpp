#ifndef FTOR_PIPELINE_HPP
#define FTOR_PIPELINE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "ftor/canon.hpp"
#include "ftor/graph.hpp"

namespace ftor {

// One Table-style row: per-stage survivor counts and wall time for one n.
struct PipelineStats {
    int n = 0;
    std::uint64_t connected = 0;
    std::uint64_t tame = 0;
    std::uint64_t cyclic_links = 0;
    std::uint64_t torsion = 0;
    std::uint64_t irreducible = 0;
    std::array<double, 5> seconds{};

    std::uint64_t count(int stage) const;
    bool weakly_decreasing() const;
};

// Lookup table answering "is H1(Cl(lk v)) nontrivial" through canonical
// codes: all k-vertex graphs (k = n-4) with nontrivial clique H1, padded
// with isolated vertices to n vertices.
struct LinkOracle {
    int n = 0;
    int k = 0;
    std::uint64_t base_classes = 0;     // k-vertex isomorphism classes scanned
    std::uint64_t base_nontrivial = 0;  // of which H1 is nontrivial
    CanonicalSet cset;
};

// Scans every k-vertex class by brute force. Requires 8 <= n <= 16.
LinkOracle build_link_oracle(int n);

// True iff every padded link of g has its canonical code in the oracle.
// g must be tame and match the oracle's vertex count; otherwise a link
// could exceed k vertices and the table would be silently wrong.
bool has_cyclic_links(const Graph& g, const LinkOracle& oracle);

// Torsion in H1(Cl(g)) and no single vertex deletion keeps it.
bool is_irreducible_torsion(const Graph& g);

// (base/total)^n: the independent-random-links sanity constant.
double heuristic_expectation(std::uint64_t base_size, std::uint64_t total_size, int n);

struct PipelineConfig {
    int workers = 0;              // 0 = hardware concurrency
    int checkpoint_every = 16;    // jobs between manifest updates
    bool extended = false;        // permits n >= 11 full runs
};

// Individual stages. Each reads/writes graph6 line files, resumes from its
// manifest checkpoint when interrupted, appends a row to the per-n stats
// file, and is a no-op returning recorded counts when already complete.
// Returned pair is (graphs in, graphs kept) and each stage asserts its own
// invariants, throwing std::logic_error on violation.
struct StageResult {
    std::uint64_t scanned = 0;
    std::uint64_t kept = 0;
    double seconds = 0;
    bool reused = false;  // counts came from a completed earlier run
};

StageResult run_gen_stage(int n, int dmin, int dmax, const std::string& out,
                          const std::string& stats_path, const PipelineConfig& cfg);
StageResult run_tame_stage(int n, const std::string& in, const std::string& out,
                           const std::string& stats_path, const PipelineConfig& cfg);
StageResult run_links_stage(int n, const std::string& in, const std::string& out,
                            const std::string& stats_path, const PipelineConfig& cfg);
StageResult run_torsion_stage(int n, const std::string& in, const std::string& out,
                              const std::string& stats_path, const PipelineConfig& cfg);
// kset: canonical codes of the (n-1)-vertex irreducible graphs, required at
// n = 12 where the definitional filter is cross-checked against deletion
// into the known irreducible list.
StageResult run_irreducible_stage(int n, const std::string& in, const std::string& out,
                                  const std::string& stats_path, const PipelineConfig& cfg,
                                  const CanonicalSet* kset = nullptr);

// The full cascade for one n inside checkpoint_dir, reusing completed
// stages. For n <= 10 the connected stream is materialized; for n = 11 the
// generation is fused with the tame filter (the full connected file would
// be tens of gigabytes); for n = 12 generation runs degree-bounded [4, 8],
// which is exactly the tame class, and the connected-graph column is the
// published count. n >= 11 requires cfg.extended.
PipelineStats run_stage_table(int n, const std::string& checkpoint_dir,
                              const PipelineConfig& cfg);

// Same cascade stopped after `last_stage` (0 gen, 1 tame, 2 links,
// 3 torsion, 4 irreducible); later counts stay zero.
PipelineStats run_stage_table_through(int n, const std::string& checkpoint_dir,
                                      const PipelineConfig& cfg, int last_stage);

// Stage file naming inside a checkpoint directory.
std::string stage_file(const std::string& dir, const std::string& stage, int n);

}  // namespace ftor

#endif
