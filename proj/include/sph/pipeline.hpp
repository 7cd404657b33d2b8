#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sph/graph.hpp"
#include "sph/persistence.hpp"
#include "sph/wtm.hpp"

namespace sph {

enum class GraphModel { Rgg, Lattice, Ws };

std::optional<GraphModel> parse_model(const std::string& name);
const char* model_name(GraphModel model);

/// Defaults are the synthetic-network settings used for the feature-count table.
struct ModelParams {
    std::size_t n = 100;
    double radius = 0.1;
    std::size_t side = 10;
    std::size_t k_each_side = 2;
    double p = 0.1;
};

SpatialGraph generate_graph(GraphModel model, const ModelParams& params, std::uint64_t seed);

/// Deterministic per-run seed stream derived from (base, run, stream).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t run, std::uint64_t stream);

struct WtmRun {
    std::size_t h0 = 0;
    std::size_t h1 = 0;
    std::size_t h0_essential = 0;
    int never_infected_value = 0;
    PersistenceDiagram diagram;
};

/// Graph -> WTM -> adjacency filtration -> persistence.
WtmRun run_wtm_pipeline(const SpatialGraph& graph, const WtmConfig& config);

struct FeatureStats {
    GraphModel model = GraphModel::Lattice;
    std::size_t runs = 0;
    double h0_mean = 0.0;
    double h0_std = 0.0;
    double h1_mean = 0.0;
    double h1_std = 0.0;
    std::vector<WtmRun> per_run;
};

/// `runs` independent repetitions: a fresh graph per run for rgg and ws, the
/// fixed lattice otherwise, and a fresh seed set every run. Standard
/// deviations are population (divide by runs).
FeatureStats feature_statistics(GraphModel model, std::size_t runs, std::uint64_t seed,
                                const ModelParams& params = {}, WtmConfig wtm = {});

void write_feature_stats(std::ostream& out, const FeatureStats& stats);

}  // namespace sph
