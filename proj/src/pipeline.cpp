#include "sph/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "sph/adjacency.hpp"

namespace sph {

std::optional<GraphModel> parse_model(const std::string& name) {
    if (name == "rgg") return GraphModel::Rgg;
    if (name == "lattice") return GraphModel::Lattice;
    if (name == "ws") return GraphModel::Ws;
    return std::nullopt;
}

const char* model_name(GraphModel model) {
    switch (model) {
        case GraphModel::Rgg: return "rgg";
        case GraphModel::Lattice: return "lattice";
        case GraphModel::Ws: return "ws";
    }
    return "?";
}

SpatialGraph generate_graph(GraphModel model, const ModelParams& params, std::uint64_t seed) {
    switch (model) {
        case GraphModel::Rgg: return gen_rgg(params.n, params.radius, seed);
        case GraphModel::Lattice: return gen_lattice(params.side);
        case GraphModel::Ws: return gen_ws(params.n, params.k_each_side, params.p, seed);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown graph model");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t run, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                      static_cast<std::uint32_t>(run), static_cast<std::uint32_t>(run >> 32),
                      static_cast<std::uint32_t>(stream)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (std::uint64_t{out[0]} << 32) | out[1];
}

WtmRun run_wtm_pipeline(const SpatialGraph& graph, const WtmConfig& config) {
    const InfectionTimes times = run_wtm(graph, config);
    WtmRun run;
    run.diagram = compute_persistence(wtm_filtration(graph, times));
    run.h0 = feature_count(run.diagram, 0);
    run.h1 = feature_count(run.diagram, 1);
    run.h0_essential = essential_count(run.diagram, 0);
    run.never_infected_value = times.never_infected_value;
    return run;
}

FeatureStats feature_statistics(GraphModel model, std::size_t runs, std::uint64_t seed, const ModelParams& params,
                                WtmConfig wtm) {
    if (runs < 1) throw Error(ErrorKind::InvalidArgument, "runs must be >= 1");
    FeatureStats stats;
    stats.model = model;
    stats.runs = runs;
    std::optional<SpatialGraph> fixed;
    if (model == GraphModel::Lattice) fixed = generate_graph(model, params, 0);
    for (std::size_t r = 0; r < runs; ++r) {
        wtm.seed = derive_seed(seed, r, 1);
        if (fixed) {
            stats.per_run.push_back(run_wtm_pipeline(*fixed, wtm));
        } else {
            SpatialGraph g = generate_graph(model, params, derive_seed(seed, r, 0));
            stats.per_run.push_back(run_wtm_pipeline(g, wtm));
        }
    }
    auto moments = [&](auto field, double& mean, double& sd) {
        double sum = 0.0;
        for (const auto& run : stats.per_run) sum += static_cast<double>(field(run));
        mean = sum / static_cast<double>(runs);
        double ss = 0.0;
        for (const auto& run : stats.per_run) {
            double d = static_cast<double>(field(run)) - mean;
            ss += d * d;
        }
        sd = std::sqrt(ss / static_cast<double>(runs));
    };
    moments([](const WtmRun& r) { return r.h0; }, stats.h0_mean, stats.h0_std);
    moments([](const WtmRun& r) { return r.h1; }, stats.h1_mean, stats.h1_std);
    return stats;
}

void write_feature_stats(std::ostream& out, const FeatureStats& stats) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "model,runs,h0_mean,h0_std,h1_mean,h1_std\n%s,%zu,%.6g,%.6g,%.6g,%.6g\n",
                  model_name(stats.model), stats.runs, stats.h0_mean, stats.h0_std, stats.h1_mean, stats.h1_std);
    out << buf;
}

}  // namespace sph
