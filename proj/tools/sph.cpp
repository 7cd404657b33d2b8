// sph: persistent homology of spatial systems from the command line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sph/adjacency.hpp"
#include "sph/clustering.hpp"
#include "sph/complex.hpp"
#include "sph/distance.hpp"
#include "sph/graph.hpp"
#include "sph/levelset.hpp"
#include "sph/persistence.hpp"
#include "sph/pipeline.hpp"
#include "sph/render.hpp"
#include "sph/wtm.hpp"

namespace fs = std::filesystem;

namespace {

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) throw sph::Error(sph::ErrorKind::Io, "cannot read '" + path + "'");
    return in;
}

// Writes to `path`, or stdout when the path is empty or "-".
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sph::Error(sph::ErrorKind::Io, "cannot write '" + path + "'");
    write(out);
    if (!out) throw sph::Error(sph::ErrorKind::Io, "write failed for '" + path + "'");
}

// Status lines go to stdout unless stdout carries the payload.
std::ostream& status(const std::string& out_path) {
    return (out_path.empty() || out_path == "-") ? std::cerr : std::cout;
}

sph::SpatialGraph load_graph(const std::string& path) {
    auto in = open_in(path);
    return sph::read_graph(in);
}

sph::BinaryImage load_binary(const std::string& path, int cutoff, std::size_t scale) {
    auto in = open_in(path, std::ios::binary);
    sph::PnmImage img = sph::read_pnm(in);
    sph::BinaryImage bin = img.is_bitmap ? std::move(img.bitmap) : sph::threshold_image(img.graymap, cutoff);
    return scale > 1 ? sph::upscale(bin, scale) : bin;
}

struct GenArgs {
    std::string model;
    sph::ModelParams params;
    std::optional<std::uint64_t> seed;
    std::string out;
};

struct WtmArgs {
    std::string graph;
    sph::WtmConfig config;
    std::string out;
};

struct PhArgs {
    std::string graph;
    std::string times;
    bool node_values = false;
    bool edge_values = false;
    std::string image;
    int cutoff = sph::kDefaultCutoff;
    std::size_t scale = 1;
    std::string complex;
    std::string dump_complex;
    std::string out;
};

struct Table1Args {
    std::string model;
    std::size_t runs = 100;
    std::uint64_t seed = 0;
    sph::ModelParams params;
    sph::WtmConfig config;
    std::string out;
};

struct CompareArgs {
    std::vector<std::string> diagrams;
    std::vector<std::string> labels;
    std::vector<int> dims{0, 1};
    std::string out;
};

struct ClusterArgs {
    std::string matrix;
    std::size_t k = 2;
    std::string dendrogram_out;
    std::string assignment_out;
};

struct RenderArgs {
    std::string input;
    std::string out;
};

struct ThresholdArgs {
    std::string image;
    int cutoff = sph::kDefaultCutoff;
    std::string out;
};

void cmd_gen(const GenArgs& a) {
    auto model = sph::parse_model(a.model);
    if (!model) throw sph::Error(sph::ErrorKind::InvalidArgument, "unknown model '" + a.model + "'");
    if (*model != sph::GraphModel::Lattice && !a.seed)
        throw sph::Error(sph::ErrorKind::InvalidArgument, "--seed is required for " + a.model);
    sph::SpatialGraph g = sph::generate_graph(*model, a.params, a.seed.value_or(0));
    emit(a.out, [&](std::ostream& o) { sph::write_graph(o, g); });
    status(a.out) << "nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
}

void cmd_wtm(const WtmArgs& a) {
    sph::SpatialGraph g = load_graph(a.graph);
    sph::InfectionTimes t = sph::run_wtm(g, a.config);
    emit(a.out, [&](std::ostream& o) { sph::write_times(o, t); });
    std::size_t infected = 0;
    for (sph::NodeId v = 0; v < g.node_count(); ++v) infected += t.infected(v) ? 1 : 0;
    status(a.out) << "seeds " << t.seed_count() << " infected " << infected << " of " << g.node_count()
                  << " last_step " << t.never_infected_value - 1 << '\n';
}

void cmd_ph(const PhArgs& a) {
    const int sources = (!a.graph.empty() ? 1 : 0) + (!a.image.empty() ? 1 : 0) + (!a.complex.empty() ? 1 : 0);
    if (sources != 1)
        throw sph::Error(sph::ErrorKind::InvalidArgument, "give exactly one of --graph, --image, --complex");
    sph::FilteredComplex complex;
    if (!a.graph.empty()) {
        const int forms = (!a.times.empty() ? 1 : 0) + (a.node_values ? 1 : 0) + (a.edge_values ? 1 : 0);
        if (forms != 1)
            throw sph::Error(sph::ErrorKind::InvalidArgument,
                             "with --graph give exactly one of --times, --node-values, --edge-values");
        sph::SpatialGraph g = load_graph(a.graph);
        if (!a.times.empty()) {
            auto in = open_in(a.times);
            complex = sph::wtm_filtration(g, sph::read_times(in));
        } else if (a.node_values) {
            complex = sph::node_value_filtration(g);
        } else {
            complex = sph::edge_value_filtration(g);
        }
    } else if (!a.image.empty()) {
        complex = sph::levelset_complex(load_binary(a.image, a.cutoff, a.scale));
    } else {
        auto in = open_in(a.complex);
        complex = sph::read_complex(in);
    }
    if (!a.dump_complex.empty()) emit(a.dump_complex, [&](std::ostream& o) { sph::write_complex(o, complex); });
    sph::PersistenceDiagram d = sph::compute_persistence(complex);
    emit(a.out, [&](std::ostream& o) { sph::write_diagram(o, d); });
    status(a.out) << "simplices " << complex.size() << " H0 " << sph::feature_count(d, 0) << " H1 "
                  << sph::feature_count(d, 1) << '\n';
}

void cmd_table1(const Table1Args& a) {
    auto model = sph::parse_model(a.model);
    if (!model) throw sph::Error(sph::ErrorKind::InvalidArgument, "unknown model '" + a.model + "'");
    sph::FeatureStats stats = sph::feature_statistics(*model, a.runs, a.seed, a.params, a.config);
    emit(a.out, [&](std::ostream& o) { sph::write_feature_stats(o, stats); });
}

void cmd_compare(const CompareArgs& a) {
    if (a.diagrams.size() < 2) throw sph::Error(sph::ErrorKind::InvalidArgument, "need at least two diagrams");
    if (!a.labels.empty() && a.labels.size() != a.diagrams.size())
        throw sph::Error(sph::ErrorKind::InvalidArgument, "--labels must match the number of diagrams");
    std::vector<sph::PersistenceDiagram> diagrams;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < a.diagrams.size(); ++i) {
        const std::string& path = a.diagrams[i];
        try {
            auto in = open_in(path);
            diagrams.push_back(sph::read_diagram(in));
        } catch (const sph::Error& e) {
            throw sph::Error(e.kind(), path + ": " + e.what());
        }
        labels.push_back(a.labels.empty() ? fs::path(path).stem().string() : a.labels[i]);
    }
    sph::DistanceMatrix m = sph::pairwise_matrix(diagrams, labels, a.dims);
    emit(a.out, [&](std::ostream& o) { sph::write_matrix(o, m); });
}

void cmd_cluster(const ClusterArgs& a) {
    auto in = open_in(a.matrix);
    sph::DistanceMatrix m = sph::read_matrix(in);
    if (a.k < 1 || a.k > m.size())
        throw sph::Error(sph::ErrorKind::InvalidK, "k must be in [1, " + std::to_string(m.size()) + "]");
    sph::Dendrogram d = sph::average_linkage(m);
    for (const auto& w : d.warnings) std::cerr << "warning: " << w << '\n';
    std::vector<int> assignment = sph::cut(d, a.k);
    if (!a.dendrogram_out.empty()) emit(a.dendrogram_out, [&](std::ostream& o) { sph::write_dendrogram(o, d); });
    emit(a.assignment_out, [&](std::ostream& o) { sph::write_assignment(o, m.labels, assignment); });
}

void cmd_render(const RenderArgs& a) {
    auto in = open_in(a.input);
    std::string first;
    while (std::getline(in, first) && (first.empty() || first[0] == '#')) {
    }
    in.clear();
    in.seekg(0);
    if (first.rfind("dim,birth,death", 0) == 0) {
        sph::PersistenceDiagram d = sph::read_diagram(in);
        emit(a.out, [&](std::ostream& o) { sph::render_diagram_svg(o, d); });
    } else if (first.rfind("leaves", 0) == 0) {
        sph::Dendrogram d = sph::read_dendrogram(in);
        emit(a.out, [&](std::ostream& o) { sph::render_dendrogram_svg(o, d); });
    } else {
        throw sph::Error(sph::ErrorKind::Parse, "'" + a.input + "' is neither a diagram nor a dendrogram");
    }
}

void cmd_threshold(const ThresholdArgs& a) {
    auto in = open_in(a.image, std::ios::binary);
    sph::PnmImage img = sph::read_pnm(in);
    sph::BinaryImage bin = img.is_bitmap ? std::move(img.bitmap) : sph::threshold_image(img.graymap, a.cutoff);
    emit(a.out, [&](std::ostream& o) { sph::write_pbm(o, bin); });
    status(a.out) << "foreground " << bin.foreground_count() << " of " << bin.width * bin.height << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Persistent homology of spatial systems"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a synthetic spatial graph");
    g->add_option("model", gen.model, "rgg, lattice or ws")->required()->check(CLI::IsMember({"rgg", "lattice", "ws"}));
    g->add_option("--n", gen.params.n, "Node count (rgg, ws)")->capture_default_str();
    g->add_option("--radius", gen.params.radius, "Connection radius (rgg)")->capture_default_str();
    g->add_option("--side", gen.params.side, "Grid side (lattice)")->capture_default_str();
    g->add_option("--k", gen.params.k_each_side, "Neighbours on each side (ws)")->capture_default_str();
    g->add_option("--p", gen.params.p, "Rewiring probability (ws)")->capture_default_str();
    g->add_option("--seed", gen.seed, "Random seed (required for rgg, ws)");
    g->add_option("-o,--out", gen.out, "Output graph file (default stdout)");

    WtmArgs wtm;
    auto* w = app.add_subcommand("wtm", "Run the Watts threshold model on a graph");
    w->add_option("graph", wtm.graph, "Graph file")->required();
    w->add_option("--rho0", wtm.config.rho0, "Initially infected fraction")->capture_default_str();
    w->add_option("--threshold", wtm.config.threshold, "Adoption threshold")->capture_default_str();
    w->add_option("--seed", wtm.config.seed, "Random seed")->required();
    w->add_option("-o,--out", wtm.out, "Output times file (default stdout)");

    PhArgs ph;
    auto* p = app.add_subcommand("ph", "Build a filtration and compute its persistence diagram");
    p->add_option("--graph", ph.graph, "Graph file (adjacency construction)");
    p->add_option("--times", ph.times, "Infection-times file for --graph");
    p->add_flag("--node-values", ph.node_values, "Use the graph's node values");
    p->add_flag("--edge-values", ph.edge_values, "Use the graph's edge values");
    p->add_option("--image", ph.image, "PBM/PGM image (level-set construction)");
    p->add_option("--cutoff", ph.cutoff, "Grayscale cutoff for --image")->capture_default_str()->check(CLI::Range(0, 255));
    p->add_option("--scale", ph.scale, "Integer upscaling factor for --image")->capture_default_str()->check(CLI::PositiveNumber);
    p->add_option("--complex", ph.complex, "Filtered complex text file");
    p->add_option("--dump-complex", ph.dump_complex, "Also write the filtered complex here");
    p->add_option("-o,--out", ph.out, "Output diagram file (default stdout)");

    Table1Args t1;
    auto* t = app.add_subcommand("table1", "Feature-count statistics of WTM filtrations on a graph model");
    t->add_option("model", t1.model, "rgg, lattice or ws")->required()->check(CLI::IsMember({"rgg", "lattice", "ws"}));
    t->add_option("--runs", t1.runs, "Number of runs")->capture_default_str()->check(CLI::PositiveNumber);
    t->add_option("--seed", t1.seed, "Base random seed")->required();
    t->add_option("--n", t1.params.n, "Node count (rgg, ws)")->capture_default_str();
    t->add_option("--radius", t1.params.radius, "Connection radius (rgg)")->capture_default_str();
    t->add_option("--side", t1.params.side, "Grid side (lattice)")->capture_default_str();
    t->add_option("--k", t1.params.k_each_side, "Neighbours on each side (ws)")->capture_default_str();
    t->add_option("--p", t1.params.p, "Rewiring probability (ws)")->capture_default_str();
    t->add_option("--rho0", t1.config.rho0, "Initially infected fraction")->capture_default_str();
    t->add_option("--threshold", t1.config.threshold, "Adoption threshold")->capture_default_str();
    t->add_option("-o,--out", t1.out, "Output report (default stdout)");

    CompareArgs cmp;
    auto* c = app.add_subcommand("compare", "Pairwise bottleneck distances between diagrams");
    c->add_option("diagrams", cmp.diagrams, "Diagram files")->required()->expected(2, -1);
    c->add_option("--labels", cmp.labels, "Comma-separated row labels (default: file stems)")->delimiter(',');
    c->add_option("--dims", cmp.dims, "Homology dimensions, aggregated by max")
        ->delimiter(',')
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    c->add_option("-o,--out", cmp.out, "Output matrix file (default stdout)");

    ClusterArgs cl;
    auto* k = app.add_subcommand("cluster", "Average-linkage clustering of a distance matrix");
    k->add_option("matrix", cl.matrix, "Distance matrix file")->required();
    k->add_option("-k,--k", cl.k, "Number of clusters")->required();
    k->add_option("--dendrogram", cl.dendrogram_out, "Output dendrogram file");
    k->add_option("-o,--out", cl.assignment_out, "Output assignment file (default stdout)");

    RenderArgs rd;
    auto* r = app.add_subcommand("render", "Render a diagram or dendrogram as SVG");
    r->add_option("input", rd.input, "Diagram or dendrogram file")->required();
    r->add_option("-o,--out", rd.out, "Output SVG (default stdout)");

    ThresholdArgs th;
    auto* h = app.add_subcommand("threshold", "Threshold a grayscale image into a bitmap");
    h->add_option("image", th.image, "PGM/PBM image")->required();
    h->add_option("--cutoff", th.cutoff, "Pixels darker than this are foreground")->capture_default_str()->check(CLI::Range(0, 255));
    h->add_option("-o,--out", th.out, "Output PBM (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*g) cmd_gen(gen);
        else if (*w) cmd_wtm(wtm);
        else if (*p) cmd_ph(ph);
        else if (*t) cmd_table1(t1);
        else if (*c) cmd_compare(cmp);
        else if (*k) cmd_cluster(cl);
        else if (*r) cmd_render(rd);
        else if (*h) cmd_threshold(th);
    } catch (const sph::Error& e) {
        std::cerr << "sph: " << sph::to_string(e.kind()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "sph: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
