#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "sph/clustering.hpp"
#include "sph/distance.hpp"
#include "sph/graph.hpp"
#include "sph/levelset.hpp"
#include "sph/persistence.hpp"
#include "sph/wtm.hpp"

namespace fs = std::filesystem;

namespace {

struct Workdir {
    fs::path dir;
    Workdir() {
        dir = fs::temp_directory_path() / ("sph_cli_" + std::to_string(std::rand()) + "_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Workdir() { fs::remove_all(dir); }
    std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
    std::string cmd = std::string(SPH_BINARY) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

template <class T, class F>
T load(const std::string& path, F reader) {
    std::ifstream in(path);
    REQUIRE(in);
    return reader(in);
}

sph::PersistenceDiagram diagram_at(const std::string& path) {
    return load<sph::PersistenceDiagram>(path, [](std::istream& in) { return sph::read_diagram(in); });
}

}  // namespace

TEST_CASE("cli gen") {
    Workdir w;
    REQUIRE(run("gen rgg --n 100 --radius 0.1 --seed 7 -o " + (w / "r.graph")) == 0);
    auto r = load<sph::SpatialGraph>(w / "r.graph", [](std::istream& in) { return sph::read_graph(in); });
    CHECK(r.node_count() == 100);
    REQUIRE(run("gen lattice --side 10 -o " + (w / "l.graph")) == 0);
    auto l = load<sph::SpatialGraph>(w / "l.graph", [](std::istream& in) { return sph::read_graph(in); });
    CHECK(l.node_count() == 100);
    CHECK(l.edge_count() == 180);
    REQUIRE(run("gen ws --n 100 --k 2 --p 0.1 --seed 7 -o " + (w / "w.graph")) == 0);
    auto ws = load<sph::SpatialGraph>(w / "w.graph", [](std::istream& in) { return sph::read_graph(in); });
    CHECK(ws.edge_count() == 200);

    REQUIRE(run("gen rgg --n 100 --radius 0.1 --seed 7 -o " + (w / "r2.graph")) == 0);
    CHECK(slurp(w / "r.graph") == slurp(w / "r2.graph"));
    CHECK(run("gen rgg --n 10") != 0);
    CHECK(run("gen torus --seed 1") != 0);
}

TEST_CASE("cli wtm and ph on the lattice") {
    Workdir w;
    REQUIRE(run("gen lattice --side 10 -o " + (w / "l.graph")) == 0);
    REQUIRE(run("wtm " + (w / "l.graph") + " --seed 3 -o " + (w / "t.csv")) == 0);
    auto t = load<sph::InfectionTimes>(w / "t.csv", [](std::istream& in) { return sph::read_times(in); });
    CHECK(t.seed_count() == 5);

    REQUIRE(run("wtm " + (w / "l.graph") + " --seed 3 --threshold 0 -o " + (w / "t0.csv")) == 0);
    auto t0 = load<sph::InfectionTimes>(w / "t0.csv", [](std::istream& in) { return sph::read_times(in); });
    for (sph::NodeId v = 0; v < 100; ++v) CHECK(t0.infected(v));

    REQUIRE(run("wtm " + (w / "l.graph") + " --seed 3 --rho0 1.0 -o " + (w / "t1.csv")) == 0);
    auto t1 = load<sph::InfectionTimes>(w / "t1.csv", [](std::istream& in) { return sph::read_times(in); });
    for (int x : t1.time) CHECK(x == 0);

    REQUIRE(run("ph --graph " + (w / "l.graph") + " --times " + (w / "t.csv") + " -o " + (w / "d.csv")) == 0);
    CHECK(sph::feature_count(diagram_at(w / "d.csv"), 1) == 81);

    CHECK(run("ph --graph " + (w / "l.graph")) != 0);
    CHECK(run("ph --graph " + (w / "l.graph") + " --node-values") != 0);
    CHECK(run("wtm " + (w / "missing.graph") + " --seed 1") != 0);
}

TEST_CASE("cli ph on a single valued node and on an image") {
    Workdir w;
    {
        std::ofstream g(w / "one.graph");
        g << "nodes 1\n0 0.5 0.5 0\nedges 0\n";
    }
    REQUIRE(run("ph --graph " + (w / "one.graph") + " --node-values -o " + (w / "d.csv")) == 0);
    auto d = diagram_at(w / "d.csv");
    CHECK(d.features == std::vector<sph::PersistenceFeature>{{0, 0.0, sph::kInfinity}});

    {
        std::ofstream img(w / "ring.pbm");
        img << "P1\n9 9\n";
        for (int y = 0; y < 9; ++y) {
            for (int x = 0; x < 9; ++x) {
                bool on = (x >= 1 && x <= 7 && (y == 1 || y == 7)) || (y >= 1 && y <= 7 && (x == 1 || x == 7));
                img << (on ? "1 " : "0 ");
            }
            img << '\n';
        }
    }
    REQUIRE(run("ph --image " + (w / "ring.pbm") + " -o " + (w / "ring.csv")) == 0);
    auto rd = diagram_at(w / "ring.csv");
    REQUIRE(rd.in_dimension(1).size() == 1);
    CHECK(rd.in_dimension(1)[0].death == 3.0);
    REQUIRE(run("ph --image " + (w / "ring.pbm") + " --scale 2 -o " + (w / "ring2.csv")) == 0);
    CHECK(diagram_at(w / "ring2.csv").in_dimension(1).size() == 1);
}

TEST_CASE("cli table1") {
    Workdir w;
    REQUIRE(run("table1 lattice --runs 20 --seed 1 -o " + (w / "l.csv")) == 0);
    std::string l = slurp(w / "l.csv");
    CHECK(l.rfind("model,runs,h0_mean,h0_std,h1_mean,h1_std\n", 0) == 0);
    CHECK(l.find("lattice,20,") != std::string::npos);
    CHECK(l.find(",81,0\n") != std::string::npos);
    REQUIRE(run("table1 ws --runs 1 --seed 1 -o " + (w / "w.csv")) == 0);
    std::string ws = slurp(w / "w.csv");
    std::istringstream rows(ws.substr(ws.find('\n') + 1));
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(rows, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 6);
    CHECK(std::stod(cells[3]) == 0.0);
    CHECK(std::stod(cells[5]) == 0.0);
    REQUIRE(run("table1 ws --runs 1 --seed 1 -o " + (w / "w2.csv")) == 0);
    CHECK(slurp(w / "w2.csv") == ws);
}

TEST_CASE("cli compare, cluster and render") {
    Workdir w;
    {
        std::ofstream a(w / "a.csv"), c(w / "c.csv");
        a << "dim,birth,death\n0,0,inf\n0,0,2\n1,1,3\n";
        c << "dim,birth,death\n0,0,inf\n1,1,5\n";
    }
    REQUIRE(run("compare " + (w / "a.csv") + " " + (w / "a.csv") + " --labels x,y -o " + (w / "m2.csv")) == 0);
    auto m2 = load<sph::DistanceMatrix>(w / "m2.csv", [](std::istream& in) { return sph::read_matrix(in); });
    CHECK(m2(0, 1) == 0.0);

    REQUIRE(run("compare " + (w / "a.csv") + " " + (w / "a.csv") + " " + (w / "c.csv") + " -o " + (w / "m3.csv")) == 0);
    auto m3 = load<sph::DistanceMatrix>(w / "m3.csv", [](std::istream& in) { return sph::read_matrix(in); });
    CHECK(m3.size() == 3);
    CHECK(m3(0, 2) == 2.0);
    CHECK(m3(2, 0) == 2.0);
    REQUIRE(run("compare " + (w / "a.csv") + " " + (w / "c.csv") + " --dims 0 -o " + (w / "m0.csv")) == 0);
    auto m0 = load<sph::DistanceMatrix>(w / "m0.csv", [](std::istream& in) { return sph::read_matrix(in); });
    CHECK(m0(0, 1) == 1.0);

    {
        std::ofstream m(w / "three.csv");
        m << ",p,q,r\np,0,1,10\nq,1,0,10\nr,10,10,0\n";
    }
    REQUIRE(run("cluster " + (w / "three.csv") + " -k 2 --dendrogram " + (w / "tree.txt") + " -o " + (w / "k2.csv")) == 0);
    CHECK(slurp(w / "k2.csv") == "label,cluster\np,0\nq,0\nr,1\n");
    REQUIRE(run("cluster " + (w / "three.csv") + " -k 1 -o " + (w / "k1.csv")) == 0);
    CHECK(slurp(w / "k1.csv") == "label,cluster\np,0\nq,0\nr,0\n");
    REQUIRE(run("cluster " + (w / "three.csv") + " -k 3 -o " + (w / "k3.csv")) == 0);
    CHECK(slurp(w / "k3.csv") == "label,cluster\np,0\nq,1\nr,2\n");
    CHECK(run("cluster " + (w / "three.csv") + " -k 4") != 0);

    REQUIRE(run("render " + (w / "a.csv") + " -o " + (w / "a.svg")) == 0);
    std::string svg = slurp(w / "a.svg");
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("class=\"infinity\"") != std::string::npos);
    CHECK(svg.find("class=\"h1\"") != std::string::npos);
    {
        std::ofstream e(w / "empty.csv");
        e << "dim,birth,death\n";
    }
    REQUIRE(run("render " + (w / "empty.csv") + " -o " + (w / "e.svg")) == 0);
    std::string esvg = slurp(w / "e.svg");
    CHECK(esvg.find("class=\"diagonal\"") != std::string::npos);
    CHECK(esvg.find("<circle") == std::string::npos);
    {
        std::ofstream m(w / "two.csv");
        m << ",p,q\np,0,3\nq,3,0\n";
    }
    REQUIRE(run("cluster " + (w / "two.csv") + " -k 1 --dendrogram " + (w / "t2.txt") + " -o " + (w / "a2.csv")) == 0);
    REQUIRE(run("render " + (w / "t2.txt") + " -o " + (w / "t2.svg")) == 0);
    std::string tsvg = slurp(w / "t2.svg");
    CHECK(tsvg.find("class=\"merge\"") != std::string::npos);
    CHECK(tsvg.find("class=\"merge\"", tsvg.find("class=\"merge\"") + 1) == std::string::npos);
}

TEST_CASE("cli threshold") {
    Workdir w;
    {
        std::ofstream g(w / "g.pgm");
        g << "P2\n3 1\n255\n0 205 255\n";
    }
    REQUIRE(run("threshold " + (w / "g.pgm") + " -o " + (w / "b.pbm")) == 0);
    auto b = load<sph::PnmImage>(w / "b.pbm", [](std::istream& in) { return sph::read_pnm(in); });
    CHECK(b.is_bitmap);
    CHECK(b.bitmap.mask == std::vector<std::uint8_t>{1, 0, 0});
    REQUIRE(run("threshold " + (w / "g.pgm") + " --cutoff 206 -o " + (w / "b2.pbm")) == 0);
    auto b2 = load<sph::PnmImage>(w / "b2.pbm", [](std::istream& in) { return sph::read_pnm(in); });
    CHECK(b2.bitmap.mask == std::vector<std::uint8_t>{1, 1, 0});
}

TEST_CASE("cli end-to-end pipeline") {
    Workdir w;
    std::string diagrams;
    for (int s = 1; s <= 3; ++s) {
        const std::string g = w / ("g" + std::to_string(s) + ".graph");
        const std::string t = w / ("t" + std::to_string(s) + ".csv");
        const std::string d = w / ("d" + std::to_string(s) + ".csv");
        REQUIRE(run("gen rgg --seed " + std::to_string(s) + " -o " + g) == 0);
        REQUIRE(run("wtm " + g + " --seed " + std::to_string(s) + " -o " + t) == 0);
        REQUIRE(run("ph --graph " + g + " --times " + t + " -o " + d) == 0);
        diagrams += d + " ";
    }
    REQUIRE(run("compare " + diagrams + "-o " + (w / "m.csv")) == 0);
    REQUIRE(run("cluster " + (w / "m.csv") + " -k 2 -o " + (w / "k.csv")) == 0);
    CHECK(slurp(w / "k.csv").rfind("label,cluster\n", 0) == 0);
}
