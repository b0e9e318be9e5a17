#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "mlp/generate.hpp"
#include "mlp/io.hpp"
#include "mlp/report.hpp"

using namespace mlp;
using namespace mlp::testing;

namespace {

ParsedInstance parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance_stream(in, "<test>");
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("parse_instance: minimal matrix") {
    const ParsedInstance p = parse_text(
        "MLP 1\n"
        "TYPE matrix\n"
        "N 2\n"
        "START 0\n"
        "0 1.5\n"
        "1.5 0\n");
    REQUIRE(p.kind == InstanceKind::Matrix);
    CHECK(p.metric->n == 2);
    CHECK(p.metric->dist(0, 1) == doctest::Approx(1.5));
    CHECK(p.metric->metric_flag);
}

TEST_CASE("parse_instance: tree file with comments") {
    const ParsedInstance p = parse_text(
        "# a two-edge path\n"
        "MLP 1\n"
        "TYPE tree\n"
        "N 3\n"
        "START 0\n"
        "EDGE 0 1 1   # first\n"
        "EDGE 1 2 2\n");
    REQUIRE(p.kind == InstanceKind::Tree);
    CHECK(p.to_metric().dist(0, 2) == doctest::Approx(3.0));
}

TEST_CASE("parse_instance: line file and penalties") {
    const ParsedInstance p = parse_text(
        "MLP 1\n"
        "TYPE line\n"
        "N 3\n"
        "START 0\n"
        "-3 9 -27\n"
        "PENALTY 1 2.5\n");
    REQUIRE(p.kind == InstanceKind::Line);
    CHECK(p.line->coords == std::vector<double>{-3.0, 9.0, -27.0});
    const auto pen = p.metric_penalties();
    REQUIRE(pen.size() == 4);  // start appended as vertex 0
    CHECK(pen[line_point_vertex(*p.line, 1)] == doctest::Approx(2.5));
}

TEST_CASE("parse_instance: diagnostics carry line numbers") {
    SUBCASE("asymmetric matrix names the offending pair") {
        try {
            parse_text(
                "MLP 1\nTYPE matrix\nN 2\nSTART 0\n"
                "0 1\n"
                "2 0\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("asymmetric") != std::string::npos);
            CHECK(msg.find("(0,1)") != std::string::npos);
        }
    }
    SUBCASE("unknown TYPE") {
        CHECK_THROWS_AS(parse_text("MLP 1\nTYPE donut\nN 1\nSTART 0\n"), ParseError);
    }
    SUBCASE("negative weight") {
        CHECK_THROWS_AS(
            parse_text("MLP 1\nTYPE tree\nN 2\nSTART 0\nEDGE 0 1 -1\n"), ParseError);
    }
    SUBCASE("cyclic edges") {
        CHECK_THROWS_AS(parse_text("MLP 1\nTYPE tree\nN 3\nSTART 0\n"
                                   "EDGE 0 1 1\nEDGE 1 0 1\n"),
                        ParseError);
    }
    SUBCASE("negative penalty") {
        CHECK_THROWS_AS(parse_text("MLP 1\nTYPE line\nN 1\nSTART 0\n1\nPENALTY 0 -2\n"),
                        ParseError);
    }
}

TEST_CASE("write/parse round trip") {
    SUBCASE("tree") {
        const TreeInstance t = gen_tree(9, 4);
        std::ostringstream os;
        write_instance(os, t);
        std::istringstream is(os.str());
        const ParsedInstance p = parse_instance_stream(is, "<roundtrip>");
        REQUIRE(p.kind == InstanceKind::Tree);
        CHECK(p.tree->n == t.n);
        for (std::size_t i = 0; i < t.edges.size(); ++i) {
            CHECK(p.tree->edges[i].u == t.edges[i].u);
            CHECK(p.tree->edges[i].v == t.edges[i].v);
            CHECK(p.tree->edges[i].w == t.edges[i].w);  // %.17g is lossless
        }
    }
    SUBCASE("matrix with penalties") {
        const MetricInstance m = gen_metric(6, 8);
        std::vector<double> pen(6, 0.0);
        pen[2] = 0.75;
        std::ostringstream os;
        write_instance(os, m, pen);
        std::istringstream is(os.str());
        const ParsedInstance p = parse_instance_stream(is, "<roundtrip>");
        CHECK(p.metric->d == m.d);
        CHECK(p.penalties == pen);
    }
    SUBCASE("line") {
        const LineInstance l = gen_line(7, 15);
        std::ostringstream os;
        write_instance(os, l);
        std::istringstream is(os.str());
        const ParsedInstance p = parse_instance_stream(is, "<roundtrip>");
        CHECK(p.line->coords == l.coords);
        CHECK(p.line->start == l.start);
    }
}

TEST_CASE("csv formatting") {
    SUBCASE("number formatting: '.' separator, 9 significant digits") {
        CHECK(format_number(1.0) == "1");
        CHECK(format_number(69.0) == "69");
        CHECK(format_number(0.123456789123) == "0.123456789");
        CHECK(format_number(1234567891.23) == "1.23456789e+09");
    }
    SUBCASE("row and summary layout") {
        RunRecord r;
        r.instance_id = "metric-8-0";
        r.algorithm = "mlt-144";
        r.value = 4.5;
        r.oracle_value = 1.5;
        r.ratio = 3.0;
        r.bound = 144.0;
        r.elapsed_ms = 2;
        r.seed = 0;
        CHECK(to_csv_row(r) == "metric-8-0,mlt-144,4.5,1.5,3,144,2,0");
        r.bound_empirical = true;
        CHECK(to_csv_row(r) == "metric-8-0,mlt-144,4.5,1.5,3,empirical:144,2,0");
        r.bound_empirical = false;

        const std::string csv = render_csv({r});
        CHECK(csv.find(kCsvHeader) == 0);
        CHECK(csv.find("summary-max,mlt-144,,,3,144,,\n") != std::string::npos);
        CHECK(csv.find("summary-mean,mlt-144,,,3,144,,\n") != std::string::npos);
    }
    SUBCASE("proven vs empirical violations") {
        RunRecord ok;
        ok.algorithm = "mlt-72";
        ok.ratio = 3.0;
        ok.bound = 72.0;
        RunRecord bad = ok;
        bad.ratio = 100.0;
        CHECK_FALSE(any_proven_bound_violation({ok}));
        CHECK(any_proven_bound_violation({ok, bad}));
        bad.bound_empirical = true;
        CHECK_FALSE(any_proven_bound_violation({ok, bad}));
    }
}

// ---------------------------------------------------------------------------
// CLI end-to-end (binary path provided by ctest through MLP_CLI).
// ---------------------------------------------------------------------------

namespace {

struct CliRunner {
    std::string bin;
    std::filesystem::path dir;

    static CliRunner make() {
        const char* bin = std::getenv("MLP_CLI");
        CliRunner r;
        r.bin = bin ? bin : "";
        r.dir = std::filesystem::temp_directory_path() / "mlp_cli_test";
        std::filesystem::create_directories(r.dir);
        return r;
    }

    int run(const std::string& args, const std::string& log = "cli.log") const {
        const std::string cmd = bin + " " + args + " > " + (dir / log).string() + " 2>&1";
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    }

    std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("cli: gen/solve/bench round trip") {
    CliRunner cli = CliRunner::make();
    if (cli.bin.empty()) {
        MESSAGE("MLP_CLI not set; skipping CLI end-to-end checks");
        return;
    }

    SUBCASE("gen writes parseable, deterministic files") {
        REQUIRE(cli.run("gen --kind tree --n 7 --seed 3 --out " + cli.path("a.mlp")) == 0);
        REQUIRE(cli.run("gen --kind tree --n 7 --seed 3 --out " + cli.path("b.mlp")) == 0);
        CHECK(slurp(cli.path("a.mlp")) == slurp(cli.path("b.mlp")));
        const ParsedInstance p = parse_instance(cli.path("a.mlp"));
        CHECK(p.kind == InstanceKind::Tree);
        CHECK(p.tree->n == 7);
    }
    SUBCASE("solve --verify on the power-line fixture") {
        {
            std::ofstream f(cli.path("line.mlp"));
            f << "MLP 1\nTYPE line\nN 3\nSTART 0\n-3 9 -27\n";
        }
        REQUIRE(cli.run("solve --in " + cli.path("line.mlp") + " --algo line-dp --verify",
                        "solve.log") == 0);
        const std::string out = slurp(cli.path("solve.log"));
        CHECK(out.find("value: 69") != std::string::npos);
        CHECK(out.find("ratio: 1") != std::string::npos);
    }
    SUBCASE("solve rejects incompatible algorithm/instance pairs") {
        REQUIRE(cli.run("gen --kind tree --n 6 --seed 1 --out " + cli.path("w.mlp")) == 0);
        CHECK(cli.run("solve --in " + cli.path("w.mlp") + " --algo dfs") == 3);
        CHECK(cli.run("solve --in " + cli.path("w.mlp") + " --algo line-dp") == 3);
    }
    SUBCASE("solve --algo dfs on the unit star scores 9") {
        {
            std::ofstream f(cli.path("star.mlp"));
            f << "MLP 1\nTYPE tree\nN 4\nSTART 0\nEDGE 0 1 1\nEDGE 0 2 1\nEDGE 0 3 1\n";
        }
        REQUIRE(cli.run("solve --in " + cli.path("star.mlp") + " --algo dfs --verify",
                        "star.log") == 0);
        CHECK(slurp(cli.path("star.log")).find("value: 9") != std::string::npos);
    }
    SUBCASE("solve --algo mlt-72 --verify exits 0 on a seeded n=8 instance") {
        REQUIRE(cli.run("gen --kind metric --n 8 --seed 12 --out " + cli.path("m8.mlp")) == 0);
        CHECK(cli.run("solve --in " + cli.path("m8.mlp") + " --algo mlt-72 --verify") == 0);
    }
    SUBCASE("bench: deterministic apart from elapsed_ms, header-only for 0 seeds") {
        const std::string args = "bench --kind metric --n 6 --seeds 4 --algos mlt-144,mlt-72"
                                 " --out ";
        REQUIRE(cli.run(args + cli.path("r1.csv")) == 0);
        REQUIRE(cli.run(args + cli.path("r2.csv")) == 0);
        auto strip_elapsed = [](const std::string& csv) {
            std::istringstream in(csv);
            std::string line, out;
            while (std::getline(in, line)) {
                // elapsed_ms is the 7th column
                int col = 0;
                std::string kept;
                std::istringstream ls(line);
                std::string cell;
                while (std::getline(ls, cell, ',')) {
                    if (col++ == 6) cell = "_";
                    kept += cell + ",";
                }
                out += kept + "\n";
            }
            return out;
        };
        CHECK(strip_elapsed(slurp(cli.path("r1.csv"))) ==
              strip_elapsed(slurp(cli.path("r2.csv"))));

        REQUIRE(cli.run("bench --kind metric --n 6 --seeds 0 --algos bf --out " +
                        cli.path("empty.csv")) == 0);
        CHECK(slurp(cli.path("empty.csv")) == std::string(kCsvHeader) + "\n");
    }
    SUBCASE("analyze --itree-table") {
        REQUIRE(cli.run("gen --kind tree --n 5 --seed 9 --out " + cli.path("t.mlp")) == 0);
        REQUIRE(cli.run("analyze --itree-table --in " + cli.path("t.mlp") + " --out " +
                        cli.path("table.csv")) == 0);
        const std::string csv = slurp(cli.path("table.csv"));
        CHECK(csv.find("i,cost") == 0);
        CHECK(csv.find("1,0") != std::string::npos);
    }
}
