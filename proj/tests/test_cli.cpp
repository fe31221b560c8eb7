#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "nobelnet/io.hpp"
#include "support.hpp"

namespace nn = nobelnet;

namespace {

struct RunResult {
    int status = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + NOBELNET_CLI " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::string kF1 = std::string(NOBELNET_DATA) + "/f1";
const std::string kF2 = std::string(NOBELNET_DATA) + "/f2";

}  // namespace

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run("").status == 2);                       // a subcommand is required
    CHECK(run("frobnicate").status == 2);             // unknown subcommand
    CHECK(run("validate --no-such-flag").status == 2);
    CHECK(run("centrality --data-dir " + kF1 + " --measure geometric").status == 2);
    CHECK(run("centrality --data-dir " + kF1 + " --year 1960").status == 2);  // before cohorts
    CHECK(run("baseline --data-dir " + kF1 + " --trials 1").status == 2);
    CHECK(run("fetch --source academic_tree --offline").status == 2);  // no ids
    CHECK(run("fetch --source wikipedia --ids A --offline").status == 2);
    CHECK(run("subgraph --data-dir " + kF1).status == 2);  // --root required
}

TEST_CASE("cli: validate") {
    auto ok = run("validate --data-dir " + kF1);
    CHECK(ok.status == 0);
    CHECK(ok.output == "0 errors, 0 warnings\n");

    testsup::TempDir tmp;
    {
        std::ofstream nodes(tmp.path() / "nodes.csv");
        nodes << "id,name,gender,laureate,prize_year,candidate,degree_year,degree_institution,"
                 "sources\n";
        nodes << "a,A,unknown,0,,0,,,m\nb,B,unknown,0,,0,,,m\n";
        std::ofstream edges(tmp.path() / "edges.csv");
        edges << "advisor_id,student_id,kind,source\na,b,phd,m\nb,a,phd,m\n";
    }
    auto bad = run("validate --data-dir " + tmp.path().string());
    CHECK(bad.status == 1);
    CHECK(bad.output.find("error cycle") != std::string::npos);
    CHECK(bad.output.find("1 errors, 0 warnings") != std::string::npos);

    // warnings alone stay admissible
    {
        std::ofstream nodes(tmp.path() / "nodes.csv");
        nodes << "id,name,gender,laureate,prize_year,candidate,degree_year,degree_institution,"
                 "sources\n";
        nodes << "a,A,unknown,0,,0,1960,,m\nb,B,unknown,0,,0,1950,,m\n";
        std::ofstream edges(tmp.path() / "edges.csv");
        edges << "advisor_id,student_id,kind,source\na,b,phd,m\n";
    }
    auto warn = run("validate --data-dir " + tmp.path().string());
    CHECK(warn.status == 0);
    CHECK(warn.output.find("warning chronology") != std::string::npos);
    CHECK(warn.output.find("0 errors, 1 warnings") != std::string::npos);

    CHECK(run("validate --data-dir /no/such/dir").status == 1);
}

TEST_CASE("cli: centrality tables on the fixture") {
    auto harmonic = run("centrality --data-dir " + kF1 + " --year 1975 --measure harmonic");
    CHECK(harmonic.status == 0);
    CHECK(harmonic.output ==
          "year,node_id,name,measure,score,rank\n"
          "1975,P,Paul Prime,harmonic,0.833333,1\n"
          "1975,A,Ada Alpha,harmonic,0.5,2\n"
          "1975,B,Ben Beta,harmonic,0,3\n"
          "1975,C,Cleo Gamma,harmonic,0,3\n");

    auto arithmetic = run("centrality --data-dir " + kF1 + " --measure arithmetic");
    CHECK(arithmetic.status == 0);
    CHECK(arithmetic.output.find("1975,P,Paul Prime,arithmetic,0.25,1\n") != std::string::npos);
    CHECK(arithmetic.output.find("1975,A,Ada Alpha,arithmetic,0.111111,2\n") !=
          std::string::npos);

    // default year is the last cohort year
    CHECK(run("centrality --data-dir " + kF1 + " --measure harmonic").output == harmonic.output);

    auto top = run("centrality --data-dir " + kF1 + " --measure harmonic --top 2");
    CHECK(top.status == 0);
    CHECK(top.output.find("Paul Prime") != std::string::npos);
    CHECK(top.output.find("Ben Beta") == std::string::npos);

    auto serial = run("centrality --data-dir " + kF1 + " --measure harmonic --serial");
    CHECK(serial.output == harmonic.output);

    auto history = run("centrality --data-dir " + kF1 + " --measure harmonic --history"
                       " --subjects P");
    CHECK(history.status == 0);
    CHECK(history.output ==
          "year,node_id,name,measure,score,rank\n"
          "1970,P,Paul Prime,harmonic,1,1\n"
          "1972,P,Paul Prime,harmonic,1,1\n"
          "1975,P,Paul Prime,harmonic,0.833333,1\n");
}

TEST_CASE("cli: timeline") {
    auto r = run("timeline --data-dir " + kF1);
    CHECK(r.status == 0);
    CHECK(r.output ==
          "year,nodes_added,edges_added,total,components\n"
          "1972,1,1,2,1\n"
          "1975,1,1,2,1\n");
}

TEST_CASE("cli: universities") {
    auto r = run("universities --data-dir " + kF1 + " --top-k 2");
    CHECK(r.status == 0);
    CHECK(r.output.find("1975,U1,2.5,0.526316\n") != std::string::npos);
    CHECK(r.output.find("1975,U2,1.25,0.263158\n") != std::string::npos);
    CHECK(r.output.find("1975,rest,1,0.210526\n") != std::string::npos);

    auto all = run("universities --data-dir " + kF1 + " --top-k 10");
    CHECK(all.output.find("1975,U3,1,0.210526\n") != std::string::npos);
    CHECK(all.output.find("rest") == std::string::npos);
}

TEST_CASE("cli: build summary and full expansion") {
    auto r = run("build --data-dir " + kF1);
    CHECK(r.status == 0);
    CHECK(r.output ==
          "year,nodes,edges,laureates,components\n"
          "1970,2,1,1,1\n"
          "1972,3,2,2,1\n"
          "1975,4,3,3,1\n");

    auto full = run("build --data-dir " + kF1 + " --full");
    CHECK(full.status == 0);
    CHECK(full.output ==
          "year,nodes,edges,laureates,components\n"
          "1975,4,3,3,1\n");

    // --save-dir dumps the snapshot of the resolved year (here 1970: A and P)
    testsup::TempDir tmp;
    auto saved =
        run("build --data-dir " + kF1 + " --year 1970 --save-dir " + tmp.path().string());
    CHECK(saved.status == 0);
    REQUIRE(std::filesystem::exists(tmp.path() / "nodes.csv"));
    auto y1970 = nn::io::load_dataset_dir(tmp.path());
    CHECK(y1970.persons.size() == 2);
}

TEST_CASE("cli: subgraph export") {
    auto dot = run("subgraph --data-dir " + kF1 + " --root A");
    CHECK(dot.status == 0);
    CHECK(dot.output.find("digraph genealogy {") == 0);
    CHECK(dot.output.find("\"A\" -> \"C\"") != std::string::npos);
    CHECK(dot.output.find("fillcolor=magenta") != std::string::npos);
    CHECK(dot.output.find("\"B\"") == std::string::npos);  // not a descendant of A

    auto plain = run("subgraph --data-dir " + kF1 + " --root A --no-highlight");
    CHECK(plain.output.find("magenta") == std::string::npos);

    auto xml = run("subgraph --data-dir " + kF1 + " --root P --format graphml");
    CHECK(xml.status == 0);
    CHECK(xml.output.find("<node id=\"A\">") != std::string::npos);
    CHECK(xml.output.find("<edge source=\"P\" target=\"B\">") != std::string::npos);

    CHECK(run("subgraph --data-dir " + kF1 + " --root nobody").status == 1);

    // -o writes the same bytes into a file, creating directories as needed
    testsup::TempDir tmp;
    auto out_file = tmp.path() / "nested" / "a.dot";
    auto to_file = run("subgraph --data-dir " + kF1 + " --root A -o " + out_file.string());
    CHECK(to_file.status == 0);
    CHECK(slurp(out_file) == dot.output);
}

TEST_CASE("cli: candidates and the counterfactual table") {
    auto r = run("candidates --data-dir " + kF2 + " --ids X --mode both");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "year,node_id,name,mode,score\n"
          "1975,X,Xena Chi,network,0.458333\n"
          "1975,X,Xena Chi,laureates,0.5\n");

    // --all-flagged picks up the candidate flag from the dataset
    auto flagged = run("candidates --data-dir " + kF2 + " --all-flagged --mode laureates");
    CHECK(flagged.output.find("1975,X,Xena Chi,laureates,0.5\n") != std::string::npos);

    testsup::TempDir tmp;
    auto cf = tmp.path() / "cf.csv";
    auto r2 = run("candidates --data-dir " + kF2 + " --year 1972 --ids X --counterfactual " +
                  cf.string());
    CHECK(r2.status == 0);
    // before: P 1, A 2, B 2 (A and B tie at zero); marking X promotes C
    CHECK(slurp(cf) ==
          "node_id,rank_before,rank_after,delta\n"
          "P,1,1,0\n"
          "A,2,3,1\n"
          "B,2,4,2\n");

    CHECK(run("candidates --data-dir " + kF2).status == 2);  // no ids, no flag
}

TEST_CASE("cli: baseline writes histogram and band files deterministically") {
    testsup::TempDir tmp;
    const std::string hist = (tmp.path() / "h.csv").string();
    const std::string band = (tmp.path() / "b.csv").string();
    const std::string args = "baseline --data-dir " + kF1 + " --trials 5 --seed 42 --hist-out " +
                             hist + " --band-out " + band;
    CHECK(run(args).status == 0);
    CHECK(slurp(hist) == "length,count\n1,1\n");
    auto band1 = slurp(band);
    CHECK(band1.find("length,lower,upper\n") == 0);

    auto hist1 = slurp(hist);
    CHECK(run(args).status == 0);
    CHECK(slurp(hist) == hist1);
    CHECK(slurp(band) == band1);
}

TEST_CASE("cli: offline fetch from the shipped cache") {
    const std::string cache = std::string(NOBELNET_DATA) + "/cache";
    auto r = run("fetch --source academic_tree --cache " + cache + " --offline --ids C --depth 5");
    CHECK(r.status == 0);
    CHECK(r.output == "records 3\ngaps 0\n");

    testsup::TempDir tmp;
    auto merged_dir = tmp.path() / "merged";
    auto m = run("fetch --source academic_tree --cache " + cache +
                 " --offline --ids C --depth 5 --merge-dir " + merged_dir.string());
    CHECK(m.status == 0);
    auto ds = nn::io::load_dataset_dir(merged_dir);
    CHECK(ds.persons.size() == 3);
    CHECK(ds.edges.size() == 2);
    CHECK(nn::validate(ds).admissible());

    // uncached id offline -> reported as a gap, not a crash
    auto miss = run("fetch --source math_genealogy --cache " + cache + " --offline --ids C");
    CHECK(miss.status == 0);
    CHECK(miss.output == "records 0\ngaps 1\ngap C\n");
}

TEST_CASE("cli: data dir via environment variable and config file") {
    auto env = run("centrality --measure harmonic", "NOBELNET_DATA_DIR=" + kF1);
    CHECK(env.status == 0);
    CHECK(env.output.find("1975,P,Paul Prime,harmonic,0.833333,1\n") != std::string::npos);

    testsup::TempDir tmp;
    auto cfg = tmp.path() / "nobelnet.ini";
    {
        std::ofstream out(cfg);
        out << "[centrality]\n";
        out << "data-dir=\"" << kF1 << "\"\n";
        out << "measure=harmonic\n";
    }
    auto from_cfg = run("--config " + cfg.string() + " centrality");
    CHECK(from_cfg.status == 0);
    CHECK(from_cfg.output.find("1975,P,Paul Prime,harmonic,0.833333,1\n") != std::string::npos);
}

TEST_CASE("cli: overlay flows through every consumer") {
    auto r = run("centrality --data-dir " + kF1 + " --overlay " + kF1 +
                 "/overlay.csv --year 1975 --measure harmonic");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "year,node_id,name,measure,score,rank\n"
          "1975,A,Ada Alpha,harmonic,0.5,1\n"
          "1975,P,Paul Prime,harmonic,0.5,1\n"
          "1975,Q,,harmonic,0.277778,3\n"
          "1975,B,Ben Beta,harmonic,0,4\n"
          "1975,C,Cleo Gamma,harmonic,0,4\n");
}
