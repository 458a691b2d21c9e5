#include "doctest.h"
#include "test_util.hpp"

#include <fstream>
#include <sstream>

#include "tautilt/cli.hpp"

using namespace tautilt;
using namespace testutil;

namespace {

const PrimeField F2{2};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CommandRequest base_request(const std::string& cmd, const std::string& spec, int bound) {
    CommandRequest req;
    req.subcommand = cmd;
    req.spec_path = data_path(spec);
    req.dim_bound = bound;
    return req;
}

}  // namespace

TEST_CASE("representation documents round-trip through parsing") {
    const World& w = world_cycle3();
    for (const auto& r : w.cat.corpus) {
        Doc d = rep_doc(r);
        Rep<PrimeField> back = rep_from_doc(w.A, d);
        CHECK(rep_doc(back).dump(2) == d.dump(2));
        CHECK(back.dims == r.dims);
    }
}

TEST_CASE("catalog and pairs documents round-trip through parsing") {
    const World& w = world_a2();
    Doc cd = catalog_doc(w.cat);
    Catalog<PrimeField> back = catalog_from_doc(w.A, cd);
    CHECK(catalog_doc(back).dump(2) == cd.dump(2));
    CHECK(back.tau_rigid == w.cat.tau_rigid);

    Doc pd = pairs_doc(w.cat, w.pairs);
    auto pairs_back = pairs_from_doc(w.cat, pd);
    CHECK(pairs_doc(w.cat, pairs_back).dump(2) == pd.dump(2));
}

TEST_CASE("emitted documents survive a parse cycle byte-for-byte") {
    const World& w = world_a2();
    ExchangeGraph<PrimeField> g = w.graph;
    auto seqs = enumerate_mgs(g);
    std::vector<PLPath> paths;
    for (const auto& s : seqs) paths.push_back(mgs_to_path(w.cat, g, s));

    for (const Doc& d : {fan_doc(w.cat, w.fan), graph_doc(w.cat, g),
                         mgs_doc(w.cat, g, seqs, paths)}) {
        std::string bytes = d.dump(2);
        CHECK(Doc::parse(bytes).dump(2) == bytes);
    }
}

TEST_CASE("cmd pairs is deterministic and matches the golden transcription") {
    CommandRequest req = base_request("pairs", "cycle3.json", 3);
    std::string once = run_command_text(req);
    std::string twice = run_command_text(req);
    CHECK(once == twice);
    CHECK(once == slurp(golden_path("cycle3_pairs.json")));
}

TEST_CASE("cmd mgs on A2 reports the two sequences with exact parameters") {
    CommandRequest req = base_request("mgs", "a2.json", 1);
    Doc d = Doc::parse(run_command_text(req));
    CHECK(d.at("count").get<int>() == 2);
    for (const auto& s : d.at("sequences"))
        for (const auto& c : s.at("path").at("crossings"))
            CHECK(c.at("sign").get<std::string>() == "green");
}

TEST_CASE("cmd markoff produces the verdict with all checks passing") {
    CommandRequest req = base_request("markoff", "markoff.json", 2);
    req.family_n_max = 2;
    req.separation_walls = 5;
    Doc d = Doc::parse(run_command_text(req));
    CHECK(d.at("detected").get<bool>());
    CHECK(d.at("witness").at("verdict_applies").get<bool>());
    CHECK(d.at("wall_formulas_pass").get<bool>());
    CHECK(d.at("separation_demo").at("pass").get<bool>());
    CHECK(d.at("wall_lifting").at("pass").get<bool>());
    CHECK_FALSE(d.at("green_chain_probe").at("complete_green_chain_found").get<bool>());
}

TEST_CASE("cmd markoff on a plain cycle reports no pattern") {
    CommandRequest req = base_request("markoff", "cycle3.json", 1);
    Doc d = Doc::parse(run_command_text(req));
    CHECK_FALSE(d.at("detected").get<bool>());
}

TEST_CASE("svg emitters: planar counts for A2, stereographic counts for the 3-cycle") {
    {
        CommandRequest req = base_request("fan", "a2.json", 1);
        req.format = "svg";
        std::string svg = run_command_text(req);
        size_t lines = 0, pos = 0;
        while ((pos = svg.find("<line", pos)) != std::string::npos) {
            ++lines;
            pos += 5;
        }
        CHECK(lines == 5);  // two axes as double rays plus the (1,-1) ray
    }
    {
        CommandRequest req = base_request("fan", "cycle3.json", 3);
        req.format = "svg";
        std::string svg = run_command_text(req);
        size_t walls = 0, points = 0, pos = 0;
        while ((pos = svg.find("<g id=\"wall-", pos)) != std::string::npos) {
            ++walls;
            pos += 10;
        }
        pos = 0;
        while ((pos = svg.find("<circle", pos)) != std::string::npos) {
            ++points;
            pos += 7;
        }
        CHECK(walls == 9);
        CHECK(points == 12);
        // determinism
        CHECK(svg == run_command_text(req));
    }
}

TEST_CASE("svg emitter rejects the wrong rank with a domain error") {
    std::string spec4 = R"({"vertices": 4, "arrows": [["a",1,2],["b",2,3],["c",3,4]],
                            "field": "fp", "prime": 2})";
    std::string tmp = "/tmp/tautilt_rank4.json";
    {
        std::ofstream out(tmp);
        out << spec4;
    }
    CommandRequest req;
    req.subcommand = "fan";
    req.spec_path = tmp;
    req.dim_bound = 1;
    req.format = "svg";
    std::ostringstream out, err;
    CHECK(run_command(req, out, err) == 1);
    CHECK(err.str().find("rank 3") != std::string::npos);
}

TEST_CASE("exit codes: missing file is 1, budget refusal is 2") {
    CommandRequest req = base_request("catalog", "does_not_exist.json", 1);
    std::ostringstream out, err;
    CHECK(run_command(req, out, err) == 1);

    CommandRequest big = base_request("catalog", "markoff.json", 6);
    std::ostringstream out2, err2;
    CHECK(run_command(big, out2, err2) == 2);
    CHECK(err2.str().find("refused") != std::string::npos);

    CommandRequest rational = base_request("catalog", "a2.json", 1);
    rational.field = "rational";
    std::ostringstream out3, err3;
    CHECK(run_command(rational, out3, err3) == 1);
}

TEST_CASE("dot output lists every node and edge once") {
    CommandRequest req = base_request("graph", "a2.json", 1);
    req.format = "dot";
    std::string dot = run_command_text(req);
    size_t labels = 0, edges = 0, pos = 0;
    while ((pos = dot.find("[label=\"(", pos)) != std::string::npos) {
        ++labels;
        pos += 5;
    }
    pos = 0;
    while ((pos = dot.find("->", pos)) != std::string::npos) {
        ++edges;
        pos += 2;
    }
    CHECK(edges == 5);
    CHECK(labels == 10);  // five node labels + five edge labels
    CHECK(dot.find("color=green") != std::string::npos);
}

TEST_CASE("stability space document carries the exact H- and V-data") {
    auto A = make_a2(F2);
    Rep<PrimeField> P1 = projective_rep(A, 1);
    StabilitySpace<PrimeField> D = stability_space(P1);
    Doc d = stability_space_doc(P1.dims, D.hrep, D.vrep, D.codim, D.is_wall);
    CHECK(d.at("is_wall").get<bool>());
    CHECK(d.at("rays").size() == 1);
    CHECK(Doc::parse(d.dump(2)).dump(2) == d.dump(2));
}
