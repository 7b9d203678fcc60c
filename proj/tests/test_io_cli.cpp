#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xormagic/cli.hpp"
#include "xormagic/family_parse.hpp"
#include "xormagic/json_io.hpp"

using namespace xormagic;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("xormagic_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::vector<std::string>& args, std::string* captured = nullptr) {
    std::ostringstream out, err;
    const int code = cli_dispatch(args, out, err);
    if (captured)
        *captured = out.str() + err.str();
    return code;
}

} // namespace

TEST_CASE("graph json round trip and rejections") {
    const Graph g = parse_family("circulant:8:1,4");
    CHECK(graph_from_json(graph_to_json(g)) == g);

    CHECK_THROWS_AS(graph_from_json(json{{"order", 3}, {"edges", {{0, 0}}}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"order", 3}, {"edges", {{0, 3}}}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"order", 3}, {"edges", {{1, 0}}}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"order", 3}, {"edges", {{0, 1}, {0, 1}}}}),
                    std::invalid_argument);
}

TEST_CASE("labeling and certificate json") {
    const Labeling l = canonical_bijection(3);
    CHECK(labeling_from_json(labeling_to_json(l)) == l);
    const json j = labeling_to_json(l);
    CHECK(j.at("labels").at(5).get<std::string>() == "101");

    const Certificate cert{parse_family("hypercube:2"), canonical_bijection(2), Mode::closed};
    const Certificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.graph == cert.graph);
    CHECK(back.labeling == cert.labeling);
    CHECK(back.mode == Mode::closed);
    CHECK_THROWS_AS(certificate_from_json(json{{"mode", "open"}}), std::invalid_argument);
}

TEST_CASE("family spec parsing") {
    CHECK(parse_family("circulant:16:6,7,8").regularity() == 5);
    CHECK(parse_family("hypercube:3") == hypercube(3));
    CHECK(parse_family("mobius:8") == mobius_ladder(8));
    CHECK(parse_family("andrasfai:3") == andrasfai(3));
    CHECK(parse_family("doob:3:3") == doob(3, 3));
    CHECK(parse_family("powercycle:8:2") == power_of_cycle(8, 2));
    CHECK(parse_family("complement(powercycle:8:1)") == complement_power_of_cycle(8, 1));
    CHECK(parse_family("cartesian(hypercube:2, hypercube:1)") == hypercube(3));
    CHECK(parse_family("strong(hypercube:1,hypercube:1)") == power_of_cycle(4, 2));
    CHECK(parse_family("complement(cartesian(hypercube:1,hypercube:1))").edge_count() == 2);

    CHECK_THROWS_AS(parse_family("ladder:8"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("mobius:8:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("cartesian(hypercube:2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("complement(hypercube:2"), std::invalid_argument);
}

TEST_CASE("cli verify exit codes") {
    TempDir tmp;
    {
        const CatalogEntry e = catalog_load("fig4-d5");
        save_json_file(tmp.file("good.json"), certificate_to_json({e.graph, e.labeling, e.mode}));
        const CatalogEntry neg = catalog_load("fig1-k22");
        save_json_file(tmp.file("neg.json"), certificate_to_json({neg.graph, neg.labeling, neg.mode}));
        std::ofstream bad(tmp.file("bad.json"));
        bad << "{ not json";
    }
    std::string output;
    CHECK(run({"verify", "--cert", tmp.file("good.json")}, &output) == 0);
    CHECK(output.find("magic") != std::string::npos);
    CHECK(run({"verify", "--cert", tmp.file("neg.json"), "--json"}, &output) == 10);
    CHECK(output.find("nonzero_weight") != std::string::npos);
    CHECK(run({"verify", "--cert", tmp.file("bad.json")}) == 2);
    CHECK(run({"verify"}) == 2);
    CHECK(run({"frobnicate"}) == 2);
}

TEST_CASE("cli search exit codes and certificates") {
    TempDir tmp;
    std::string output;
    CHECK(run({"search", "--n", "2", "--d", "3", "--mode", "closed", "--connected", "--out",
               tmp.file("k4.json"), "--json"},
              &output) == 0);
    const Certificate cert = certificate_from_json(load_json_file(tmp.file("k4.json")));
    CHECK(cert.graph.edge_count() == 6);
    CHECK(verify_closed_xor_magic(cert.graph, cert.labeling).ok());

    CHECK(run({"search", "--n", "2", "--d", "1", "--mode", "open"}) == 10);
    CHECK(run({"search", "--n", "4", "--d", "6", "--mode", "open", "--node-limit", "1"}) == 20);
    CHECK(run({"search", "--n", "2", "--d", "9", "--mode", "open"}) == 2);
}

TEST_CASE("cli export-milp") {
    TempDir tmp;
    std::string output;
    CHECK(run({"export-milp", "--n", "2", "--d", "3", "--mode", "open", "--variant", "model1",
               "--out", tmp.file("m.lp")},
              &output) == 0);
    std::ifstream in(tmp.file("m.lp"));
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().rfind("Minimize\n obj: 0\n", 0) == 0);
    CHECK(buf.str().find("deg_0:") != std::string::npos);
    CHECK(run({"export-milp", "--n", "2", "--d", "3", "--mode", "open", "--variant", "model2",
               "--out", tmp.file("m2.lp")}) == 2); // missing --t
    CHECK(run({"export-milp", "--n", "2", "--d", "3", "--mode", "open", "--variant", "model1",
               "--literal", "--out", tmp.file("ml.lp")}) == 0);
    std::ifstream lin(tmp.file("ml.lp"));
    std::stringstream lbuf;
    lbuf << lin.rdbuf();
    CHECK(lbuf.str().find("sym_0_1: e_0_1 - e_1_0 = 0") != std::string::npos);
}

TEST_CASE("cli algebra") {
    std::string output;
    CHECK(run({"algebra", "--family", "complement(powercycle:16:1)", "--json"}, &output) == 10);
    CHECK(output.find("\"abs_det\":\"13\"") != std::string::npos);
    CHECK(output.find("not_open_magic") != std::string::npos);
    CHECK(run({"algebra", "--family", "powercycle:8:1"}, &output) == 20);
    CHECK(output.find("|det| = 0") != std::string::npos);
    CHECK(run({"algebra"}) == 2);
    CHECK(run({"algebra", "--family", "nonsense:1"}) == 2);
}

TEST_CASE("cli construct, catalog, degrees") {
    TempDir tmp;
    std::string output;
    CHECK(run({"construct", "--family", "circulant:8:1,4", "--out", tmp.file("g.json")}) == 0);
    CHECK(graph_from_json(load_json_file(tmp.file("g.json"))) == mobius_ladder(8));

    CHECK(run({"construct", "--power", "8", "--parity", "open-odd", "--json"}, &output) == 0);
    CHECK(output.find("\"degree\":9") != std::string::npos);

    CHECK(run({"catalog", "list"}, &output) == 0);
    CHECK(output.find("fig4-d5") != std::string::npos);
    CHECK(run({"catalog", "export", "--id", "fig5-d4", "--out", tmp.file("exported")}) == 0);
    const Certificate cert =
        certificate_from_json(load_json_file(tmp.file("exported") + "/fig5-d4.json"));
    CHECK(verify_closed_xor_magic(cert.graph, cert.labeling).ok());
    CHECK(run({"catalog", "show", "--id", "does-not-exist"}) == 2);

    CHECK(run({"degrees", "--n", "8", "--parity", "open-odd", "--rules", "cartesian"}, &output) == 0);
    CHECK(output.find("9 11 13 15 17 19 21") != std::string::npos);
    CHECK(run({"degrees", "--n", "8", "--parity", "open-odd", "--rules", "cartesian", "--trace", "9",
               "--json"},
              &output) == 0);
    CHECK(output.find("cartesian(") != std::string::npos);
}
