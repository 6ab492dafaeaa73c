#include <doctest.h>

#include "mwlat/cli.hpp"
#include "mwlat/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace mwlat;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("mw disk end to end") {
    auto path = write_temp("cli_disk_doubled.json", "[[1,0],[1,0]]");
    auto r = run_cli({"mw", "disk", path});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("mw").at("rank") == 1);
    CHECK(doc.at("mw").at("torsion").empty());
    CHECK(doc.at("mw_boundary").at("rank") == 1);
    CHECK(doc.at("mw_boundary").at("torsion") == json::array({2}));
    CHECK(doc.at("mw_relative").at("rank") == 1);
    CHECK(doc.at("mw_relative").at("torsion").empty());
    CHECK(doc.at("restriction_image").at("rank") == 0);
    CHECK(doc.at("restriction_image").at("torsion") == json::array({2}));
    CHECK(doc.at("mw_relative_note") == "rank certified; reported torsion-free");

    SUBCASE("output is byte-identical across runs") {
        auto again = run_cli({"mw", "disk", path});
        CHECK(again.code == 0);
        CHECK(again.out == r.out);
    }
    SUBCASE("an explicit description object works too") {
        auto obj = write_temp("cli_disk_obj.json",
                              "{\"base\":\"disk\",\"cycles\":[[1,0],[1,0]]}");
        auto r2 = run_cli({"mw", "disk", obj});
        CHECK(r2.code == 0);
        CHECK(r2.out == r.out);
    }
}

TEST_CASE("mw sphere and glue") {
    std::string twelve = "[";
    for (int i = 0; i < 6; ++i) {
        if (i) twelve += ",";
        twelve += "[1,0],[0,1]";
    }
    twelve += "]";
    auto path = write_temp("cli_sphere12.json", twelve);
    auto r = run_cli({"mw", "sphere", path});
    REQUIRE_MESSAGE(r.code == 0, r.out);
    json doc = json::parse(r.out);
    CHECK(doc.at("group").at("rank") == 8);
    CHECK(doc.at("group").at("torsion").empty());
    CHECK(doc.at("lattice_label") == "E8(-1)");
    CHECK(doc.at("genus") == 1);

    auto g = run_cli({"mw", "glue", path, path});
    REQUIRE_MESSAGE(g.code == 0, g.out);
    json gd = json::parse(g.out);
    CHECK(gd.at("genus") == 2);
    CHECK(gd.at("group").at("rank") == 20);
    CHECK(gd.at("lattice_label") == "2E8(-1) + 2U");
    CHECK(gd.at("cycles").size() == 24);

    SUBCASE("validation failures are structured and exit 2") {
        auto bad = write_temp("cli_sphere_bad.json", "[[1,0],[0,1]]");
        auto rb = run_cli({"mw", "sphere", bad});
        CHECK(rb.code == 2);
        json err = json::parse(rb.out);
        CHECK(err.at("error").at("kind") == "validation");
        CHECK(!err.at("error").at("violations").empty());
    }
}

TEST_CASE("lattice subcommands") {
    auto r = run_cli({"lattice", "make", "E8(-1)"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("rank") == 8);
    CHECK(doc.at("even") == true);
    CHECK(doc.at("signature").at("positive") == 0);
    CHECK(doc.at("signature").at("negative") == 8);
    CHECK(doc.at("determinant") == 1);

    auto lam = run_cli({"lattice", "make", "Lambda(1)"});
    REQUIRE(lam.code == 0);
    json ld = json::parse(lam.out);
    CHECK(ld.at("rank") == 10);
    CHECK(ld.at("marked").at("e").size() == 10);

    SUBCASE("quotient by the marked vector, then classify and roots") {
        auto lam2 = write_temp("cli_lambda2.json", run_cli({"lattice", "make", "Lambda(2)"}).out);
        auto q = run_cli({"lattice", "quotient", lam2});
        REQUIRE_MESSAGE(q.code == 0, q.out);
        json qd = json::parse(q.out);
        CHECK(qd.at("rank") == 20);
        CHECK(qd.at("even") == true);
        CHECK(qd.at("signature").at("positive") == 2);
        CHECK(qd.at("signature").at("negative") == 18);

        // classify the quotient via a fresh lattice file
        json lat;
        lat["rank"] = qd.at("rank");
        lat["gram"] = qd.at("gram");
        auto quot = write_temp("cli_quot.json", lat.dump());
        auto c = run_cli({"lattice", "classify", quot});
        REQUIRE_MESSAGE(c.code == 0, c.out);
        CHECK(json::parse(c.out).at("label") == "2E8(-1) + 2U");

        auto e8 = write_temp("cli_e8.json", run_cli({"lattice", "make", "E8(-1)"}).out);
        auto rt = run_cli({"lattice", "roots", e8, "--norm", "-2"});
        REQUIRE(rt.code == 0);
        CHECK(json::parse(rt.out).at("count") == 240);
    }
    SUBCASE("parse failures exit 2") {
        auto bad = run_cli({"lattice", "make", "E9(-1)"});
        CHECK(bad.code == 2);
        json err = json::parse(bad.out);
        CHECK(err.at("error").at("kind") == "parse");
    }
}

TEST_CASE("eichler apply") {
    auto lam1 = write_temp("cli_lambda1.json", run_cli({"lattice", "make", "Lambda(1)"}).out);
    auto r = run_cli({"eichler", "apply", lam1, "--c", "0,0,1,0,0,0,0,0,0,0",
                      "--x", "0,0,0,1,0,0,0,0,0,0"});
    REQUIRE_MESSAGE(r.code == 0, r.out);
    json doc = json::parse(r.out);
    CHECK(doc.at("fixes_e") == true);
    CHECK(doc.at("gram_preserved") == true);
    CHECK(doc.at("matrix").size() == 10);
    CHECK(doc.at("x_image").size() == 10);

    // c must be orthogonal to e
    auto bad = run_cli({"eichler", "apply", lam1, "--c", "1,0,0,0,0,0,0,0,0,0"});
    CHECK(bad.code == 2);
}

TEST_CASE("modpi eval") {
    auto r = run_cli({"modpi", "eval", "F", "F", "t"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("word") == "F F t");
    CHECK(doc.at("normal_form").at("m") == 2);
    CHECK(doc.at("normal_form").at("k") == 1);
    CHECK(doc.at("mod_x").at("k") == 1);
    CHECK(doc.at("h2_action").size() == 2);
    CHECK(doc.at("variation").size() == 2);

    auto bad = run_cli({"modpi", "eval", "F", "q"});
    CHECK(bad.code == 2);
    CHECK(json::parse(bad.out).at("error").at("kind") == "parse");
}

TEST_CASE("monodromy subcommands") {
    auto path = write_temp("cli_cycles.json", "[[1,0],[1,0]]");
    auto r = run_cli({"monodromy", "product", path});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc.at("matrix") == json::parse("[[1,-2],[0,1]]"));
    CHECK(doc.at("trace") == 2);
    CHECK(doc.at("classification").at("kind") == "parabolic");

    auto c = run_cli({"monodromy", "classify", path});
    REQUIRE(c.code == 0);
    CHECK(json::parse(c.out).at("classification").at("kind") == "parabolic");

    SUBCASE("hurwitz search hit") {
        auto h = run_cli({"monodromy", "hurwitz", path, "--moves", "0"});
        REQUIRE_MESSAGE(h.code == 0, h.out);
        json hd = json::parse(h.out);
        REQUIRE(!hd.at("hits").empty());
        CHECK(hd.at("hits")[0].at("pair_index") == 1);
    }
    SUBCASE("hurwitz search miss exits 3") {
        auto miss_path = write_temp("cli_cycles_miss.json", "[[1,0],[0,1]]");
        auto h = run_cli({"monodromy", "hurwitz", miss_path, "--moves", "0"});
        CHECK(h.code == 3);
        json hd = json::parse(h.out);
        CHECK(hd.at("hits").empty());
        CHECK(hd.at("exhausted") == true);
    }
}

TEST_CASE("unipotent fix") {
    auto r = run_cli({"unipotent", "fix", "--lattice", "Lambda(1)", "--word",
                      "E(0,0,1,0,0,0,0,0,0,0)"});
    REQUIRE_MESSAGE(r.code == 0, r.out);
    json doc = json::parse(r.out);
    CHECK(doc.at("nilpotency_index") == 3);
    CHECK(doc.at("found") == true);
    CHECK(doc.at("verified") == true);
    CHECK(doc.at("vector").size() == 10);

    SUBCASE("bound 0 cannot find anything and exits 3") {
        auto miss = run_cli({"unipotent", "fix", "--lattice", "Lambda(1)", "--word",
                             "E(0,0,1,0,0,0,0,0,0,0)", "--bound", "0"});
        CHECK(miss.code == 3);
        CHECK(json::parse(miss.out).at("found") == false);
    }
    SUBCASE("non-unipotent words exit 2") {
        auto bad = run_cli({"unipotent", "fix", "--lattice", "Lambda(1)", "--word",
                            "R(0,0,1,0,0,0,0,0,0,0)"});
        CHECK(bad.code == 2);
        CHECK(json::parse(bad.out).at("error").at("kind") == "validation");
    }
}

TEST_CASE("cli error and help plumbing") {
    auto missing = run_cli({"mw", "disk", "no_such_file.json"});
    CHECK(missing.code == 2);
    CHECK(json::parse(missing.out).at("error").at("kind") == "io");

    auto junk = write_temp("cli_junk.json", "{not json");
    auto broken = run_cli({"mw", "disk", junk});
    CHECK(broken.code == 2);
    CHECK(json::parse(broken.out).at("error").at("kind") == "parse");

    auto unknown = run_cli({"--no-such-flag"});
    CHECK(unknown.code == 2);
    CHECK(json::parse(unknown.out).at("error").at("kind") == "usage");

    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("mwlat") != std::string::npos);

    auto pretty = run_cli({"--pretty", "lattice", "make", "U"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find("rank: 2") != std::string::npos);
}
