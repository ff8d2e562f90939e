#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "regzeta/cli.hpp"

using Json = nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::vector<const char*> argv;
    argv.push_back("regzeta");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream captured_out, captured_err;
    auto* old_out = std::cout.rdbuf(captured_out.rdbuf());
    auto* old_err = std::cerr.rdbuf(captured_err.rdbuf());
    int code = regzeta::run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, captured_out.str(), captured_err.str()};
}

size_t line_count(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("type listing document") {
    CliResult plain = run({"types", "--n", "2", "--format", "json"});
    REQUIRE(plain.code == 0);
    Json doc = Json::parse(plain.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["meta"]["group"].is_null());
    CHECK(doc["meta"]["q"].is_null());
    CHECK(doc["meta"]["n"] == 2);
    REQUIRE(doc["meta"]["convention_notes"].is_array());
    CHECK(doc["meta"]["convention_notes"].size() == 4);
    CHECK(doc["types"].size() == 10);

    CliResult at5 = run({"types", "--n", "2", "--q", "5", "--format", "json"});
    REQUIRE(at5.code == 0);
    Json doc5 = Json::parse(at5.out);
    CHECK(doc5["meta"]["q"] == "5");
    long mass_total = 0;
    for (const auto& row : doc5["types"]) {
        REQUIRE_FALSE(row["mass_at_q"].is_null());
        mass_total += std::stol(row["mass_at_q"].get<std::string>());
    }
    CHECK(mass_total == 25);  // census: the masses tile the q^n even monics
}

TEST_CASE("reruns are byte-identical") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"types", "--n", "3", "--format", "json"},
             {"orbits", "--group", "sp", "--n", "1", "--p", "3", "--format", "json"},
             {"orbits", "--group", "so-even-minus", "--n", "2", "--p", "5", "--format", "csv"},
             {"zeta", "--group", "so-odd", "--n", "2", "--p", "3", "--levels", "3"}}) {
        CliResult a = run(args);
        CliResult b = run(args);
        REQUIRE(a.code == 0);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("prime-power field spellings agree") {
    CliResult via_q = run({"orbits", "--group", "sp", "--n", "2", "--q", "9", "--format", "json"});
    CliResult via_pk =
        run({"orbits", "--group", "sp", "--n", "2", "--p", "3", "--k", "2", "--format", "json"});
    REQUIRE(via_q.code == 0);
    REQUIRE(via_pk.code == 0);
    CHECK(via_q.out == via_pk.out);
    Json doc = Json::parse(via_q.out);
    CHECK(doc["meta"]["p"] == 3);
    CHECK(doc["meta"]["k"] == 2);
    CHECK(doc["meta"]["q"] == "9");
}

TEST_CASE("exit codes") {
    CliResult small = run({"orbits", "--group", "so-even-plus", "--n", "2", "--p", "3"});
    CHECK(small.code == 2);
    CHECK(small.err.find("more than 3 elements") != std::string::npos);

    CHECK(run({"orbits", "--group", "sp", "--n", "1", "--q", "4"}).code == 2);   // even q
    CHECK(run({"types", "--n", "1", "--q", "4"}).code == 2);                     // even q
    CHECK(run({"types", "--n", "1", "--q", "12"}).code == 1);                    // not a prime power
    CHECK(run({"types", "--n", "1", "--q", "1594323"}).code == 1);               // 3^13 too large
    CHECK(run({"types", "--n", "0"}).code == 1);                                 // rank must be >= 1
    CHECK(run({"orbits", "--group", "gl", "--n", "1", "--p", "3"}).code == 1);   // unknown family
    CHECK(run({"zeta", "--group", "sp", "--n", "1"}).code == 1);                 // no field given
    CHECK(run({"orbits", "--group", "sp", "--n", "1", "--p", "3", "--q", "5"}).code == 1);
    CHECK(run({}).code == 1);                                                    // no subcommand

    CliResult capped = run({"verify", "--group", "sp", "--n", "3", "--p", "7"});
    CHECK(capped.code == 3);
    CHECK(capped.err.find("budget") != std::string::npos);

    CHECK(run({"verify", "--group", "sp", "--n", "1", "--p", "3"}).code == 0);

    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("types") != std::string::npos);
}

TEST_CASE("CSV row counts match the JSON arrays") {
    CliResult csv = run({"orbits", "--group", "sp", "--n", "1", "--p", "3", "--format", "csv"});
    CliResult json = run({"orbits", "--group", "sp", "--n", "1", "--p", "3", "--format", "json"});
    REQUIRE(csv.code == 0);
    size_t families = Json::parse(json.out)["families"].size();
    CHECK(families == 3);
    CHECK(line_count(csv.out) == families + 1);
    CHECK(csv.out.rfind("tau,singular,num_polys,orbits_per_poly,orbit_size,centralizer_order\n", 0) == 0);

    CliResult tcsv = run({"types", "--n", "2", "--format", "csv"});
    CHECK(line_count(tcsv.out) == 10 + 1);
    CHECK(tcsv.out.rfind("tau,weight,singular,sign,mass_poly,mass_at_q,core_poly,core_at_q\n", 0) == 0);

    CliResult zcsv =
        run({"zeta", "--group", "sp", "--n", "1", "--p", "3", "--levels", "2", "--format", "csv"});
    CliResult zjson =
        run({"zeta", "--group", "sp", "--n", "1", "--p", "3", "--levels", "2", "--format", "json"});
    CHECK(line_count(zcsv.out) == Json::parse(zjson.out)["ledger"].size() + 1);

    CliResult vcsv = run({"verify", "--group", "sp", "--n", "1", "--p", "3", "--format", "csv"});
    CHECK(vcsv.code == 0);
    CHECK(vcsv.out == "diff\n");  // empty diff
}

TEST_CASE("zeta document content") {
    CliResult res =
        run({"zeta", "--group", "sp", "--n", "1", "--p", "3", "--levels", "2", "--format", "json"});
    REQUIRE(res.code == 0);
    Json doc = Json::parse(res.out);
    CHECK(doc["dirichlet"] == Json::parse(R"([["4","12"],["6","4"],["12","2"]])"));
    CHECK(doc["zeta"]["alpha"] == 1);
    CHECK(doc["zeta"]["n"] == 1);
    CHECK(doc["zeta"]["q"] == "3");
    CHECK(doc["zeta"]["abscissa"] == Json::parse("[1,1]"));
    REQUIRE(doc["layers"].size() == 2);
    CHECK(doc["layers"][1] == Json::parse(R"([["12","36"],["18","12"],["36","6"]])"));
    bool merged_term = false;
    for (const auto& pair : doc["ledger"])
        if (pair == Json::parse(R"(["12","38"])")) merged_term = true;
    CHECK(merged_term);  // 2 from level 1 plus 36 from level 2
}

TEST_CASE("file output matches stdout output") {
    const std::string path = "cli_out_tmp.json";
    CliResult to_file =
        run({"types", "--n", "1", "--format", "json", "--out", path});
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream body;
    body << f.rdbuf();
    f.close();
    CHECK(std::remove(path.c_str()) == 0);
    CliResult direct = run({"types", "--n", "1", "--format", "json"});
    CHECK(body.str() == direct.out);
}

TEST_CASE("verification document and worker-count invariance") {
    REQUIRE(setenv("REGZETA_THREADS", "1", 1) == 0);
    CliResult one = run({"verify", "--group", "sp", "--n", "1", "--p", "3", "--format", "json"});
    REQUIRE(setenv("REGZETA_THREADS", "4", 1) == 0);
    CliResult four = run({"verify", "--group", "sp", "--n", "1", "--p", "3", "--format", "json"});
    REQUIRE(unsetenv("REGZETA_THREADS") == 0);
    REQUIRE(one.code == 0);
    CHECK(one.code == four.code);
    CHECK(one.out == four.out);

    Json doc = Json::parse(one.out);
    CHECK(doc["verify"]["ok"] == true);
    CHECK(doc["verify"]["diffs"].empty());
    CHECK(doc["verify"]["strategy"] == "filter");
    CHECK(doc["verify"]["group_order"] == "24");
    CHECK(doc["verify"]["regular_count"] == "26");
    CHECK(doc["families"].size() == 3);
    CHECK(doc["meta"]["group"] == "sp");

    // the resolved sign convention is spelled out in the metadata
    std::string notes;
    for (const auto& note : doc["meta"]["convention_notes"]) notes += note.get<std::string>();
    CHECK(notes.find("14400") != std::string::npos);
    CHECK(notes.find("15600") != std::string::npos);
}
