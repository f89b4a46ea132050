#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "concord/cli.hpp"
#include "concord/obstruct.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = concord::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tau subcommand") {
    const auto r = run({"tau", "3*Wh+(T(2,3))"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");

    const auto traced = run({"tau", "3*Wh+(T(2,3))", "--trace"});
    CHECK(traced.out.find("tau-hedden") != std::string::npos);
    CHECK(traced.out.find("tau-additive") != std::string::npos);

    const auto j = run({"tau", "3*Wh+(T(2,3))", "--format", "json"});
    CHECK(j.code == 0);
    const json parsed = json::parse(j.out);
    CHECK(parsed["result"]["value"] == 3);
    CHECK(parsed["command"] == "tau");
}

TEST_CASE("alexander subcommand") {
    const auto r = run({"alexander", "T(3,11)", "--format", "json"});
    CHECK(r.code == 0);
    const json parsed = json::parse(r.out);
    CHECK(parsed["result"]["value"]["0"] == "1");
    CHECK(parsed["result"]["value"]["20"] == "1");
    CHECK(parsed["result"]["value"]["1"] == "-1");
}

TEST_CASE("genus and unknown results") {
    CHECK(run({"genus", "Wh+(T(2,3))"}).out == "1\n");
    const auto unknown = run({"genus", "cable(2,7; T(2,3))"});
    CHECK(unknown.code == 1);
    CHECK(unknown.out.find("unknown") != std::string::npos);
}

TEST_CASE("upsilon subcommand") {
    const auto slope = run({"upsilon", "cable(3,11; 2*Wh+(T(2,3))) # -T(3,11)", "--slope-on",
                            "2/5", "2/3"});
    CHECK(slope.code == 0);
    CHECK(slope.out == "5\n");

    const auto at = run({"upsilon", "T(3,11)", "--at", "1/2"});
    CHECK(at.out == "-5\n");

    const auto dump = run({"upsilon", "T(2,3)", "--dump-plf"});
    CHECK(dump.out == "0\t0\n1\t-1\n2\t0\n");

    const auto unknown = run({"upsilon", "Wh+(T(2,3))"});
    CHECK(unknown.code == 1);
}

TEST_CASE("signature subcommands") {
    CHECK(run({"sigma", "2", "3", "--t", "1/2"}).out == "-2\n");
    CHECK(run({"sigma-oracle", "2", "3", "--t", "1/2"}).out == "-2\n");
    const auto jumps = run({"jumps", "2", "3"});
    CHECK(jumps.out == "1/6 -2\n5/6 +2\n");
    const auto bad = run({"sigma", "2", "3", "--t", "1/6"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("at-jump-point") != std::string::npos);
}

TEST_CASE("cover subcommand") {
    const auto r = run({"cover", "--family", "torus", "--p", "3", "--q", "1", "--l", "2", "--n",
                        "1", "--format", "json"});
    CHECK(r.code == 0);
    const json parsed = json::parse(r.out);
    CHECK(parsed["result"]["components"][0] == "T(2,5)");
    CHECK(parsed["result"]["degree"] == 3);

    const auto rp3 = run({"cover", "--family", "rp3-order2", "--p", "2", "--q", "1",
                          "--companion", "Wh+(T(2,3))"});
    CHECK(rp3.out.find("cable(3,11; 2*Wh+(T(2,3)))") != std::string::npos);
}

TEST_CASE("obstruct subcommands and exit codes") {
    const auto good = run({"obstruct", "topological", "--p", "3", "--q", "1", "--l", "2", "--n1",
                           "1", "--n2", "3", "--format", "json"});
    CHECK(good.code == 0);
    const json cert = json::parse(good.out)["result"];
    CHECK(cert["conclusion"] == "distinguished");
    CHECK(concord::replay(cert));

    const auto inconclusive =
        run({"obstruct", "bing", "--j1", "Wh+(T(2,3))", "--j2", "Wh+(T(2,3))"});
    CHECK(inconclusive.code == 1);

    const auto unknown = run({"obstruct", "bing", "--j1", "cable(2,7; Wh+(U) # U)", "--j2", "U"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("inconclusive") != std::string::npos);
}

TEST_CASE("sweep subcommand") {
    const auto r = run({"sweep", "topological", "--p", "3", "--q", "1", "--l", "2", "--n-max",
                        "5", "--format", "json"});
    CHECK(r.code == 0);
    const json certs = json::parse(r.out)["result"];
    CHECK(certs.size() == 3);  // odd pairs (1,3), (1,5), (3,5)
    for (const auto& c : certs) CHECK(c["conclusion"] == "distinguished");
}

TEST_CASE("user errors exit with 2") {
    CHECK(run({"tau", "T(2,4)"}).code == 2);
    CHECK(run({"tau", "T(2,"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"obstruct", "lens-generic", "--p", "4", "--q", "1", "--l", "2"}).code == 2);
}

TEST_CASE("json and text agree on payloads") {
    const auto text = run({"tau", "cable(3,11; T(2,5))"});
    const auto as_json = run({"tau", "cable(3,11; T(2,5))", "--format", "json"});
    const json parsed = json::parse(as_json.out);
    CHECK(std::to_string(parsed["result"]["value"].get<long long>()) + "\n" == text.out);
}
