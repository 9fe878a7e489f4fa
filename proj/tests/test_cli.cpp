#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "valfield/cli.hpp"

using valfield::cli::run;
using Json = valfield::io::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* kPaperPsd = R"({"task":"psd","field":{"kind":"p-adic","p":5},"M":[["28/5","4/5"],["4/5","-3/5"]]})";
const char* kInfeasible = R"({"field":{"kind":"p-adic","p":2},"A":{"rows":0,"cols":1,"entries":[]},"b":[],
                              "c":["1"],"D":[["1"],["1"]],"e":["0","1"]})";
const char* kSnf = R"({"field":{"kind":"p-adic","p":3},"M":[["3","6","1/3"],["9","2","0"]]})";

} // namespace

TEST_CASE("cli: paper PSD example") {
    auto r = call({"psd", "-"}, kPaperPsd);
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j == Json::parse(R"({"psd":true,"charpoly":["-4","-5","1"]})"));
}

TEST_CASE("cli: infeasible LP") {
    auto r = call({"lp", "-"}, kInfeasible);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("type") == "INFEAS");
}

TEST_CASE("cli: snf with oracle") {
    auto r = call({"snf", "-", "--verify"}, kSnf);
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("exponents") == Json::parse("[-1,0]"));
    CHECK(j.at("oracle").at("agree") == true);
    CHECK(j.at("oracle").at("minor_exponents") == j.at("exponents"));
}

TEST_CASE("cli: output is byte-identical and re-parses") {
    for (const char* cmd : {"psd", "snf"}) {
        const char* input = std::string(cmd) == "psd" ? kPaperPsd : kSnf;
        auto a = call({cmd, "-", "--verify"}, input);
        auto b = call({cmd, "-", "--verify"}, input);
        CHECK(a.out == b.out);
        CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);
    }
}

TEST_CASE("cli: summary goes to stderr and keeps the exit code") {
    auto plain = call({"lp", "-"}, kInfeasible);
    auto sum = call({"--summary", "lp", "-"}, kInfeasible);
    CHECK(plain.code == sum.code);
    CHECK(plain.out == sum.out);
    CHECK(sum.err == "infeasible: equality system inconsistent\n");
}

TEST_CASE("cli: summaries") {
    using valfield::cli::render_summary;
    CHECK(render_summary("lp", Json::parse(R"({"type":"FEAS","value":-1,"x":["1","-1/2"]})")) ==
          "feasible; optimal valuation -1; attained at x = (1, -1/2)");
    CHECK(render_summary("lp", Json::parse(R"({"type":"INFEAS","reason":"non-integral-constants"})")) ==
          "infeasible: constant block non-integral");
    CHECK(render_summary("lp", Json::parse(R"({"type":"UNBOUND","ray_index":2,"x":[],"ray":[]})")) ==
          "unbounded: objective valuation → −∞ along ray index 2");
}

TEST_CASE("cli: field override") {
    auto r = call({"--field", R"({"kind":"p-adic","p":7})", "psd", "-"}, kPaperPsd);
    CHECK(r.code == 0);
    // -4 - 5T + T^2 is integral at 7 too
    CHECK(Json::parse(r.out).at("psd") == true);
    auto bad = call({"--field", R"({"kind":"p-adic","p":3})", "psd", "-"}, kPaperPsd);
    CHECK(bad.code == 0);
    CHECK(Json::parse(bad.out).at("charpoly") == Json::parse(R"(["-4","-5","1"])"));
}

TEST_CASE("cli: -o writes the file") {
    const std::string path = "valfield_cli_test_out.json";
    auto r = call({"-o", path, "psd", "-"}, kPaperPsd);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(Json::parse(buf.str()).at("psd") == true);
    std::remove(path.c_str());
}

TEST_CASE("cli: input errors exit with 2") {
    CHECK(call({"psd", "-"}, "{not json").code == 2);
    CHECK(call({"psd", "/nonexistent/file.json"}).code == 2);
    CHECK(call({"psd", "-"}, R"({"field":{"kind":"p-adic","p":6},"M":[["1"]]})").code == 2);
    CHECK(call({"psd", "-"}, R"({"field":{"kind":"p-adic","p":5},"M":[["1","2"],["3"]]})").code == 2);
    CHECK(call({"psd", "-"}, R"({"field":{"kind":"p-adic","p":5},"M":[["1/0"]]})").code == 2);
    CHECK(call({"psd", "-"}, R"({"field":{"kind":"p-adic","p":5}})").code == 2);
    CHECK(call({"sdr", "annulus", "-"}, R"({"field":{"kind":"p-adic","p":3},"a":3,"b":2})").code == 2);
    CHECK(call({"sdr", "annulus", "-"}, R"({"field":{"kind":"p-adic","p":3},"a":0,"b":2})").code == 2);
    CHECK(call({"snf", "-"}, kPaperPsd).code == 2);  // task tag says psd
    CHECK(call({"bogus", "-"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"poly", "member", "-"},
               R"({"field":{"kind":"p-adic","p":2},"P":{"n":2,"A":[["1","0"]],"v":["0"]},"x":["1"]})")
              .code == 2);
}

TEST_CASE("cli: help exits cleanly") {
    auto r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("poly") != std::string::npos);
}

TEST_CASE("cli: every task with --verify") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
        {{"lp", "-"},
         R"({"field":{"kind":"p-adic","p":2},"A":[["1","0"],["0","2"]],"b":["-1","1/2"],"c":["1","1"]})"},
        {{"lp", "-"}, R"({"field":{"kind":"p-adic","p":3},"A":[["1","1"]],"b":["0"],"c":["1","0"]})"},
        {{"lp", "-"},
         R"({"field":{"kind":"p-adic","p":2},"A":[["1"]],"b":["0"],"c":["1"],"sense":"max"})"},
        {{"poly", "project", "-"},
         R"({"field":{"kind":"p-adic","p":2},"P":{"n":2,"A":[["1","0"],["1","-1"],["0","4"]],"v":["0","1/2","0"]}})"},
        {{"poly", "project", "-"},
         R"j({"field":{"kind":"laurent","var":"t"},"P":{"n":2,"A":[["1","0"],["0","1"]],"v":["0","0"]},
             "f":{"F":[["1","(1)/(t)"]],"g":["1"]}})j"},
        {{"poly", "member", "-"},
         R"({"field":{"kind":"p-adic","p":2},"P":{"n":2,"A":[["1","0"],["0","1"]],"v":["0","0"]},"x":["4","3"]})"},
        {{"poly", "empty", "-"},
         R"({"field":{"kind":"p-adic","p":5},"P":{"n":1,"A":[["1"]],"v":["0"],"B":[["1"]],"w":["-1/5"]}})"},
        {{"poly", "empty", "-"}, R"({"field":{"kind":"p-adic","p":5},"P":{"n":1,"A":[["1"]],"v":["1/5"]}})"},
        {{"poly", "minkowski", "-"},
         R"({"field":{"kind":"p-adic","p":3},"P1":{"n":1,"A":[["1/3"]],"v":["0"]},"P2":{"n":1,"A":[["1/9"]],"v":["-1/9"]}})"},
        {{"poly", "ball-form", "-"}, R"({"field":{"kind":"p-adic","p":3},"P":{"n":1,"A":[["1/9"]],"v":["-1/9"]}})"},
        {{"poly", "polydisc", "-"},
         R"({"field":{"kind":"p-adic","p":5},"P":{"n":2,"A":[["1","1"],["0","5"]],"v":["1/5","0"]}})"},
        {{"sdr", "annulus", "-"}, R"({"field":{"kind":"p-adic","p":2},"a":2,"b":5})"},
        {{"spectra", "member", "-"},
         R"({"field":{"kind":"p-adic","p":3},"pencil":{"d":2,"n":1,"A":[[["1","0"],["0","1"]],[["1","0"],["0","0"]]]},
             "x":["2"],"section":{"B":[["1"]],"w":["-2"]}})"},
        {{"spectra", "describe", "-"},
         R"({"field":{"kind":"p-adic","p":3},"pencil":{"d":2,"n":1,"A":[[["1","0"],["0","1/3"]],[["0","1"],["1","0"]]]}})"},
    };
    for (const auto& [args, input] : cases) {
        auto a = args;
        a.push_back("--verify");
        auto r = call(a, input);
        INFO(input);
        INFO(r.err);
        REQUIRE(r.code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("oracle").at("agree") == true);
    }
}

TEST_CASE("cli: expected payloads") {
    auto mk = call({"poly", "ball-form", "-"},
                   R"({"field":{"kind":"p-adic","p":3},"P":{"n":1,"A":[["1/9"]],"v":["-1/9"]}})");
    CHECK(Json::parse(mk.out).at("ball") == Json::parse(R"({"kind":"disc","center":"1","radius":2})"));
    auto mem = call({"spectra", "member", "-"},
                    R"({"field":{"kind":"p-adic","p":3},"pencil":{"d":2,"n":1,"A":[[["1","0"],["0","1"]],[["1","0"],["0","0"]]]},
                        "x":["2"],"section":{"B":[["1"]],"w":["-2"]}})");
    CHECK(Json::parse(mem.out).at("member") == true);
    auto sdr = call({"sdr", "annulus", "-"},
                    R"({"field":{"kind":"p-adic","p":2},"annuli":[{"a":1,"b":1},{"a":1,"b":2},{"a":2,"b":5}]})");
    const Json s = Json::parse(sdr.out);
    CHECK(s.at("height") == 3);
    CHECK(s.at("d") == 12);
    CHECK(s.at("n") == 6);
}
