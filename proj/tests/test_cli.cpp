#include <sstream>

#include "doctest.h"
#include "wittflag/cli.hpp"

using namespace wf;
using json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "flagwitt");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

std::vector<json> table_rows(const std::string& out) {
    std::vector<json> rows;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) {
        auto j = json::parse(line);
        if (!j.contains("summary")) rows.push_back(j);
    }
    return rows;
}

}  // namespace

TEST_CASE("compute emits the documented JSON schema") {
    auto r = run({"compute", "--type", "C", "--m", "1", "--blocks", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"type", "params", "structure", "scalar_a", "generators", "relations", "exterior",
                                           "ranks", "checks"});
    CHECK(j["params"]["m"] == 1);
    CHECK(j["params"]["blocks"] == json::array({1}));
    for (const char* k : {"0", "-1", "-2", "-3"}) CHECK(j["ranks"].contains(k));
    for (const char* k : {"regularity", "reduction", "dim_match", "table_match"}) CHECK(j["checks"][k] == true);
}

TEST_CASE("compute JSON round-trips") {
    for (auto args : std::vector<std::vector<std::string>>{{"--type", "A", "--blocks", "3,5"},
                                                           {"--type", "B", "--m", "2", "--blocks", "3,5"},
                                                           {"--type", "D", "--m", "2", "--blocks", "2"}}) {
        args.insert(args.begin(), "compute");
        args.insert(args.end(), {"--format", "json"});
        auto r = run(args);
        REQUIRE(r.code == 0);
        auto j = json::parse(r.out);
        CHECK(json::parse(j.dump(2)) == j);
        CHECK(j.dump(2) + "\n" == r.out);
        uint64_t total = 0;
        for (auto& [k, v] : j["ranks"].items()) total += v.get<uint64_t>();
        if (j["structure"] == "RING") CHECK(total == j["scalar_a"].get<uint64_t>() << j["exterior"].size());
    }
}

TEST_CASE("compute text shows the exterior generator of SU(3)/T") {
    auto r = run({"compute", "--type", "A", "--blocks", "1,1,1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("Lambda(v1)") != std::string::npos);
    CHECK(r.out.find("v1 in W^-1") != std::string::npos);
}

TEST_CASE("usage errors exit 1 with one diagnostic line") {
    for (auto args : std::vector<std::vector<std::string>>{{"compute", "--type", "A", "--blocks", "0"},
                                                           {"compute", "--type", "A", "--blocks", "1,x"},
                                                           {"compute", "--type", "Q", "--blocks", "1,2"},
                                                           {"compute", "--type", "D", "--m", "1", "--blocks", "2"},
                                                           {"verify", "--suite", "nonsense"},
                                                           {"table", "--type", "A", "--max-n", "11"},
                                                           {"table", "--type", "A", "--max-n", "0"},
                                                           {"frobnicate"},
                                                           {}}) {
        auto r = run(args);
        CHECK(r.code == 1);
        CHECK(lines(r.err) == 1);
        CHECK(r.err.rfind("flagwitt: ", 0) == 0);
        CHECK(r.out.empty());
    }
}

TEST_CASE("table refusal names the limit") {
    auto r = run({"table", "--type", "B", "--max-n", "12"});
    CHECK(r.code == 1);
    CHECK(r.err.find(std::to_string(kMaxTableN)) != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    for (auto args : std::vector<std::vector<std::string>>{{"compute", "--type", "B", "--m", "2", "--blocks", "3,5"},
                                                           {"table", "--type", "C", "--max-n", "5"},
                                                           {"verify", "--suite", "appendix", "--max-size", "8"}}) {
        auto a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("parallel and serial tables agree") {
    for (const char* t : {"A", "B", "C", "D"}) {
        auto p = run({"table", "--type", t, "--max-n", "6"});
        auto s = run({"table", "--type", t, "--max-n", "6", "--serial"});
        CHECK(p.code == 0);
        CHECK(p.out == s.out);
    }
}

TEST_CASE("table enumerations") {
    auto a = table_rows(run({"table", "--type", "A", "--max-n", "5"}).out);
    size_t want = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& b : partitions(n)) want += b.size() >= 2;
    CHECK(a.size() == want);
    for (const auto& row : a) CHECK(row["params"]["blocks"].size() >= 2);

    auto c = table_rows(run({"table", "--type", "C", "--max-n", "4"}).out);
    size_t want_c = 0;
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= n; ++m) want_c += m == n ? 1 : partitions(n - m).size();
    CHECK(c.size() == want_c);

    auto d = run({"table", "--type", "D", "--max-n", "4"});
    CHECK(d.code == 0);
    CHECK(d.out.find("ADDITIVE_ONLY") != std::string::npos);
}

TEST_CASE("verify reports per-item results") {
    auto r = run({"verify", "--suite", "appendix", "--max-size", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("summary: ") != std::string::npos);

    auto j = run({"verify", "--suite", "examples", "--format", "json"});
    CHECK(j.code == 0);
    auto doc = json::parse(j.out);
    CHECK(doc["failed"] == 0);
    for (const auto& it : doc["items"]) CHECK(it["result"] == "PASS");

    CHECK(run({"verify", "--suite", "series"}).code == 0);
}

TEST_CASE("selfcheck passes") { CHECK(run({"selfcheck"}).code == 0); }

TEST_CASE("representation ring JSON") {
    auto r = run({"compute", "--type", "A", "--blocks", "1,2", "--rep-ring"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["generators"].size() == j["involution"].size());
}
