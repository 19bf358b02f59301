#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sdecomp/cache.hpp"
#include "sdecomp/cli.hpp"

using namespace sdecomp;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("sdecomp-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("classify report") {
    const auto j = run_json({"classify", "--q", "169", "--d", "2", "--json"});
    CHECK(j["schema"] == 1);
    CHECK(j["results"]["digits"] == Json::array({6, 6}));
    CHECK(j["results"]["is_good"] == true);
    CHECK(j["results"]["bullet"] == 2);
    CHECK(j["field"]["modulus"].size() == 3);
    CHECK_FALSE(j.contains("wall_time_s"));
}

TEST_CASE("stepanov report") {
    const auto j = run_json({"stepanov", "--q", "13", "--d", "3", "--A", "0,7", "--B", "1,5", "--json"});
    const auto& r = j["results"];
    CHECK(r["deg_f"] == 4);
    CHECK(r["bound"] == 4);
    CHECK(r["tight"] == true);
    CHECK(r["coefficients"] == Json::array({11, 2}));
    CHECK(r["binom_residue"] == 5);
    for (const auto& b : r["per_b_multiplicity"]) CHECK(b["multiplicity"].get<int>() >= 2);
    CHECK(run({"stepanov", "--q", "13", "--d", "3", "--A", "0,7", "--B", "1,6"}).code == kExitFailure);
}

TEST_CASE("search report and determinism") {
    const std::vector<std::string> args{"search", "--q", "13", "--d", "2", "--json", "--no-cache"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = Json::parse(a.out);
    CHECK(j["results"]["status"] == "NONE_EXHAUSTIVE");
    CHECK(j["results"]["witness_count"] == 0);

    const auto big = run_json({"search", "--q", "8191", "--d", "3", "--json"});
    CHECK(big["results"]["status"] == "UNKNOWN");
    const auto prime_sd = run_json({"search", "--q", "4127", "--d", "2", "--json"});
    CHECK(prime_sd["results"]["status"] == "IMPOSSIBLE");
    CHECK(prime_sd["results"]["provenance"] == "THEOREM");

    CHECK(run({"search", "--q", "49", "--d", "8", "--arity", "3", "--part", "0,1", "--part", "0,1", "--part", "1,2,4"})
              .code == 0);
    CHECK(run({"search", "--q", "13", "--d", "3", "--part", "0,7", "--part", "1,6"}).code == kExitFailure);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"search", "--q", "13"}).code == kExitUsage);
    const auto bad = run({"stepanov", "--q", "13", "--d", "3", "--A", "0,x", "--B", "1"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("--A") != std::string::npos);
    CHECK(run({"search", "--q", "13", "--d", "5"}).code == kExitUsage);
    CHECK(run({"construct", "--family", "bogus", "--p", "7", "--n", "1"}).code == kExitUsage);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("construct and charsum") {
    const auto j = run_json({"construct", "--family", "subfield", "--p", "7", "--n", "2", "--k", "1", "--json"});
    CHECK(j["results"]["verified"] == true);
    CHECK(j["results"]["d"] == 8);
    CHECK(run({"construct", "--family", "a-plus-a", "--p", "5", "--n", "1"}).code == kExitUsage);
    const auto c = run_json({"charsum", "--q", "13", "--d", "3", "--A", "0,7", "--B", "1,5", "--json"});
    CHECK(c["results"]["sum_re"].get<double>() == doctest::Approx(4.0));
    CHECK(c["results"]["tight_case"] == true);
}

TEST_CASE("analyze") {
    const auto j = run_json({"analyze", "--q", "13", "--d", "3", "--A", "0,7", "--B", "1,5", "--json"});
    CHECK(j["results"]["branch"] == 1);
    CHECK(run({"analyze", "--q", "13", "--d", "3", "--A", "0,7", "--B", "1,6"}).code == kExitFailure);
}

TEST_CASE("selftest and replay") {
    CHECK(run({"selftest", "--rng-seed", "5", "--rounds", "20"}).code == 0);
    const auto dir = scratch("replay");
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"search", "--q", "49", "--d", "8", "--json", "--no-cache"},
             {"stepanov", "--q", "13", "--d", "3", "--A", "0,7", "--B", "1,5", "--json"},
             {"construct", "--family", "ternary", "--p", "7", "--n", "2", "--json"},
             {"classify", "--q", "121", "--d", "3", "--json"}}) {
        const auto r = run(args);
        REQUIRE(r.code == 0);
        const auto path = dir / "report.json";
        std::ofstream(path) << r.out;
        const auto rep = run({"selftest", "--replay", path.string()});
        CHECK(rep.code == 0);
        CHECK(rep.out.find("FAIL") == std::string::npos);

        auto tampered = Json::parse(r.out);
        if (args[0] == "search") {
            tampered["results"]["witnesses"][0]["parts"][0][1] = 3;
            std::ofstream(path) << tampered.dump();
            CHECK(run({"selftest", "--replay", path.string()}).code == kExitFailure);
        }
    }
    fs::remove_all(dir);
}

TEST_CASE("cache round trip, version stamp and tamper detection") {
    const auto dir = scratch("cache");
    const auto f = make_field(7, 2);
    const ResultCache cache(dir, "v1");
    const auto key = ResultCache::make_key(*f, "search", Json{{"d", 8}});
    const Json payload{{"status", "EXISTS"}, {"witnesses", Json::array({Json::array({{0, 1}, {1, 2, 3, 4, 5}})})}};
    CHECK_FALSE(cache.get(key).has_value());
    CHECK(cache.put(key, payload));
    REQUIRE(cache.get(key).has_value());
    CHECK(*cache.get(key) == payload);

    CHECK_FALSE(ResultCache(dir, "v2").get(key).has_value());
    CHECK_FALSE(cache.get(ResultCache::make_key(*f, "search", Json{{"d", 2}})).has_value());

    {
        std::ifstream in(cache.entry_path(key));
        std::stringstream ss;
        ss << in.rdbuf();
        auto entry = Json::parse(ss.str());
        entry["payload"]["status"] = "NONE_EXHAUSTIVE";
        std::ofstream(cache.entry_path(key)) << entry.dump();
    }
    CHECK_FALSE(cache.get(key).has_value());
    std::ofstream(cache.entry_path(key)) << "{not json";
    CHECK_FALSE(cache.get(key).has_value());

    const ResultCache unwritable("/proc/sdecomp-no-such-dir", "v1");
    CHECK_FALSE(unwritable.put(key, payload));
    CHECK_FALSE(unwritable.get(key).has_value());
    fs::remove_all(dir);
}

TEST_CASE("search uses and revalidates the cache") {
    const auto dir = scratch("search-cache");
    ::setenv("SDECOMP_CACHE_DIR", dir.c_str(), 1);
    const std::vector<std::string> args{"search", "--q", "49", "--d", "8", "--json"};
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.err.find("miss") != std::string::npos);
    CHECK(second.err.find("hit") != std::string::npos);
    CHECK(first.out == second.out);

    // a forged witness with a valid checksum is rejected on revalidation
    const auto f = make_field(7, 2);
    const ResultCache cache(ResultCache::default_dir());
    const auto key = ResultCache::make_key(*f, "search", Json{{"d", 8}, {"arity", 2}, {"min_size", 2}});
    auto payload = *cache.get(key);
    payload["witnesses"][0][0] = Json::array({0, 3});
    cache.put(key, payload);
    const auto third = run(args);
    CHECK(third.err.find("miss") != std::string::npos);
    CHECK(third.out == first.out);

    std::vector<std::string> capped = args;
    capped.insert(capped.end(), {"--max-witnesses", "3"});
    const auto cold = run({"search", "--q", "49", "--d", "8", "--json", "--no-cache", "--max-witnesses", "3", "--threads", "1"});
    const auto warm = run(capped);
    CHECK(warm.err.find("hit") != std::string::npos);
    const auto wr = Json::parse(warm.out)["results"];
    CHECK(wr["witnesses"].size() == 3);
    CHECK(wr["truncated"] == true);
    CHECK(wr["exhaustive"] == false);
    CHECK(Json::parse(cold.out)["results"]["truncated"] == true);
    fs::remove_all(dir);
}
