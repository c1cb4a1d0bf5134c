#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qirw/json_io.hpp"

using namespace qirw;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QIRW_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path temp_dir() {
    auto dir = fs::temp_directory_path() / "qirw_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("cli generate is deterministic and valid") {
    auto dir = temp_dir();
    auto a = dir / "comb_a.json", b = dir / "comb_b.json";
    CHECK(run_cli("generate --gen comb --m 3 --out " + a.string()).exit_code == 0);
    CHECK(run_cli("generate --gen comb --m 3 --out " + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));

    auto bp = dir / "bp.json";
    CHECK(run_cli("generate --gen bounded_pw --seed 7 --n 18 --k 2 --out " + bp.string())
              .exit_code == 0);
    auto inst = instance_from_json(load_json_file(bp.string()));
    CHECK(validate(inst.d).empty());
    CHECK(inst.d.width() <= 2);

    CHECK(run_cli("generate --gen nosuch").exit_code == 1);
}

TEST_CASE("cli synthesize, certify and measure") {
    auto dir = temp_dir();
    auto ipath = dir / "pathlike.json";
    REQUIRE(run_cli("generate --gen pathlike --seed 5 --n 8 --p 2 --q 0 --out " + ipath.string())
                .exit_code == 0);

    auto rpath = dir / "report.json";
    auto syn = run_cli("synthesize --instance " + ipath.string() + " --out " + rpath.string());
    CHECK(syn.exit_code == 0);
    REQUIRE(fs::exists(rpath));

    auto cert = run_cli("certify --instance " + ipath.string() + " --report " + rpath.string());
    CHECK(cert.exit_code == 0);
    CHECK(cert.out.find("PASS") != std::string::npos);

    // tamper with the claimed constant: certification must fail with exit 2
    auto j = load_json_file(rpath.string());
    j["c_prime"] = "0";
    auto bad = dir / "report_bad.json";
    save_json_file(bad.string(), j);
    auto cert2 = run_cli("certify --instance " + ipath.string() + " --report " + bad.string());
    CHECK(cert2.exit_code == 2);
    CHECK(cert2.out.find("FAIL") != std::string::npos);

    auto csv = run_cli("certify --instance " + ipath.string() + " --report " + rpath.string() +
                       " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("generator,") != std::string::npos);

    auto meas = run_cli("measure --instance " + ipath.string());
    CHECK(meas.exit_code == 0);
    auto mj = json::parse(meas.out);
    CHECK(mj.at("c").get<int>() >= 2);

    // fast profile agrees with the default
    auto rfast = dir / "report_fast.json";
    auto fast = run_cli("synthesize --instance " + ipath.string() + " --profile fast --out " +
                        rfast.string());
    CHECK(fast.exit_code == 0);
    CHECK(load_json_file(rfast.string()).at("weighting") ==
          load_json_file(rpath.string()).at("weighting"));

    // dot output for inspection
    auto dot = run_cli("synthesize --instance " + ipath.string() + " --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph {") != std::string::npos);
    CHECK(dot.out.find("label=") != std::string::npos);

    CHECK(run_cli("synthesize --instance " + ipath.string() + " --profile bogus").exit_code == 1);
}

TEST_CASE("cli measure on the smallest comb") {
    auto dir = temp_dir();
    auto ipath = dir / "comb1.json";
    REQUIRE(run_cli("generate --gen comb --m 1 --out " + ipath.string()).exit_code == 0);
    auto meas = run_cli("measure --instance " + ipath.string());
    CHECK(meas.exit_code == 0);
    auto mj = json::parse(meas.out);
    CHECK(mj.at("c").get<int>() == 2);
    CHECK(mj.at("minimal_additive").get<int>() == 1); // the (1,1) parameters
}

TEST_CASE("cli input errors exit 1") {
    auto dir = temp_dir();
    CHECK(run_cli("synthesize --g /nonexistent.json --h /nonexistent.json --phi /nonexistent.json")
              .exit_code == 1);

    // missing bag file argument entirely: decomposition defaults to no bags,
    // which fails validation
    auto ipath = dir / "pathlike2.json";
    REQUIRE(run_cli("generate --gen pathlike --seed 6 --n 6 --p 1 --q 0 --out " + ipath.string())
                .exit_code == 0);
    auto inst = instance_from_json(load_json_file(ipath.string()));
    auto gpath = dir / "g.json", hpath = dir / "h.json", ppath = dir / "phi.json";
    save_json_file(gpath.string(), graph_to_json(*inst.g));
    save_json_file(hpath.string(), graph_to_json(*inst.h));
    save_json_file(ppath.string(), vertex_map_to_json(inst.phi));
    auto r = run_cli("synthesize --g " + gpath.string() + " --h " + hpath.string() + " --phi " +
                     ppath.string());
    CHECK(r.exit_code == 1);

    // and the full four-file form works
    auto bpath = dir / "bags.json";
    save_json_file(bpath.string(), decomposition_to_json(inst.d));
    auto ok = run_cli("synthesize --g " + gpath.string() + " --h " + hpath.string() + " --phi " +
                      ppath.string() + " --bags " + bpath.string() + " --out " +
                      (dir / "r2.json").string());
    CHECK(ok.exit_code == 0);

    // malformed json
    auto badpath = dir / "broken.json";
    {
        std::ofstream f(badpath);
        f << "{ not json";
    }
    CHECK(run_cli("measure --instance " + badpath.string()).exit_code == 1);
}
