#include "doctest.h"

#include "../tools/cli.hpp"
#include "tconvex/orthoscheme.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"tconvex"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = tconvex::cli::main_impl(static_cast<int>(argv.size()),
                                             argv.data(), out, err);
    return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << body;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const char* kT0Str = "0.8813735870195430"; // asinh(1)

} // namespace

TEST_CASE("polygon command reports both coarea paths") {
    const CliResult r = run_cli({"polygon", "--phis", kT0Str, "--hs", "1"});
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "polygon");
    CHECK(j["n"] == 1);
    CHECK(j["t_convex"] == true);
    CHECK(j["formal"] == false);
    const double want = std::sqrt(2.0) - 1.0;
    CHECK(std::abs(j["coarea_formula"].get<double>() - want) <= 1e-12);
    CHECK(std::abs(j["coarea_geometric"].get<double>() - want) <= 1e-12);
    CHECK(j["vertices"].size() == 1);
    CHECK(j["offending_edges"].empty());
}

TEST_CASE("polygon command on a formal, non-t-convex spec") {
    const CliResult r =
        run_cli({"polygon", "--phis", "0.5", "0.5", "--hs", "1", "10"});
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["formal"] == false); // h > 0 everywhere, merely outside the cone
    CHECK(j["t_convex"] == false);
    CHECK(j["offending_edges"] == json::array({1}));
    CHECK(j["coarea_geometric"].is_null());
}

TEST_CASE("gram command") {
    const CliResult r = run_cli({"gram", "--phis", "0.3", "0.4", "0.5"});
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["positive_definite"] == true);
    CHECK(j["factorization_ok"] == true);
    CHECK(j["dominance_margin"].get<double>() > 0.0);
    CHECK(j["entries"].size() == 3);
    CHECK(std::abs(j["entries"][0][0].get<double>() - 2.7983459220301972) <= 1e-14);
}

TEST_CASE("orthoscheme command: n >= 3 and the n = 2 arc") {
    const CliResult r = run_cli({"orthoscheme", "--phis", "0.3", "0.4", "0.5"});
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["dihedral_cos"].size() == 3);
    CHECK(std::abs(j["dihedral_cos"][0].get<double>() - 0.56365640241588242) <=
          1e-14);
    for (const auto& w : j["cross_ratio"]) {
        CHECK(w["lambda"].get<double>() > 1.0);
        CHECK(w["identity_gap"].get<double>() <= 1e-12);
    }

    const CliResult arc = run_cli({"orthoscheme", "--phis", "0.7", "1.1"});
    REQUIRE(arc.exit_code == 0);
    const json ja = json::parse(arc.out);
    CHECK(std::abs(ja["arc_theta"].get<double>() - 0.77874283304713477) <= 1e-14);
}

TEST_CASE("solve command round-trips dihedral data") {
    // Squared dihedral cosines of (0.3, 0.5, 0.7).
    const CliResult r = run_cli({"solve", "--dihedral-sq",
                                 "0.37874215766801406", "0.17231891560544082",
                                 "0.08945387896574985"});
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["max_residual"].get<double>() <= 1e-7);
    const std::vector<double> phis = j["phis"].get<std::vector<double>>();
    const tconvex::OrthoschemeAngles oa = tconvex::dihedral_cosines(phis);
    const std::vector<double> A = j["dihedral_sq"].get<std::vector<double>>();
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(std::abs(oa.dihedral_cos[k] * oa.dihedral_cos[k] - A[k]) <= 1e-6);
}

TEST_CASE("cone command") {
    const CliResult r = run_cli({"cone", "--phis", "0.3", "0.4", "0.5"});
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["face_type"] == "S");
    CHECK(std::abs(j["theta_closed"].get<double>() - 6.5315509058255769) <= 1e-13);
    CHECK(std::abs(j["theta_sum"].get<double>() -
                   j["theta_closed"].get<double>()) <= 1e-12);

    const CliResult wrong = run_cli({"cone", "--phis", "0.3", "0.4"});
    CHECK(wrong.exit_code == 2);
}

TEST_CASE("config files merge under the command-line flags") {
    const std::string path = "test_cli_cfg.json";
    write_file(path, R"({"command": "polygon",
                         "phis": [0.3, 0.4, 0.5],
                         "hs": [1.0, 1.0, 1.0]})");

    const CliResult base = run_cli({"polygon", "--config", path});
    REQUIRE(base.exit_code == 0);
    const double c1 = json::parse(base.out)["coarea_formula"].get<double>();

    // Flag overrides the file; coarea is quadratic in h.
    const CliResult scaled =
        run_cli({"polygon", "--config", path, "--hs", "2", "2", "2"});
    REQUIRE(scaled.exit_code == 0);
    const double c2 = json::parse(scaled.out)["coarea_formula"].get<double>();
    CHECK(std::abs(c2 - 4 * c1) <= 1e-12 * c2);

    // A config whose command disagrees with the subcommand is rejected.
    const CliResult clash = run_cli({"gram", "--config", path});
    CHECK(clash.exit_code == 2);

    std::remove(path.c_str());
}

TEST_CASE("emitted polygon JSON is itself a valid config") {
    const CliResult first =
        run_cli({"polygon", "--phis", "0.3", "0.4", "0.5", "--hs", "1.0", "1.03",
                 "1.01"});
    REQUIRE(first.exit_code == 0);

    const std::string path = "test_cli_roundtrip.json";
    write_file(path, first.out);
    const CliResult second = run_cli({"polygon", "--config", path});
    REQUIRE(second.exit_code == 0);

    const json a = json::parse(first.out);
    const json b = json::parse(second.out);
    CHECK(std::abs(a["coarea_formula"].get<double>() -
                   b["coarea_formula"].get<double>()) <= 1e-12);
    CHECK(std::abs(a["coarea_geometric"].get<double>() -
                   b["coarea_geometric"].get<double>()) <= 1e-12);
    CHECK(a["phis"] == b["phis"]);
    CHECK(a["hs"] == b["hs"]);

    std::remove(path.c_str());
}

TEST_CASE("csv output is the long key,index,value format") {
    const CliResult r =
        run_cli({"gram", "--phis", "0.3", "0.4", "0.5", "--format", "csv"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("key,index,value\n", 0) == 0);
    CHECK(r.out.find("\npositive_definite,,true\n") != std::string::npos);
    CHECK(r.out.find("\nphis,1,0.3\n") != std::string::npos);
    CHECK(r.out.find("\nentries,1.1,") != std::string::npos);
    CHECK(r.out.find("\nentries,3.3,") != std::string::npos);
}

TEST_CASE("svg flag writes a deterministic file") {
    const std::string path = "test_cli_plot.svg";
    const std::vector<std::string> args{"polygon", "--phis", kT0Str,
                                        "--hs",    "1",     "--svg", path};
    const CliResult r1 = run_cli(args);
    REQUIRE(r1.exit_code == 0);
    CHECK(json::parse(r1.out)["svg"] == path);
    const std::string body1 = read_file(path);

    const CliResult r2 = run_cli(args);
    REQUIRE(r2.exit_code == 0);
    const std::string body2 = read_file(path);
    CHECK(body1 == body2);
    CHECK(body1.rfind("<svg", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("exit codes separate domain errors from config errors") {
    // Domain error (n = 1 has no Gram matrix): 1, named on the diagnostic
    // stream.
    const CliResult domain = run_cli({"gram", "--phis", "0.3"});
    CHECK(domain.exit_code == 1);
    CHECK(domain.err.find("BadAngle") != std::string::npos);

    const CliResult solve_bad =
        run_cli({"solve", "--dihedral-sq", "1.2", "0.5", "0.5"});
    CHECK(solve_bad.exit_code == 1);
    CHECK(solve_bad.err.find("BadInput") != std::string::npos);

    // Config-level failures: 2.
    CHECK(run_cli({"polygon", "--hs", "1"}).exit_code == 2);
    CHECK(run_cli({"polygon", "--phis", "0.5", "--hs", "1", "--bogus"}).exit_code ==
          2);
    CHECK(run_cli({"polygon", "--config", "no_such_file.json"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);

    const std::string path = "test_cli_broken.json";
    write_file(path, "{ not json");
    CHECK(run_cli({"polygon", "--config", path}).exit_code == 2);
    std::remove(path.c_str());

    CHECK(run_cli({"--help"}).exit_code == 0);
}

TEST_CASE("check command is reproducible for a fixed seed") {
    const CliResult a = run_cli({"check", "--seed", "7"});
    const CliResult b = run_cli({"check", "--seed", "7"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("11/11 checks passed (seed 7)") != std::string::npos);
}
