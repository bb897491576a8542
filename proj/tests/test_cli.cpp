/*
 * Copyright 2026 the negacode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "negacode/asymptote.hpp"
#include "negacode/census.hpp"
#include "negacode/dncode.hpp"
#include "negacode/poly.hpp"

using namespace negacode;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("factor emits the factorization with profile and agreement") {
    const CliRun r = run({"factor", "--q", "3", "--n", "4", "--method", "both"});
    REQUIRE(r.exit_code == 0);
    const ordered_json doc = ordered_json::parse(r.out);
    CHECK(doc["command"] == "factor");
    CHECK(doc["q"] == 3);
    CHECK(doc["n"] == 4);
    CHECK(doc["agreement"] == true);
    REQUIRE(doc["factors"].size() == 2);
    // Cross-check against the library's own factorization.
    const Field f(3);
    const auto factors = factor_xn_plus_one(f, 4);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(doc["factors"][i]["poly"] == factors[i].str());
        CHECK(doc["factors"][i]["degree"] == factors[i].degree());
        CHECK(doc["factors"][i]["coeffs"].get<std::vector<uint64_t>>() == factors[i].coeffs());
    }
    CHECK(doc["profile"]["s"] == 0);
    CHECK(doc["profile"]["t"] == 1);
    CHECK(doc["profile"]["has_x_plus_one"] == false);
}

TEST_CASE("factor text output lists one factor per line") {
    const CliRun r = run({"factor", "--q", "7", "--n", "3", "--format", "text"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("x^3 + 1 over F_7 = product of 3 irreducible factor(s)") !=
          std::string::npos);
    CHECK(r.out.find("x+1") != std::string::npos);
    CHECK(r.out.find("x+2") != std::string::npos);
    CHECK(r.out.find("x+4") != std::string::npos);
    CHECK(r.out.find("self-reciprocal factors: 1, reciprocal pairs: 1") != std::string::npos);
}

TEST_CASE("factor results do not depend on the seed") {
    const CliRun a = run({"factor", "--q", "13", "--n", "8", "--seed", "7"});
    const CliRun b = run({"factor", "--q", "13", "--n", "8", "--seed", "900913"});
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("census records round-trip through parsing and re-verification") {
    const CliRun r = run({"census", "--q", "3", "--n", "2"});
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);  // 4 codes + summary
    const Field f(3);
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        const ordered_json rec = ordered_json::parse(lines[i]);
        // Rebuild the code from the parsed record and re-check the claim.
        const auto a = rec["a"].get<std::vector<uint64_t>>();
        const DNCode code(f, a);
        CHECK(is_self_dual(code));
        // Re-serialize in the same shape; the bytes must match.
        ordered_json again;
        again["q"] = rec["q"].get<uint64_t>();
        again["n"] = rec["n"].get<uint64_t>();
        again["a"] = a;
        again["self_dual"] = is_self_dual(code);
        CHECK(again.dump() == lines[i]);
    }
    const ordered_json summary = ordered_json::parse(lines.back());
    CHECK(summary["summary"] == true);
    CHECK(summary["count_formula"] == "4");
    CHECK(summary["count_enumerated"] == 4);
    CHECK(summary["method"] == "brute");
    CHECK(summary["agreement"] == true);
}

TEST_CASE("census methods brute and crt produce identical record streams") {
    const CliRun brute = run({"census", "--q", "5", "--n", "4", "--method", "brute"});
    const CliRun crt = run({"census", "--q", "5", "--n", "4", "--method", "crt"});
    REQUIRE(brute.exit_code == 0);
    REQUIRE(crt.exit_code == 0);
    const auto brute_lines = lines_of(brute.out);
    const auto crt_lines = lines_of(crt.out);
    REQUIRE(brute_lines.size() == 25);  // 24 codes + summary
    REQUIRE(crt_lines.size() == 25);
    // Code records agree byte for byte; the summaries differ in the method.
    for (size_t i = 0; i + 1 < brute_lines.size(); ++i) {
        CHECK(brute_lines[i] == crt_lines[i]);
    }
    CHECK(ordered_json::parse(crt_lines.back())["method"] == "crt");
}

TEST_CASE("census with an unavailable count still emits the enumeration") {
    // q = 3, n = 5: odd length and no square root of -1, so the formula
    // refuses but the scan finds the (empty) census.
    const CliRun r = run({"census", "--q", "3", "--n", "5"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);  // summary only: the census is empty
    const ordered_json summary = ordered_json::parse(lines.back());
    CHECK(summary["count_formula"].is_null());
    CHECK(summary["count_enumerated"] == 0);
}

TEST_CASE("census text output is human-shaped") {
    const CliRun r = run({"census", "--q", "3", "--n", "2", "--format", "text"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("census q=3 n=2: 4 self-dual code(s)") != std::string::npos);
    CHECK(r.out.find("formula count 4 (agreement)") != std::string::npos);
    CHECK(r.out.find("a = 1,1") != std::string::npos);
}

TEST_CASE("search orders the census by distance, best first") {
    const CliRun r = run({"search", "--q", "3", "--n", "4"});
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 9);  // 8 codes + summary
    const Field f(3);
    uint64_t prev_d = ~0ull;
    std::vector<uint64_t> prev_a;
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        const ordered_json rec = ordered_json::parse(lines[i]);
        const auto a = rec["a"].get<std::vector<uint64_t>>();
        const uint64_t d = rec["d"].get<uint64_t>();
        // Distances are re-derivable from the record.
        CHECK(d == min_distance(DNCode(f, a)));
        if (i > 0) {
            CHECK(d <= prev_d);
            if (d == prev_d) CHECK(prev_a < a);
        }
        prev_d = d;
        prev_a = a;
    }
    const ordered_json summary = ordered_json::parse(lines.back());
    CHECK(summary["count"] == 8);
    CHECK(summary["best_d"] == 3);
}

TEST_CASE("check reports duality, distance, and the weight distribution") {
    const CliRun r = run({"check", "--q", "3", "--n", "2", "--a", "1,1"});
    REQUIRE(r.exit_code == 0);
    const ordered_json doc = ordered_json::parse(r.out);
    CHECK(doc["command"] == "check");
    CHECK(doc["self_dual"] == true);
    CHECK(doc["d"] == 3);
    CHECK(doc["weight_enumerator"].get<std::vector<uint64_t>>() ==
          std::vector<uint64_t>{1, 0, 0, 8, 0});
    CHECK(doc.count("witness") == 0);
}

TEST_CASE("check with dihedral witness attaches the symmetry data") {
    const CliRun r = run({"check", "--q", "5", "--n", "3", "--a", "1,2,3", "--dihedral"});
    REQUIRE(r.exit_code == 0);
    const ordered_json doc = ordered_json::parse(r.out);
    REQUIRE(doc.count("witness") == 1);
    CHECK(doc["witness"]["ok"] == true);
    CHECK(doc["witness"]["permutation_group_order"] == 6);
    const int scalar = doc["witness"]["relation_scalar"].get<int>();
    CHECK((scalar == 1 || scalar == -1));
    // The recorded monomials act on length-6 vectors.
    CHECK(doc["witness"]["tau"]["perm"].size() == 6);
    CHECK(doc["witness"]["sigma"]["signs"].size() == 6);
}

TEST_CASE("check still prints the verdict when the witness is blocked") {
    // Not self-dual: the verdict document appears, the status reports it.
    const CliRun r = run({"check", "--q", "5", "--n", "3", "--a", "1,0,0", "--dihedral"});
    CHECK(r.exit_code == 2);
    const ordered_json doc = ordered_json::parse(r.out);
    CHECK(doc["self_dual"] == false);
    CHECK(doc["witness"]["ok"] == false);
    CHECK_FALSE(doc["witness"]["failure"].get<std::string>().empty());
    CHECK(r.err.find("error:") != std::string::npos);

    // Even block length: same contract through the shape restriction.
    const CliRun even = run({"check", "--q", "3", "--n", "2", "--a", "1,1", "--dihedral"});
    CHECK(even.exit_code == 2);
    const ordered_json even_doc = ordered_json::parse(even.out);
    CHECK(even_doc["self_dual"] == true);
    CHECK(even_doc["witness"]["ok"] == false);

    // Text format carries the same information.
    const CliRun text = run(
        {"check", "--q", "3", "--n", "2", "--a", "1,1", "--dihedral", "--format", "text"});
    CHECK(text.exit_code == 2);
    CHECK(text.out.find("dihedral witness: unavailable") != std::string::npos);
}

TEST_CASE("bound returns the pinned thresholds") {
    const CliRun r = run({"bound", "--q", "3"});
    REQUIRE(r.exit_code == 0);
    const ordered_json doc = ordered_json::parse(r.out);
    CHECK(doc["delta_star"].get<double>() ==
          doctest::Approx(0.061777954170098394).epsilon(1e-9));
    CHECK(doc["entropy"].get<double>() == doctest::Approx(0.25).epsilon(1e-9));
    const CliRun text = run({"bound", "--q", "5", "--format", "text"});
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("delta* for q=5 is 0.0833") != std::string::npos);
}

TEST_CASE("report csv matches the library rendering and repeats exactly") {
    const CliRun a = run({"report", "--q", "3", "--n-list", "2,3,4"});
    REQUIRE(a.exit_code == 0);
    const Field f(3);
    CHECK(a.out == family_report_csv(family_report(f, {2, 3, 4})));
    const CliRun b = run({"report", "--q", "3", "--n-list", "2,3,4"});
    CHECK(a.out == b.out);
}

TEST_CASE("report json marks skipped rows with a note") {
    const CliRun r = run({"report", "--q", "3", "--n-list", "2,3", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const ordered_json doc = ordered_json::parse(r.out);
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["skipped"] == false);
    CHECK(doc["rows"][0]["count_formula"] == "4");
    CHECK(doc["rows"][0]["best_d"] == 3);
    CHECK(doc["rows"][1]["skipped"] == true);
    CHECK(doc["rows"][1]["count_formula"].is_null());
    CHECK_FALSE(doc["rows"][1]["note"].get<std::string>().empty());
}

TEST_CASE("usage problems exit with status one") {
    CHECK(run({}).exit_code == 1);
    CHECK(run({"factor"}).exit_code == 1);                             // missing --q/--n
    CHECK(run({"factor", "--q", "3", "--n", "2", "--method", "x"}).exit_code == 1);
    CHECK(run({"factor", "--q", "4", "--n", "2"}).exit_code == 1);     // even q
    CHECK(run({"factor", "--q", "15", "--n", "2"}).exit_code == 1);    // not a prime power
    CHECK(run({"census", "--q", "3", "--n", "3"}).exit_code == 1);     // 3 divides 3
    CHECK(run({"check", "--q", "3", "--n", "2", "--a", "1"}).exit_code == 1);
    CHECK(run({"check", "--q", "3", "--n", "2", "--a", "1,x"}).exit_code == 1);
    CHECK(run({"check", "--q", "3", "--n", "2", "--a", "1,7"}).exit_code == 1);
    CHECK(run({"bound", "--q", "2"}).exit_code == 1);
    CHECK(run({"nonsense"}).exit_code == 1);
    const CliRun help = run({"--help"});
    CHECK(help.exit_code == 0);  // help is not an error
    CHECK(help.out.find("factor") != std::string::npos);
}

TEST_CASE("structural refusals exit with status two") {
    // The paired-component route cannot run when no pair exists.
    const CliRun crt = run({"census", "--q", "7", "--n", "4", "--method", "crt"});
    CHECK(crt.exit_code == 2);
    CHECK(crt.err.find("error:") != std::string::npos);
}

TEST_CASE("capacity refusals exit with status three") {
    const CliRun r = run(
        {"census", "--q", "13", "--n", "8", "--method", "brute", "--capacity", "1000"});
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("error:") != std::string::npos);
    const CliRun d = run({"check", "--q", "5", "--n", "7", "--a", "1,2,3,0,0,0,1",
                          "--distance-capacity", "1000"});
    CHECK(d.exit_code == 3);
}

TEST_CASE("the capacity environment variable sets the default budget") {
    setenv("NEGACODE_CAPACITY", "50", 1);
    const CliRun r = run({"census", "--q", "3", "--n", "4", "--method", "brute"});
    unsetenv("NEGACODE_CAPACITY");
    CHECK(r.exit_code == 3);
    // An explicit flag overrides the environment.
    setenv("NEGACODE_CAPACITY", "50", 1);
    const CliRun ok = run(
        {"census", "--q", "3", "--n", "4", "--method", "brute", "--capacity", "1e7"});
    unsetenv("NEGACODE_CAPACITY");
    CHECK(ok.exit_code == 0);
}

}  // TEST_SUITE
