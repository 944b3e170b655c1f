/*
   Copyright 2026 The zerofree authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + ZEROFREE_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "zerofree_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("analyze") {
        const Run a = run("analyze \"X^4-10*X^3+2162\"");
        CHECK(a.code == 0);
        CHECK(a.out.find("best sector: v = [10.00000000, 10.00000000] via neg_sum") != std::string::npos);
        CHECK(a.out.find("v~ = [0.16661525, 0.16661526]") != std::string::npos);
        CHECK(a.out.find("cot interval: (2.41421357, 3.58763771)") != std::string::npos);

        const Run b = run("analyze \"X^2+1\"");
        CHECK(b.code == 0);
        CHECK(b.out.find("v = [0.00000000, 0.00000000] via nonneg, angle pi/2") != std::string::npos);

        const Run c = run("analyze --coeffs \"-1,-8,1,-3,0,-7,0,0,5,2\"");
        CHECK(c.code == 0);
        CHECK(c.out.find("block 1: S+ = 7, S- = 10") != std::string::npos);
        CHECK(c.out.find("block 2: S+ = 1, S- = 9") != std::string::npos);

        const Run d = run("analyze --json \"X^4-10*X^3+2162\"");
        REQUIRE(d.code == 0);
        const auto j = nlohmann::json::parse(d.out);
        CHECK(j["best_sector"]["method"] == "neg_sum");
        CHECK(j["lens"]["cot"]["lo"].get<std::string>().substr(0, 7) == "2.41421");
    }

    TEST_CASE("plot is deterministic") {
        const fs::path p1 = scratch("a.svg"), p2 = scratch("b.svg");
        CHECK(run("analyze \"X^4-10*X^3+2162\" --plot " + p1.string()).code == 0);
        CHECK(run("analyze \"X^4-10*X^3+2162\" --plot " + p2.string()).code == 0);
        const std::string a = slurp(p1);
        CHECK(a.find("<svg") == 0);
        CHECK(a.find("<circle") != std::string::npos);
        CHECK(a == slurp(p2));
    }

    TEST_CASE("certify exit codes") {
        const Run a = run("certify \"X^4-10*X^3+2162\" --m 3");
        CHECK(a.code == 0);
        CHECK(a.out.find("cor310_cot") != std::string::npos);
        const Run b = run("certify \"X^2+X+1\" --m 2 --prime-power");
        CHECK(b.code == 0);
        CHECK(b.out.find("thm35_prime_power") != std::string::npos);
        CHECK(run("certify \"(X^2+1)*(X^2+3)\" --search 1..50").code == 1);
        CHECK(run("certify \"X^2+\" --m 2").code == 2);
        CHECK(run("certify \"X^2+1\" --coeffs 1,0,1 --m 2").code == 2);
        CHECK(run("certify \"X^2+1\"").code == 2);
        CHECK(run("certify \"X^2+1\" --m 2 --search 1..3").code == 2);
        CHECK(run("certify \"X^2+1\" --search 5..1").code == 2);
        CHECK(run("certify \"X^2+1\" --m 2 --digits 3").code == 2);
        CHECK(run("certify \"X^2+1\" --m 2 --criteria bogus").code == 2);
        CHECK(run("frobnicate").code == 2);
        CHECK(run("--help").code == 0);
    }

    TEST_CASE("negative m") {
        const Run a = run("certify \"X^3-9*X^2+7*X-3\" --m -10 --json");
        REQUIRE(a.code == 0);
        const auto j = nlohmann::json::parse(a.out);
        CHECK(j["m"] == "-10");
        CHECK(j["transforms"]["argument_negated"] == true);
        const Run b = run("certify \"X^3-9*X^2+7*X-3\" --search 10..10 --negative-m");
        CHECK(b.code == 0);
    }

    TEST_CASE("certificate files") {
        const Run a = run("certify \"X^4-10*X^3+2162\" --m 3 --json");
        REQUIRE(a.code == 0);
        auto j = nlohmann::ordered_json::parse(a.out);
        CHECK(nlohmann::ordered_json::parse(j.dump()) == j);
        const fs::path good = scratch("good.json");
        write(good, a.out);
        CHECK(run("verify " + good.string()).code == 0);

        auto tampered = j;
        tampered["m"] = "2";
        const fs::path t = scratch("tampered.json");
        write(t, tampered.dump());
        CHECK(run("verify " + t.string()).code == 1);

        auto schema = j;
        schema["schema"] = 2;
        const fs::path s = scratch("schema.json");
        write(s, schema.dump());
        CHECK(run("verify " + s.string()).code == 2);

        const fs::path junk = scratch("junk.json");
        write(junk, "{not json");
        CHECK(run("verify " + junk.string()).code == 2);
        CHECK(run("verify " + scratch("missing.json").string()).code == 2);
    }

    TEST_CASE("precision from the environment") {
        const Run a = run("certify \"X^4-10*X^3+2162\" --m 3 --json", "ZEROFREE_DIGITS=30");
        REQUIRE(a.code == 0);
        CHECK(nlohmann::json::parse(a.out)["digits"] == 30);
        const Run b = run("certify \"X^4-10*X^3+2162\" --m 3 --json --digits 20", "ZEROFREE_DIGITS=30");
        CHECK(nlohmann::json::parse(b.out)["digits"] == 20);
    }

    TEST_CASE("scan families") {
        const fs::path d = scratch("digits.json");
        write(d, R"({"family": "digit_polynomial", "base": 10, "primes": [1000, 10000]})");
        const Run a = run("scan --json " + d.string());
        REQUIRE(a.code == 0);
        const auto ja = nlohmann::json::parse(a.out);
        CHECK(ja["instances"] == 1061);
        CHECK(ja["certified"] == 1061);

        const fs::path q = scratch("quartic.json");
        write(q, R"({"family": "quartic", "a": [1, 3], "b": [650, 700], "m": 3})");
        const Run b = run("scan --json " + q.string());
        REQUIRE(b.code == 0);
        for (const auto& row : nlohmann::json::parse(b.out)["rows"]) {
            if (row["outcome"] != "value_composite") CHECK(row["outcome"] == "certified");
        }

        const fs::path pp = scratch("power.json");
        write(pp, R"({"family": "shifted_prime_power", "base": "X^3+2*X+1", "m": 2, "k": 2, "primes": [17, 400]})");
        const Run c = run("scan --json " + pp.string());
        REQUIRE(c.code == 0);
        const auto jc = nlohmann::json::parse(c.out);
        CHECK(jc["certified"] == jc["instances"]);
        CHECK(jc["rows"][0]["criterion"] == "thm35_prime_power");

        const fs::path sp = scratch("shifted.json");
        write(sp, R"({"family": "shifted_prime", "base": "X^4-10*X^3", "m": 3, "primes": [2000, 2100]})");
        const Run e = run("scan " + sp.string());
        CHECK(e.code == 0);

        const fs::path bad = scratch("bad.json");
        write(bad, R"({"family": "nonsense"})");
        CHECK(run("scan " + bad.string()).code == 2);
        write(bad, R"({"family": "quartic", "a": [3, 1], "b": [1, 2]})");
        CHECK(run("scan " + bad.string()).code == 2);
    }
}
