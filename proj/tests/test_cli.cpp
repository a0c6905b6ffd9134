#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "tnc/intmath.hpp"

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TNC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("tncodes_test_" + name);
}

} // namespace

TEST_SUITE("cli") {
    TEST_CASE("construct reports the code and the matched prediction") {
        RunResult r = run_cli("construct -p 2 -t 1 --m1 2 --m2 4 -m 4 -a 0");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "[7,2,4]"));
        CHECK(contains(r.out, "1 + 2z^4 + z^6"));
        CHECK(contains(r.out, "Theorem 4.2"));
        CHECK(contains(r.out, "optimal"));

        RunResult s = run_cli("construct -p 3 -t 1 --m1 2 --m2 4 -m 4 -a 0 --shorten");
        CHECK(s.exit_code == 0);
        CHECK(contains(s.out, "[13,2,9]"));
        CHECK(contains(s.out, "Corollary 4.10"));
    }

    TEST_CASE("invalid parameters exit with code 2") {
        CHECK(run_cli("construct -p 2 -t 1 --m1 3 --m2 4 -m 4 -a 0").exit_code == 2);
        CHECK(run_cli("construct -p 4 -t 1 --m1 2 --m2 2 -m 2").exit_code == 2);
        CHECK(run_cli("construct -p 2 --m1 2 --m2 1 -m 2 -a 0").exit_code == 2); // empty defining set
        CHECK(run_cli("construct --no-such-flag").exit_code == 2);
        CHECK(run_cli("nonsense").exit_code == 2);
        CHECK(run_cli("--help").exit_code == 0);
    }

    TEST_CASE("reports are byte-identical across runs") {
        std::string args = "construct -p 3 -t 1 --m1 2 --m2 3 -m 6 -a 1 --json";
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        json doc = json::parse(a.out);
        CHECK(doc.at("schema_version") == "1");
        CHECK(doc.at("enumerator") == "1 + 4z^168 + 4z^210");
    }

    TEST_CASE("single-spec verify reports the enumerator") {
        RunResult r = run_cli("verify -p 2 -t 1 --m1 4 --m2 6 -m 12");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "1 + 5z^1040 + 10z^1144")); // a = 1 case
        CHECK(contains(r.out, "1 + 10z^1040 + 5z^1144")); // a = 0 case
    }

    TEST_CASE("gauss and omega checks pass on the documented cases") {
        RunResult g = run_cli("gauss -p 3 -t 2 --quadratic");
        CHECK(g.exit_code == 0);
        CHECK(contains(g.out, "3.000000"));
        RunResult full = run_cli("gauss -p 5 -t 1");
        CHECK(full.exit_code == 0);
        RunResult o = run_cli("omega -p 2 -t 1 --m1 2 --m2 4 -m 4");
        CHECK(o.exit_code == 0);
        CHECK(contains(o.out, "{-3: 2, 5: 1}"));
    }

    TEST_CASE("srg subcommand certifies the graph families") {
        RunResult r = run_cli("srg -p 2 -t 1 -m 4 --theorem 5.6");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "(16,5,0,2)"));
        RunResult s = run_cli("srg -p 2 -t 1 -m 4 --theorem 5.5");
        CHECK(s.exit_code == 0);
        CHECK(contains(s.out, "(16,10,6,6)"));
        CHECK(run_cli("srg -p 2 -t 1 -m 3 --theorem 5.6").exit_code == 2);
        CHECK(run_cli("srg -p 2 -t 1 -m 4 --theorem 9.9").exit_code == 2);
    }

    TEST_CASE("fixture round trip, and corruption flips verify to exit 1") {
        auto path = temp_file("fixtures.json");
        RunResult seed = run_cli("seed-fixtures --out " + path.string());
        CHECK(seed.exit_code == 0);

        json doc;
        {
            std::ifstream in(path);
            in >> doc;
        }
        CHECK(doc.at("schema_version") == "1");
        CHECK(doc.at("entries").size() == 8);

        CHECK(run_cli("verify --fixtures " + path.string()).exit_code == 0);

        json bad = doc;
        bad["entries"][0]["weights"][0][1] = bad["entries"][0]["weights"][0][1].get<tnc::i64>() + 1;
        auto bad_path = temp_file("fixtures_bad.json");
        {
            std::ofstream out(bad_path);
            out << bad.dump(2);
        }
        RunResult r = run_cli("verify --fixtures " + bad_path.string());
        CHECK(r.exit_code == 1);
        CHECK(contains(r.out, "FAIL"));

        auto junk_path = temp_file("fixtures_junk.json");
        {
            std::ofstream out(junk_path);
            out << "{ not json";
        }
        CHECK(run_cli("verify --fixtures " + junk_path.string()).exit_code == 2);
        CHECK(run_cli("verify --fixtures /nonexistent/fixtures.json").exit_code == 2);

        std::filesystem::remove(path);
        std::filesystem::remove(bad_path);
        std::filesystem::remove(junk_path);
    }

    TEST_CASE("the committed fixture file verifies clean") {
        CHECK(run_cli("verify --fixtures " + std::string(TNC_FIXTURE_PATH)).exit_code == 0);
    }

    TEST_CASE("small sweep verifies clean") {
        RunResult r = run_cli("verify --qs 2 3 --max-field-order 512");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "sweep:"));
        CHECK(!contains(r.out, "FAIL"));
    }
}

TEST_SUITE("cli extras") {
    TEST_CASE("codeword dumps use the pinned scalar tokens") {
        RunResult prime = run_cli("construct -p 3 -t 1 --m1 2 --m2 2 -m 2 -a 1 --codewords");
        CHECK(prime.exit_code == 0);
        CHECK(contains(prime.out, "c(0) = 0 0"));
        CHECK(contains(prime.out, "2")); // prime-field scalars print as digits
        RunResult pp = run_cli("construct -p 2 -t 2 --m1 2 --m2 2 -m 2 -a 1 --codewords");
        CHECK(pp.exit_code == 0);
        CHECK(contains(pp.out, "g^2")); // prime-power scalars print as generator powers
    }

    TEST_CASE("table cap can come from the environment") {
        RunResult r = run_cli("construct -p 2 -t 1 --m1 2 --m2 4 -m 4 --table-cap 8");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.out, "FieldTooLarge"));
        // same via the environment variable
        std::string cmd = "env TNCODES_TABLE_CAP=8 " + std::string(TNC_CLI_PATH) +
                          " construct -p 2 -t 1 --m1 2 --m2 4 -m 4 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        std::array<char, 4096> buf;
        size_t got;
        while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
        int status = pclose(pipe);
        CHECK(WEXITSTATUS(status) == 2);
        CHECK(contains(out, "FieldTooLarge"));
    }
}
