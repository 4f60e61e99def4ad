#include <gtest/gtest.h>

#include "json.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string data(const std::string& name) { return std::string(ANNCAT_DATA) + "/" + name; }

Run run(const std::string& args) {
    const std::string cmd = std::string(ANNCAT_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("anncat_cli_" + name);
    std::ofstream(path) << content;
    return path;
}

const std::string z2 = data("z2_ring.json") + " " + data("regular_module.json");
const std::string z3 = data("z3_ring.json") + " " + data("regular_module.json");
const std::string ring_mod_z2 = " --ring " + data("z2_ring.json") + " --module " + data("regular_module.json");

}  // namespace

TEST(Cli, ValidateGoodRing) { EXPECT_EQ(run("validate " + data("z4_ring.json")).code, 0); }

TEST(Cli, ValidateBadStructure) {
    const auto r = run("validate " + data("bad_structure_normalization.json") + ring_mod_z2);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("(0,1,1)"), std::string::npos) << r.out;
}

TEST(Cli, ValidateBadModuleNamesLawD) {
    const auto r = run("validate " + data("bad_module_unit.json") + " --ring " + data("z2_ring.json") + " --format json");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("\"d\""), std::string::npos) << r.out;
}

TEST(Cli, ValidateBadRing) { EXPECT_EQ(run("validate " + data("bad_ring.json")).code, 1); }

TEST(Cli, ValidateEtaStructureFailsRelation9) {
    const auto r = run("validate " + data("z2_eta_structure.json") + ring_mod_z2 + " --format json");
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["exit_code"], 1);
}

TEST(Cli, ValidateZeroStructure) { EXPECT_EQ(run("validate " + data("z2_zero_structure.json") + ring_mod_z2).code, 0); }

TEST(Cli, MissingFileIsFormatError) { EXPECT_EQ(run("validate /nonexistent/ring.json").code, 2); }

TEST(Cli, MalformedJsonReportsLocation) {
    const auto path = temp_file("bad.json", "{\n  \"order\": 2,\n  \"add\": [[0,1] [1,0]]\n}\n");
    const auto r = run("validate " + path.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("bad.json:3:"), std::string::npos) << r.out;
    std::filesystem::remove(path);
}

TEST(Cli, UnknownFlagIsFormatError) { EXPECT_EQ(run("h3 " + z2 + " --no-such-flag").code, 2); }

TEST(Cli, MismatchedAmbients) {
    const auto r = run("witness " + data("z2_zero_structure.json") + " " + data("z2_zero_structure.json") + " --ring " +
                       data("z3_ring.json") + " --module " + data("regular_module.json"));
    EXPECT_EQ(r.code, 2) << r.out;
}

TEST(Cli, H3CrossCheck) {
    const auto r = run("h3 " + z3 + " --cross-check --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["h3_order"], 1);
    EXPECT_EQ(j["z3_order"], 27);
    EXPECT_EQ(run("h3 " + z2 + " --cross-check").code, 0);
}

TEST(Cli, H3TrivialModule) {
    const auto r = run("h3 " + data("z2_ring.json") + " " + data("trivial_module.json") + " --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(nlohmann::json::parse(r.out)["h3_order"], 1);
}

TEST(Cli, H3Z4OverZ2) {
    const auto r = run("h3 " + data("z4_ring.json") + " " + data("z2_over_z4_module.json") + " --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(nlohmann::json::parse(r.out)["h3_order"], 2);
}

TEST(Cli, JsonIsDeterministic) {
    const auto a = run("h3 " + z3 + " --format json");
    const auto b = run("h3 " + z3 + " --format json");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto c = run("classify " + z3 + " --format json");
    const auto d = run("classify " + z3 + " --format json");
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, OutFileMatchesStdout) {
    const auto path = std::filesystem::temp_directory_path() / "anncat_cli_out.json";
    std::filesystem::remove(path);
    const auto r = run("h3 " + z3 + " --format json --out " + path.string());
    ASSERT_EQ(r.code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(nlohmann::json::parse(ss.str()), nlohmann::json::parse(r.out));
    std::filesystem::remove(path);
}

TEST(Cli, ClassifyZ2AndZ3) {
    const auto a = run("classify " + z2 + " --format json");
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(nlohmann::json::parse(a.out)["search_space"], 4);
    const auto b = run("classify " + z3 + " --format json");
    ASSERT_EQ(b.code, 0) << b.out;
    EXPECT_EQ(nlohmann::json::parse(b.out)["valid_count"], 27);
}

TEST(Cli, EnumerateRefusesOverBudget) {
    const auto r = run("enumerate " + z3 + " --strategy brute --budget 1000");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("10460353203"), std::string::npos) << r.out;
}

TEST(Cli, WitnessNotCongruent) {
    const auto r = run("witness " + data("z2_zero_structure.json") + " " + data("z2_eta_structure.json") + ring_mod_z2);
    EXPECT_EQ(r.code, 1) << r.out;
}

TEST(Cli, WitnessSelf) {
    EXPECT_EQ(run("witness " + data("z2_zero_structure.json") + " " + data("z2_zero_structure.json") + ring_mod_z2).code, 0);
}

TEST(Cli, SigmaOfZero) {
    EXPECT_EQ(run("sigma " + data("z2_zero_structure.json") + ring_mod_z2).code, 0);
    EXPECT_EQ(run("sigma " + data("z2_zero_structure.json") + ring_mod_z2 + " --method printed").code, 0);
    EXPECT_EQ(run("sigma " + data("z2_eta_structure.json") + ring_mod_z2).code, 1);
}
