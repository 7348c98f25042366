#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cellkernel::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Compares against tests/golden/<name>; CELLKERNEL_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(const std::string& name, const std::string& actual) {
    const std::string path = std::string(CELLKERNEL_GOLDEN_DIR) + "/" + name;
    if (std::getenv("CELLKERNEL_UPDATE_GOLDEN")) {
        std::ofstream(path) << actual;
        return;
    }
    EXPECT_EQ(actual, read_file(path)) << "golden mismatch for " << name;
}

}  // namespace

TEST(Golden, KernelN3R1Z) {
    const auto r = run({"kernel", "--n", "3", "--r", "1", "--eps", "0", "--ring", "Z"});
    EXPECT_EQ(r.code, 0);
    expect_golden("kernel_n3_r1_Z.jsonl", r.out);
}

TEST(Golden, KernelN5R2F2Pretty) {
    const auto r = run({"kernel", "--n", "5", "--r", "2", "--ring", "F2", "--format", "pretty"});
    EXPECT_EQ(r.code, 0);
    expect_golden("kernel_n5_r2_F2.txt", r.out);
}

TEST(Golden, KernelHalfCsv) {
    const auto r = run({"kernel", "--n", "5", "--r", "2", "--eps", "half", "--ring", "Q", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    expect_golden("kernel_n5_r2_half_Q.csv", r.out);
}

TEST(Golden, VerifyDefaultGrid) {
    const auto r = run({"verify", "--all", "--max-d", "5", "--jobs", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    expect_golden("verify_all_max_d5.jsonl", r.out);
}

TEST(Cli, KernelAlternatingVector) {
    const auto r = run({"kernel", "--n", "3", "--r", "1", "--format", "pretty"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("kernel rank 1"), std::string::npos);
    EXPECT_NE(r.out.find("[1,2,3] - [1,3,2] - [2,1,3] + [2,3,1] + [3,1,2] - [3,2,1]"), std::string::npos);
}

TEST(Cli, KernelJsonRoundTrips) {
    const auto r = run({"kernel", "--n", "4", "--r", "1", "--ring", "Q"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rank"], 14);
    const auto inst = cellkernel::Instance::from_json(j["instance"]);
    EXPECT_EQ(inst.n, 4);
    for (const auto& e : j["basis"])
        EXPECT_EQ(cellkernel::GroupAlgElem<cellkernel::RationalRing>::from_json(e, {}).to_json(), e);
}

TEST(Cli, DiagramMul) {
    auto r = run({"diagram", "mul", "--left", "1|1'", "--right", "1|1'", "--delta", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "4 * 1|1'\n");
    r = run({"diagram", "mul", "--left", "1,1'", "--right", "1,1'", "--delta", "4"});
    EXPECT_EQ(r.out, "1,1'\n");
    r = run({"diagram", "mul", "--left", "1|1'", "--right", "1|1'", "--delta", "4", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(r.out)["coefficient"], "4");
    r = run({"diagram", "mul", "--left", "1|1", "--right", "1|1'", "--delta", "4"});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, Murphy) {
    const auto r = run({"murphy", "--d", "2", "--basis", "y", "--format", "pretty"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "y_{[[1,2]],[[1,2]]} = [1,2] - [2,1]\ny_{[[1],[2]],[[1],[2]]} = [1,2]\n");
    EXPECT_EQ(run({"murphy", "--d", "3", "--basis", "z"}).code, 2);
}

TEST(Cli, DecomposeAndCommutant) {
    auto r = run({"decompose", "--n", "3", "--r", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"dimension\":9"), std::string::npos);
    r = run({"commutant", "--n", "3", "--r", "1", "--ring", "Q"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["dimension"], 5);
    EXPECT_EQ(run({"commutant", "--n", "3", "--r", "1", "--ring", "Z"}).code, 2);
    EXPECT_EQ(run({"commutant", "--n", "10", "--r", "2"}).code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"kernel", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"kernel", "--n", "3", "--r", "1", "--bogus"}).code, 2);
    EXPECT_EQ(run({"kernel", "--n", "3", "--r", "2"}).code, 2);
    EXPECT_EQ(run({"kernel", "--n", "3", "--r", "2", "--allow-faithful"}).code, 0);
    EXPECT_EQ(run({"kernel", "--n", "3", "--r", "1", "--ring", "F4"}).code, 2);
    EXPECT_EQ(run({"kernel", "--n", "3", "--r", "1", "--eps", "1"}).code, 2);
    EXPECT_EQ(run({"kernel", "--n", "9", "--r", "1"}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
    EXPECT_EQ(run({"verify", "--check", "nonsense"}).code, 2);
    EXPECT_EQ(run({"verify", "--all", "--max-d", "7"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "kernel", "--n", "3", "--r", "1"}).code, 2);
}

TEST(Cli, VerifyIsDeterministicAcrossJobCounts) {
    const auto a = run({"verify", "--check", "kernel_cell_ideal", "--check", "when_zero", "--max-d", "4", "--jobs", "1"});
    const auto b = run({"verify", "--check", "kernel_cell_ideal", "--check", "when_zero", "--max-d", "4", "--jobs", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto csv = run({"verify", "--check", "faithful", "--max-d", "3", "--format", "csv"});
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "check,instance,pass,ranks,witness");
}
