#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "support.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(YVLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST(Cli, ComputeText) {
    EXPECT_EQ(run("compute 2").out, "x^3 - 1\n");
    EXPECT_EQ(run("compute 0").out, "1\n");
    EXPECT_EQ(run("compute 4").out, "x^10 - 15x^7 - 175x\n");
    EXPECT_EQ(run("compute 2").code, 0);
}

TEST(Cli, ComputeJson) {
    const auto r = run("compute 5 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = yvlab::Json::parse(r.out);
    EXPECT_EQ(j["coeffs"], yvlab::Json::parse(R"(["6125","-12250","-1225","175","-35","1"])"));
    EXPECT_EQ(yvlab::parse_poly_json(r.out), yvlab::yv_compute(5));
    const auto neg = yvlab::parse_poly_json(run("compute -3 --format json --a -4").out);
    EXPECT_EQ(neg.n(), -3);
    EXPECT_EQ(neg.coeffs(), yvlab::yv_compute(2, -4).coeffs());
}

TEST(Cli, DeterminantOutputIsByteIdentical) {
    for (int n = 0; n <= 20; ++n) {
        const std::string k = std::to_string(n);
        ASSERT_EQ(run("compute " + k + " --method determinant").out, run("compute " + k).out) << "n=" << n;
        ASSERT_EQ(run("compute " + k + " --method determinant --format json").out, run("compute " + k + " --format json").out);
    }
}

TEST(Cli, VerifySuites) {
    auto r = run("verify --suite theorem1 --nmax 60");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("60 cases, 0 failures"), std::string::npos) << r.out;
    r = run("verify --suite pii --nmax 8");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("8 cases, 0 failures"), std::string::npos) << r.out;
    r = run("verify --suite theorem3 --primes 5,7");
    EXPECT_EQ(r.code, 0) << r.out;
    r = run("verify --suite lemma1 --nmax 6 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = yvlab::Json::parse(r.out);
    EXPECT_EQ(j["cases"], 6);
    EXPECT_EQ(j["failures"], 0);
    EXPECT_EQ(j["suites"][0]["suite"], "lemma1");
}

TEST(Cli, VerifyAllTextAndJsonAgree) {
    const auto text = run("verify --suite all --nmax 10 --primes 5");
    const auto json = run("verify --suite all --nmax 10 --primes 5 --format json");
    ASSERT_EQ(text.code, 0) << text.out;
    ASSERT_EQ(json.code, 0);
    const auto j = yvlab::Json::parse(json.out);
    EXPECT_EQ(j["suites"].size(), 7u);
    const std::string total = "total: " + std::to_string(j["cases"].get<long>()) + " cases, 0 failures";
    EXPECT_NE(text.out.find(total), std::string::npos) << text.out;
    for (const auto& s : j["suites"]) {
        const std::string line = "suite " + s["suite"].get<std::string>() + ": " + std::to_string(s["cases"].get<long>()) +
                                 " cases, " + std::to_string(s["failures"].size()) + " failures";
        EXPECT_NE(text.out.find(line), std::string::npos) << line;
    }
}

TEST(Cli, VerifyInputFile) {
    const auto good = temp_file("yvlab_good.json", run("compute 6 --format json").out);
    EXPECT_EQ(run("verify --input " + good).code, 0);
    auto doc = yvlab::to_poly_json(yvlab::yv_compute(6));
    doc["coeffs"][0] = "12345";
    const auto bad = temp_file("yvlab_bad.json", doc.dump());
    const auto r = run("verify --input " + bad);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("1 failures"), std::string::npos) << r.out;
    const auto junk = temp_file("yvlab_junk.json", "{");
    EXPECT_EQ(run("verify --input " + junk).code, 2);
    EXPECT_EQ(run("verify --input /nonexistent/file.json").code, 2);
}

TEST(Cli, Tables) {
    auto r = run("table --what ratio --jmax 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("a~_1(m) = -m\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("b~_1(m) = m\n"), std::string::npos);
    EXPECT_NE(r.out.find("c~_1(m) = 0\n"), std::string::npos);
    r = run("table --what ratio --jmax 0");
    EXPECT_EQ(r.out, "a~_0(m) = 1\nb~_0(m) = 1\nc~_0(m) = 1\n");
    r = run("table --what t0 --nmax 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\n4\t-175\n"), std::string::npos) << r.out;
    r = run("table --what t0 --nmax 5 --format json");
    const auto j = yvlab::Json::parse(r.out);
    EXPECT_EQ(j["rows"][5]["t0"], "6125");
    r = run("table --what ratio --jmax 2 --format json");
    EXPECT_EQ(yvlab::Json::parse(r.out)["a"].size(), 3u);
}

TEST(Cli, Bench) {
    for (const std::string method : {"recursion", "determinant"}) {
        const auto r = run("bench --nmax 10 --method " + method + " --format json");
        ASSERT_EQ(r.code, 0);
        const auto j = yvlab::Json::parse(r.out);
        ASSERT_EQ(j[method].size(), 10u);
        for (const auto& row : j[method]) EXPECT_GE(row["seconds"].get<double>(), 0.0);
    }
    const auto text = run("bench --nmax 3");
    EXPECT_EQ(text.code, 0);
    EXPECT_EQ(std::count(text.out.begin(), text.out.end(), '\n'), 7);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("compute --help").code, 0);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("compute").code, 2);
    EXPECT_EQ(run("compute two").code, 2);
    EXPECT_EQ(run("compute 3 --method magic").code, 2);
    EXPECT_EQ(run("compute 3 --format xml").code, 2);
    EXPECT_EQ(run("compute 3 --a 0").code, 2);
    EXPECT_EQ(run("compute 3 --a 2 --method determinant").code, 2);
    EXPECT_EQ(run("compute 26 --method determinant").code, 2);
    EXPECT_EQ(run("compute 201").code, 2);
    EXPECT_EQ(run("compute 6", "YVLAB_NMAX_CAP=5").code, 2);
    EXPECT_EQ(run("compute 5", "YVLAB_NMAX_CAP=5").code, 0);
    EXPECT_EQ(run("compute 3", "YVLAB_NMAX_CAP=abc").code, 2);
    EXPECT_EQ(run("--nmax-cap 5 compute 6").code, 2);
    EXPECT_EQ(run("verify --suite nope").code, 2);
    EXPECT_EQ(run("verify --suite theorem3 --primes 9").code, 2);
    EXPECT_EQ(run("verify --suite theorem3 --primes 3").code, 2);
    EXPECT_EQ(run("verify --suite theorem3 --primes 101").code, 2);
    EXPECT_EQ(run("verify --suite theorem1 --nmax 0").code, 2);
    EXPECT_EQ(run("verify --suite theorem1 --nmax 500").code, 2);
    EXPECT_EQ(run("table --what nothing").code, 2);
    EXPECT_EQ(run("table --what ratio --jmax -1").code, 2);
    EXPECT_EQ(run("bench --nmax 30 --method determinant").code, 2);
    EXPECT_EQ(run("bench --nmax 0").code, 2);
}
