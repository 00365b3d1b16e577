#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int status = mbs::cli::run(args, in, out, err);
    return {status, out.str(), err.str()};
}

std::string build(const std::vector<std::string>& args) {
    std::vector<std::string> full{"build"};
    full.insert(full.end(), args.begin(), args.end());
    const auto r = run(full);
    EXPECT_EQ(r.status, 0) << r.err;
    return r.out;
}

class TempDir {
public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("mbs_cli_" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string write(const std::string& name, const std::string& content) const {
        const auto p = path_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, S3ObstructionFromStdin) {
    const auto r = run({"s3"}, build({"one-sector", "0", "2,2"}));
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "OBSTRUCTED: H1 torsion Z/2\n");
    const auto ok = run({"s3", "-"}, build({"rose", "1"}));
    EXPECT_EQ(ok.status, 0);
    EXPECT_TRUE(contains(ok.out, "INCONCLUSIVE: H1 = Z^2"));
}

TEST(Cli, InvariantsOfPants) {
    const auto r = run({"invariants"}, build({"pants"}));
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "euler characteristic: -4\n"));
    EXPECT_TRUE(contains(r.out, "branch l1: index 3, degree 1\n"));
    EXPECT_TRUE(contains(r.out, "H1: Z/3 + Z^5\n"));
    EXPECT_TRUE(contains(r.out, "regular: yes\n"));
}

TEST(Cli, MixedDegree) {
    const auto r = run({"invariants"}, "branch l\nsector a genus 0\nsector b genus 0\nprebranch a l 1\nprebranch b l 2\n");
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "degree mixed"));
    EXPECT_TRUE(contains(r.out, "regular: no"));
}

TEST(Cli, GenusBounds) {
    const auto r = run({"genus-bounds"}, build({"seifert", "2,3"}));
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "sector bound: 4\n"));
    EXPECT_TRUE(contains(r.out, "heegaard bound: 2\n"));
    EXPECT_TRUE(contains(r.out, "best bound: 2\n"));
    EXPECT_TRUE(contains(r.out, "exhaustive"));
    const auto flips = run({"genus-bounds", "--flips"}, build({"obstruction"}));
    ASSERT_EQ(flips.status, 0) << flips.err;
    EXPECT_TRUE(contains(flips.out, "rejected flip assignments:"));
}

TEST(Cli, ValidateDocument) {
    const auto doc = build({"pants"}) + "\n" + build({"obstruction"});
    const auto r = run({"validate"}, doc);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "VALID pants: 4 branches, 4 sectors\nVALID obstruction: 1 branches, 1 sectors\n");
}

TEST(Cli, ErrorsExitTwo) {
    auto r = run({"validate"}, "branch l\nsector d genus 0\nprebranch d l 0\n");
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(contains(r.err, "SemanticError"));
    EXPECT_TRUE(contains(r.err, "line 3"));
    r = run({"invariants", "/nonexistent/file.mbs"});
    EXPECT_EQ(r.status, 2);
    r = run({"frobnicate"});
    EXPECT_EQ(r.status, 2);
    r = run({"build", "seifert", "1"});
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(contains(r.err, "DegreeTooSmall"));
    r = run({"build", "graph", "2", "0+1"});
    EXPECT_EQ(r.status, 2);
    r = run({"genus-bounds"}, "branch l\nsector a genus 0\nsector b genus 0\nprebranch a l 1\nprebranch b l 2\n");
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(contains(r.err, "NotRegular"));
}

TEST(Cli, HelpExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "genus-bounds"));
}

TEST(Cli, IsoAndMinors) {
    TempDir dir;
    const auto a = dir.write("a.mbs", build({"one-sector", "0", "2,3"}));
    const auto b = dir.write("b.mbs", build({"one-sector", "0", "3,2", "-1,1"}));
    const auto c = dir.write("c.mbs", build({"one-sector", "1", "2,3"}));
    auto r = run({"iso", a, b});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "ISOMORPHIC\n");
    r = run({"iso", a, c});
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "NOT ISOMORPHIC\n");
    r = run({"is-minor", a, a});
    EXPECT_EQ(r.out, "MINOR\n");
    r = run({"is-minor", c, a});
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "NOT A MINOR\n");
    r = run({"minors", a});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("2 minors\n", 0), 0u);
    r = run({"minors", "--max", "1", a});
    EXPECT_EQ(r.status, 2);
}

TEST(Cli, CertificateRoundTrip) {
    TempDir dir;
    const auto host = dir.write("host.mbs", build({"seifert", "2,3"}));
    const auto minor = dir.write("minor.mbs", build({"one-sector", "0", "1"}));
    const auto cert = dir.path("cert.json");
    auto r = run({"nminor", minor, host, "--depth", "4", "--certificate", cert});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "NEIGHBORHOOD MINOR: 3 steps\n"));
    EXPECT_TRUE(contains(r.out, "genus bound: g(minor) <= g(host) <= 2\n"));
    r = run({"replay", cert, minor});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "CERTIFICATE VALID\n");
    r = run({"replay", cert, host});
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "CERTIFICATE INVALID\n");
    r = run({"nminor", minor, host, "--depth", "1"});
    EXPECT_EQ(r.status, 1);
    EXPECT_TRUE(contains(r.out, "NOT FOUND"));
}

TEST(Cli, OmegaAndDecompose) {
    auto r = run({"omega-candidate"}, build({"obstruction"}));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("CANDIDATE: H1 torsion Z/4", 0), 0u);
    r = run({"omega-candidate"}, build({"one-sector", "0", "2,3"}));
    EXPECT_EQ(r.status, 1);
    EXPECT_TRUE(contains(r.out, "NOT A CANDIDATE"));
    r = run({"decompose"}, build({"pants"}));
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "# closed surfaces: genus 0, genus 0, genus 0, genus 0\n"));
    EXPECT_TRUE(contains(r.out, "prebranch e1_1 l2 1\n"));
}

TEST(Cli, Export) {
    auto r = run({"export", "--dot", "dual-graph"}, build({"pants"}));
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "graph"));
    r = run({"export", "--json", "surface"}, build({"pants"}));
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out.front(), '{');
    r = run({"export", "--json", "--dot", "spine"}, build({"pants"}));
    EXPECT_EQ(r.status, 2);
    r = run({"export", "--json", "volume"}, build({"pants"}));
    EXPECT_EQ(r.status, 2);
}

TEST(Cli, BuildRoundTripsThroughValidate) {
    for (const auto& args : std::vector<std::vector<std::string>>{{"seifert", "2,3,5"},
                                                                   {"one-sector", "2", "2,4", "1,-1"},
                                                                   {"pants"},
                                                                   {"rose", "3"},
                                                                   {"graph", "3", "0-1,1-2,2-0,1-1"},
                                                                   {"obstruction"}}) {
        const auto text = build(args);
        const auto r = run({"validate"}, text);
        EXPECT_EQ(r.status, 0) << r.err;
        EXPECT_EQ(build(args), text);
    }
}

TEST(Cli, OutputIsDeterministic) {
    const auto input = build({"pants"});
    for (const auto& cmd : std::vector<std::string>{"invariants", "genus-bounds", "minors", "decompose"}) {
        const auto first = run({cmd}, input);
        const auto second = run({cmd}, input);
        EXPECT_EQ(first.status, second.status);
        EXPECT_EQ(first.out, second.out) << cmd;
    }
}
