#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "repalg/cache.hpp"

using namespace repalg;
namespace fs = std::filesystem;

namespace {

const std::string kCli = REPALG_CLI;
const std::string kQuivers = REPALG_QUIVER_DIR;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string q(const std::string& name) { return "--quiver " + kQuivers + "/" + name + ".q"; }

fs::path temp_dir(const std::string& tag)
{
    auto d = fs::temp_directory_path() / ("repalg-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

} // namespace

TEST(Cli, GldimOfDuplicatedA2)
{
    auto r = run(q("a2") + " --m 1 gldim");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, VerifyThm1)
{
    auto r = run(q("a2") + " verify thm1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("achievable: [2,3,4]"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run(q("kronecker") + " --m 1 --budget 200 indecs").code, 3);
    EXPECT_EQ(run(q("a2") + " verify no_such_suite").code, 2);
    EXPECT_EQ(run(q("a2") + " verify lem48").code, 2);
    EXPECT_EQ(run(q("a2") + " construct thm32 --d 5").code, 2);
    EXPECT_EQ(run("--quiver /nonexistent.q gldim").code, 2);
    auto dir = temp_dir("bad");
    std::ofstream(dir / "cyclic.q") << "vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n";
    EXPECT_EQ(run("--quiver " + (dir / "cyclic.q").string() + " gldim").code, 2);
    fs::remove_all(dir);
}

TEST(Cli, OutputIsDeterministic)
{
    auto a = run(q("a3_linear") + " --json --seed 4 verify lem31_random");
    auto b = run(q("a3_linear") + " --json --seed 4 verify lem31_random");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ConstructFeedsGldimEnd)
{
    auto dir = temp_dir("spec");
    auto c = run(q("a2") + " --json construct thm32 --d 3");
    ASSERT_EQ(c.code, 0);
    auto j = nlohmann::json::parse(c.out)["result"];
    std::ofstream(dir / "m.json") << j.dump();
    auto g = run(q("a2") + " gldim-end " + (dir / "m.json").string());
    EXPECT_EQ(g.code, 0);
    EXPECT_EQ(g.out, "3\n");
    // written for another prime: rejected
    EXPECT_EQ(run(q("a2") + " --prime 5 gldim-end " + (dir / "m.json").string()).code, 2);
    fs::remove_all(dir);
}

TEST(Cli, DotExport)
{
    auto dir = temp_dir("dot");
    auto path = (dir / "ar.dot").string();
    EXPECT_EQ(run(q("a2") + " ar-quiver --dot " + path).code, 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "digraph ARQuiver {");
    fs::remove_all(dir);
}

TEST(Cache, RoundTripAndReportsMatch)
{
    auto dir = temp_dir("cache");
    auto plain = run(q("a3_linear") + " --json tau-orbits");
    auto first = run(q("a3_linear") + " --json --cache " + dir.string() + " tau-orbits");
    auto second = run(q("a3_linear") + " --json --cache " + dir.string() + " tau-orbits");
    EXPECT_EQ(plain.out, first.out);
    EXPECT_EQ(first.out, second.out);

    ReplicatedAlgebra R(Quiver::parse_text("vertex 1\nvertex 2\narrow a: 2 -> 1\n"), 1, Fp(7));
    IndecCatalog c(R.algebra());
    CatalogCache cache(dir, nullptr);
    cache.save(R, c);
    auto back = cache.load(R);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(catalog_to_json(R, *back).dump(), catalog_to_json(R, c).dump());
    fs::remove_all(dir);
}

TEST(Cache, StaleAndCorruptFiles)
{
    auto dir = temp_dir("stale");
    const Quiver qa = Quiver::parse_text("vertex 1\nvertex 2\narrow a: 2 -> 1\n");
    ReplicatedAlgebra R7(qa, 1, Fp(7)), R5(qa, 1, Fp(5));
    EXPECT_NE(fingerprint(R7), fingerprint(R5));
    IndecCatalog c(R7.algebra());
    // a document for p = 7 is rejected for p = 5
    EXPECT_THROW(catalog_from_json(R5, catalog_to_json(R7, c)), InputError);

    std::ostringstream warn;
    CatalogCache cache(dir, &warn);
    cache.save(R7, c);
    EXPECT_FALSE(cache.load(R5).has_value());
    auto path = cache.path_for(R7);
    auto size = fs::file_size(path);
    fs::resize_file(path, size / 2);
    EXPECT_FALSE(cache.load(R7).has_value());
    EXPECT_NE(warn.str().find("warning"), std::string::npos);
    // get() recomputes and repairs the file
    EXPECT_EQ(cache.get(R7).size(), c.size());
    EXPECT_TRUE(cache.load(R7).has_value());
    fs::remove_all(dir);
}
