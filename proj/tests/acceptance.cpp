// Acceptance run: one PASS/FAIL line per criterion. Thresholds and time limits are fixed below.
//
// Exit status: 0 when every failing criterion is a recorded known discrepancy, 1 otherwise.
// With --strict any FAIL gives 1.

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>

#include "repalg/verify.hpp"

using namespace repalg;

namespace {

const std::string kQuiverDir = REPALG_QUIVER_DIR;

// Time limits in seconds.
constexpr double kLimit[11] = {0, 5, 30, 30, 180, 180, 120, 120, 180, 60, 120};
constexpr std::size_t kSamples = 200;
constexpr std::size_t kOracleInstances = 10;
constexpr std::uint64_t kSeed = 20240101;
constexpr std::size_t kWindow = 3;
constexpr std::uint32_t kWindowPrime = 3;

Quiver load(const std::string& name)
{
    std::ifstream in(kQuiverDir + "/" + name + ".q");
    if (!in)
        throw InputError("missing quiver file " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return Quiver::parse(s.str());
}

struct Outcome {
    bool pass = true;
    std::string detail;
    /// Set when the failure is a recorded disagreement with the source text.
    std::string known;
};

VerifyParams params(const std::string& quiver, std::size_t m = 1)
{
    VerifyParams p;
    p.quiver = load(quiver);
    p.m = m;
    p.seed = kSeed;
    p.samples = kSamples;
    p.window = kWindow;
    if (!is_representation_finite(p.quiver))
        p.prime = kWindowPrime;
    return p;
}

/// Runs a suite and folds its checks into the outcome.
void run_suite(Outcome& o, const std::string& suite, const VerifyParams& p, const std::string& tag)
{
    auto r = verify(suite, p);
    std::ostringstream d;
    d << tag << " " << suite << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size();
    for (auto& c : r.checks)
        if (!c.pass)
            d << " [failed: " << c.name << " " << c.detail.dump() << "]";
    if (!r.pass())
        o.pass = false;
    if (!o.detail.empty())
        o.detail += "; ";
    o.detail += d.str();
}

Outcome criterion1()
{
    Outcome o;
    const Quiver q = load("a2");
    std::vector<std::size_t> off;
    for (std::size_t m = 1; m <= 4; ++m) {
        ReplicatedAlgebra R(q, m);
        std::size_t g = global_dimension(R.algebra());
        o.detail += "m=" + std::to_string(m) + ":" + std::to_string(g) + " ";
        if (g != m + 1) {
            o.pass = false;
            off.push_back(m);
        }
    }
    if (off == std::vector<std::size_t>{3, 4})
        o.known = "A^(m) of this quiver is Nakayama with rad^3 = 0; its global dimension is 5, 6 for m = 3, 4";
    return o;
}

Outcome criterion2()
{
    Outcome o;
    for (auto name : {"a2", "a2_op", "a3_linear", "a3_sink", "d4_subspace", "kronecker"}) {
        const Quiver q = load(name);
        for (std::size_t m = 1; m <= 2; ++m) {
            std::size_t g = global_dimension(ReplicatedAlgebra(q, m).algebra());
            bool ok = g >= m + 1 && g <= 2 * m + 1;
            if (std::string(name) == "kronecker")
                ok = ok && g == 2 * m + 1;
            o.pass = o.pass && ok;
            o.detail += std::string(name) + "/" + std::to_string(m) + "=" + std::to_string(g) + (ok ? " " : "! ");
        }
    }
    return o;
}

Outcome criterion3()
{
    Outcome o;
    ReplicatedAlgebra R(load("a2"), 1, Fp(3));
    IndecCatalog cat(R.algebra());
    auto cards = tau_orbits(cat).cardinalities();
    std::sort(cards.rbegin(), cards.rend());
    // Independent oracle: every indecomposable with dimensions <= 2, with tau computed directly.
    auto found = BoundedIndecomposables(R.algebra(), 2).modules();
    auto index_of = [&](const Module& x) -> std::size_t {
        for (std::size_t i = 0; i < found.size(); ++i)
            if (found[i].dims() == x.dims() && is_iso_indecomposable(found[i], x))
                return i;
        return found.size();
    };
    std::vector<std::size_t> tau_of(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        Module t = tau(found[i]);
        tau_of[i] = t.is_zero() ? found.size() : index_of(t);
    }
    std::vector<bool> seen(found.size(), false);
    std::vector<std::size_t> oracle;
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (seen[i] || std::count(tau_of.begin(), tau_of.end(), i))
            continue; // start from the tau^-1 end
        std::size_t n = 0;
        for (std::size_t k = i; k < found.size() && !seen[k]; k = tau_of[k]) {
            seen[k] = true;
            ++n;
        }
        oracle.push_back(n);
    }
    std::sort(oracle.rbegin(), oracle.rend());
    auto mesh = ar_quiver(cat).mesh_failures;
    const std::vector<std::size_t> expect{4, 3, 1, 1};
    o.pass = cat.size() == 9 && found.size() == 9 && cards == expect && oracle == expect && mesh.empty();
    auto show = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (auto x : v)
            s += std::to_string(x) + " ";
        return s;
    };
    o.detail = "catalog " + std::to_string(cat.size()) + ", oracle " + std::to_string(found.size()) + ", orbits " +
               show(cards) + "oracle orbits " + show(oracle) + "mesh failures " + std::to_string(mesh.size());
    return o;
}

Outcome criterion4()
{
    Outcome o;
    for (auto q : {"a2", "a3_linear"})
        run_suite(o, "thm1", params(q), q);
    return o;
}

Outcome criterion5()
{
    Outcome o;
    for (auto q : {"a2", "a3_linear", "kronecker"})
        run_suite(o, "prop41", params(q), q);
    o.detail += " (kronecker: upper bound window-verified, B=3, p=3)";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    std::size_t compared = 0;
    std::mt19937_64 rng(kSeed);
    for (auto q : {"a2", "a3_linear", "a3_sink"}) {
        ReplicatedAlgebra R(load(q), 1);
        IndecCatalog cat(R.algebra());
        auto reg = std::make_shared<IndecRegistry>(cat);
        for (int k = 0; k < 8; ++k) {
            GenCog M = random_generator_cogenerator(reg, cat, rng);
            auto g = gldim_end_exact(M);
            auto e = end_algebra_gldim(M);
            if (!e)
                continue;
            ++compared;
            if (g.kind != GldimEnd::Kind::exact || g.value != *e) {
                o.pass = false;
                o.detail += std::string(q) + " mismatch " + g.describe() + " vs " + std::to_string(*e) + "; ";
            }
        }
    }
    o.pass = o.pass && compared >= kOracleInstances;
    o.detail += std::to_string(compared) + " instances compared";
    return o;
}

Outcome criterion7()
{
    Outcome o;
    run_suite(o, "lem22", params("a3_linear"), "a3");
    for (auto q : {"a2", "a3_linear"})
        run_suite(o, "lem23_2", params(q), q);
    return o;
}

Outcome criterion8()
{
    Outcome o;
    auto p = params("kronecker");
    p.d = 5;
    run_suite(o, "lem47", p, "kronecker d=5");
    return o;
}

Outcome criterion9()
{
    Outcome o;
    run_suite(o, "lem48", params("kronecker"), "kronecker");
    return o;
}

Outcome criterion10()
{
    Outcome o;
    for (auto q : {"a2", "a2_op", "a3_linear", "a3_sink", "d4_subspace", "kronecker"})
        run_suite(o, "cor42", params(q), q);
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"global dimension of A^(m), A_2, m = 1..4 equals m+1", criterion1},
        {"m+1 <= gl.dim A^(m) <= 2m+1, Kronecker attains 2m+1", criterion2},
        {"A_2 catalog and tau-orbits against bounded oracle, mesh identity", criterion3},
        {"achievable gl.dim End(M) is exactly 2..L on A_2, A_3", criterion4},
        {"gl.dim End(E_i) = i+2", criterion5},
        {"M-dimension criterion agrees with the end-algebra oracle", criterion6},
        {"stable Hom vanishing and pd sandwich", criterion7},
        {"Kronecker d = 5 construction", criterion8},
        {"Kronecker infinite M-dimension", criterion9},
        {"representation dimension bounds", criterion10},
    };
    int unexpected = 0, failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const std::size_t id = k + 1;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > kLimit[id]) {
            o.pass = false;
            o.known.clear();
            o.detail += " (over the " + std::to_string(static_cast<int>(kLimit[id])) + " s limit)";
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << id << "  " << criteria[k].first << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s)\n"
                  << "        " << o.detail << "\n";
        if (!o.pass) {
            ++failed;
            if (o.known.empty())
                ++unexpected;
            else
                std::cout << "        known discrepancy: " << o.known << "\n";
        }
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass";
    if (failed)
        std::cout << ", " << unexpected << " unexpected failure(s)";
    std::cout << "\n";
    return (unexpected || (strict && failed)) ? 1 : 0;
}
