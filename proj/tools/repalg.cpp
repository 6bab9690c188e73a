// repalg: command-line front end for the replicated-algebra toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "repalg/cache.hpp"
#include "repalg/verify.hpp"

using namespace repalg;
using nlohmann::json;

namespace {

enum Exit { ok = 0, verification_failed = 1, input_error = 2, resource_error = 3, internal_error = 4 };

struct Options {
    std::string quiver;
    std::size_t m = 1;
    std::uint32_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
    std::size_t budget = CatalogBudget{}.max_entries;
    std::size_t window = 3;
    bool json = false;
    std::string dot;
    std::string cache;
    // subcommand arguments
    std::size_t samples = 200;
    std::size_t d = 0;
    std::size_t i = 1;
    std::string preset;
    std::string spec;
    std::string kind;
    std::string suite;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Session {
public:
    /// `window_field`: representation-infinite bases switch to the small prime the windows need.
    Session(const Options& o, bool window_field) : opt_(o), quiver_(Quiver::parse(read_file(o.quiver)))
    {
        finite_ = is_representation_finite(quiver_);
        std::uint32_t p = o.prime;
        if (window_field && !finite_ && window_prime(p) != p) {
            std::cerr << "note: representation-infinite base, using p = " << window_prime(p) << " for windows\n";
            p = window_prime(p);
        }
        R_ = std::make_unique<ReplicatedAlgebra>(quiver_, o.m, Fp(p));
    }

    const ReplicatedAlgebra& R() const { return *R_; }
    bool finite() const { return finite_; }

    CatalogBudget budget() const
    {
        CatalogBudget b;
        b.max_entries = opt_.budget;
        return b;
    }

    IndecCatalog build_catalog(const ReplicatedAlgebra& R) const
    {
        if (opt_.cache.empty())
            return IndecCatalog(R.algebra(), budget());
        return CatalogCache(opt_.cache).get(R, budget());
    }

    const IndecCatalog& catalog()
    {
        if (!cat_)
            cat_ = build_catalog(*R_);
        return *cat_;
    }

    RegistryPtr registry()
    {
        if (!reg_)
            reg_ = finite_ ? std::make_shared<IndecRegistry>(catalog()) : std::make_shared<IndecRegistry>(R_->algebra());
        return reg_;
    }

    json inputs() const
    {
        return {{"quiver", quiver_.to_json()},
                {"m", R_->level()},
                {"prime", R_->field().p()},
                {"fingerprint", fingerprint(*R_)}};
    }

    std::string dims(const Module& x) const { return R_->dims_str(x); }

private:
    const Options& opt_;
    Quiver quiver_;
    bool finite_ = false;
    std::unique_ptr<ReplicatedAlgebra> R_;
    std::optional<IndecCatalog> cat_;
    RegistryPtr reg_;
};

json link(std::size_t i) { return i == IndecCatalog::none ? json(nullptr) : json(i); }

void emit(const Options& o, const std::string& command, const json& inputs, const json& result, const std::string& text)
{
    if (o.json)
        std::cout << json{{"command", command}, {"inputs", inputs}, {"result", result}}.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_info(const Options& o)
{
    Session s(o, false);
    const auto& R = s.R();
    json r = {{"vertices", R.quiver().num_vertices()},
              {"arrows", R.quiver().arrows().size()},
              {"base_dimension", R.paths().size()},
              {"algebra_dimension", R.algebra()->dim()},
              {"algebra_vertices", R.algebra()->num_vertices()},
              {"representation_finite", s.finite()}};
    std::ostringstream t;
    t << "quiver: " << r["vertices"] << " vertices, " << r["arrows"] << " arrows, dim kQ = " << r["base_dimension"]
      << "\n"
      << "A^(" << R.level() << "): dim " << r["algebra_dimension"] << ", " << r["algebra_vertices"]
      << " vertices over F_" << R.field().p() << "\n"
      << "representation type: " << (s.finite() ? "finite" : "infinite") << "\n"
      << "fingerprint: " << fingerprint(R) << "\n";
    emit(o, "info", s.inputs(), r, t.str());
    return ok;
}

int cmd_indecs(const Options& o)
{
    Session s(o, false);
    const auto& c = s.catalog();
    json list = json::array();
    std::ostringstream t;
    t << c.size() << " indecomposables\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        list.push_back({{"id", i},
                        {"dims", s.dims(c.module(i))},
                        {"projective", c[i].projective},
                        {"injective", c[i].injective},
                        {"tau", link(c[i].tau)},
                        {"tau_inv", link(c[i].tau_inv)},
                        {"module", s.R().to_json(c.module(i))}});
        t << std::setw(4) << i << "  " << s.dims(c.module(i)) << (c[i].projective ? "  P" : "")
          << (c[i].injective ? "  I" : "");
        if (c[i].tau != IndecCatalog::none)
            t << "  tau=" << c[i].tau;
        t << "\n";
    }
    emit(o, "indecs", s.inputs(), {{"count", c.size()}, {"indecomposables", list}}, t.str());
    return ok;
}

int cmd_ar_quiver(const Options& o)
{
    Session s(o, false);
    const auto& c = s.catalog();
    auto q = ar_quiver(c);
    json edges = json::array();
    std::ostringstream t;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (q.mult[i][j]) {
                edges.push_back({{"from", i}, {"to", j}, {"multiplicity", q.mult[i][j]}});
                t << i << " -> " << j << (q.mult[i][j] > 1 ? " x" + std::to_string(q.mult[i][j]) : "") << "\n";
            }
    t << "mesh identity: " << (q.mesh_failures.empty() ? "holds at every node" : "FAILS") << "\n";
    if (!o.dot.empty()) {
        std::ofstream out(o.dot);
        if (!out)
            throw InputError("cannot write " + o.dot);
        out << ar_quiver_dot(c, q, [&](const Module& x) { return s.dims(x); });
    }
    emit(o, "ar-quiver", s.inputs(), {{"nodes", c.size()}, {"edges", edges}, {"mesh_failures", q.mesh_failures}},
         t.str());
    return ok;
}

int cmd_tau_orbits(const Options& o)
{
    Session s(o, false);
    const auto& c = s.catalog();
    auto t = tau_orbits(c);
    json r = orbit_report(c, t, [&](const Module& x) { return s.dims(x); });
    std::ostringstream txt;
    txt << c.size() << " indecomposables, " << t.orbits.size() << " orbits, max cardinality " << t.max_cardinality()
        << "\n";
    for (auto& orbit : r["orbits"]) {
        txt << "[" << orbit["cardinality"] << "]";
        for (auto& mem : orbit["members"])
            txt << " " << mem["dims"].get<std::string>();
        txt << "\n";
    }
    emit(o, "tau-orbits", s.inputs(), r, txt.str());
    return ok;
}

int cmd_strata(const Options& o)
{
    Session s(o, false);
    const auto& R = s.R();
    const std::size_t t = global_dimension(R.algebra());
    Strata S(R.quiver(), t, R.field());
    json list = json::array();
    std::ostringstream txt;
    for (std::size_t k = 0; k <= t; ++k) {
        json members = json::array();
        for (auto& x : S.sigma(k))
            members.push_back(S.window().dims_str(x));
        auto u = S.u(k, R);
        json inside = json::array();
        for (auto& x : u)
            inside.push_back(R.dims_str(x));
        list.push_back({{"k", k}, {"sigma", members}, {"u", inside}});
        txt << "Sigma_" << k << ":";
        for (auto& x : members)
            txt << " " << x.get<std::string>();
        txt << "   (" << u.size() << " in A^(" << R.level() << "))\n";
    }
    emit(o, "strata", s.inputs(), {{"strata", list}}, txt.str());
    return ok;
}

int cmd_gldim(const Options& o)
{
    Session s(o, false);
    std::size_t g = global_dimension(s.R().algebra());
    emit(o, "gldim", s.inputs(), {{"gldim", g}}, std::to_string(g) + "\n");
    return ok;
}

json gencog_json(Session& s, const GenCog& M)
{
    json j = {{"fingerprint", fingerprint(s.R())}};
    json dims = json::array();
    for (std::size_t k = 0; k < M.size(); ++k)
        dims.push_back(s.dims(M.summand(k)));
    if (s.finite()) {
        j["catalog_ids"] = M.ids();
    } else {
        json mods = json::array();
        for (std::size_t k = 0; k < M.size(); ++k)
            mods.push_back(s.R().to_json(M.summand(k)));
        j["modules"] = mods;
    }
    j["summands"] = dims;
    return j;
}

struct Built {
    GenCog module;
    json witness = json::object();
};

std::size_t parse_suffix(const std::string& preset, const std::string& kind)
{
    try {
        return std::stoul(preset.substr(kind.size() + 1));
    } catch (const std::exception&) {
        throw InputError("preset '" + preset + "' needs a numeric argument, e.g. " + kind + ":3");
    }
}

Built build(Session& s, const std::string& kind, std::size_t d, std::size_t i)
{
    const auto& R = s.R();
    auto reg = s.registry();
    if (kind == "thm32") {
        if (!s.finite())
            throw ContractError("thm32 needs a representation-finite base");
        auto c = construct_thm32(reg, s.catalog(), d);
        Built b{c.module};
        if (c.z != IndecCatalog::none)
            b.witness = {{"z", s.dims(s.catalog().module(c.z))}, {"z_id", c.z}};
        return b;
    }
    if (kind == "E") {
        std::size_t t = global_dimension(R.algebra());
        Strata S(R.quiver(), std::max<std::size_t>(t, 2 * R.level() + 1), R.field());
        return {construct_E(reg, R, S, i)};
    }
    if (kind == "lem47") {
        auto c = construct_lem47(reg, R, d ? d : 2 * R.level() + 3);
        return {c.module, {{"z", s.dims(c.z)}, {"n", s.dims(c.n)}, {"n_module", R.to_json(c.n)}}};
    }
    if (kind == "lem48") {
        auto c = construct_lem48(reg, R);
        return {c.module, {{"n", s.dims(c.n)}, {"n_prime", s.dims(c.n_prime)}, {"n_module", R.to_json(c.n)}}};
    }
    if (kind == "additive") {
        if (!s.finite())
            throw ContractError("the additive generator exists only for representation-finite bases");
        std::vector<std::size_t> ids(s.catalog().size());
        std::iota(ids.begin(), ids.end(), std::size_t{0});
        return {GenCog(reg, ids)};
    }
    if (kind == "base")
        return {GenCog::from_modules(reg, base_generator_cogenerator(R))};
    throw InputError("unknown construction '" + kind + "' (expected thm32, E, lem47, lem48, additive or base)");
}

int cmd_construct(const Options& o)
{
    Session s(o, false);
    if (o.kind == "thm32" && o.d == 0)
        throw InputError("construct thm32 needs --d");
    Built b = build(s, o.kind, o.d, o.i);
    json r = gencog_json(s, b.module);
    r["witness"] = b.witness;
    r["generator_cogenerator"] = b.module.is_generator_cogenerator();
    std::ostringstream t;
    t << o.kind << ": " << b.module.size() << " summands\n";
    for (auto& x : r["summands"])
        t << "  " << x.get<std::string>() << "\n";
    for (auto& [k, v] : b.witness.items())
        if (v.is_string())
            t << k << " = " << v.get<std::string>() << "\n";
    emit(o, "construct", s.inputs(), r, t.str());
    return ok;
}

GenCog load_spec(Session& s, const std::string& path)
{
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InputError("spec file " + path + ": " + e.what());
    }
    if (j.contains("fingerprint") && j["fingerprint"].get<std::string>() != fingerprint(s.R()))
        throw InputError("spec file " + path + " was written for a different algebra (fingerprint mismatch)");
    if (j.contains("catalog_ids")) {
        if (!s.finite())
            throw InputError("catalog ids need a representation-finite base");
        auto ids = j["catalog_ids"].get<std::vector<std::size_t>>();
        for (auto id : ids)
            if (id >= s.catalog().size())
                throw InputError("catalog id " + std::to_string(id) + " out of range");
        return GenCog(s.registry(), ids);
    }
    if (j.contains("modules")) {
        std::vector<Module> mods;
        for (auto& m : j["modules"])
            mods.push_back(s.R().from_json(m));
        return GenCog::from_modules(s.registry(), mods);
    }
    throw InputError("spec file " + path + " has neither catalog_ids nor modules");
}

int cmd_gldim_end(const Options& o)
{
    Session s(o, true);
    if (o.spec.empty() == o.preset.empty())
        throw InputError("gldim-end needs exactly one of a spec file or --preset");
    GenCog M = [&] {
        if (!o.spec.empty())
            return load_spec(s, o.spec);
        auto colon = o.preset.find(':');
        std::string kind = o.preset.substr(0, colon);
        std::size_t arg = colon == std::string::npos ? 0 : parse_suffix(o.preset, kind);
        return build(s, kind, arg, arg ? arg : 1).module;
    }();
    M.require_generator_cogenerator();
    GldimEnd g;
    json r;
    if (s.finite()) {
        g = gldim_end_exact(M);
    } else {
        auto win = window_indecomposables(s.R(), o.window);
        MDimOptions mo;
        mo.max_steps = 64;
        mo.max_module_dim = 256;
        g = gldim_end_window(M, win, mo);
        r["window"] = {{"bound", o.window}, {"modules", win.size()}};
    }
    r["kind"] = kind_name(g.kind);
    r["value"] = g.describe();
    r["summands"] = M.size();
    if (g.kind == GldimEnd::Kind::exact || g.kind == GldimEnd::Kind::window)
        r["number"] = g.value;
    if (g.upper)
        r["upper"] = *g.upper;
    if (g.oracle)
        r["oracle"] = *g.oracle;
    if (g.witness != IndecRegistry::none)
        r["witness"] = s.dims(M.registry().module(g.witness));
    emit(o, "gldim-end", s.inputs(), r, g.describe() + "\n");
    return g.kind == GldimEnd::Kind::indeterminate ? resource_error : ok;
}

int cmd_verify(const Options& o)
{
    const std::string text = read_file(o.quiver);
    VerifyParams p;
    p.quiver = Quiver::parse(text);
    p.m = o.m;
    p.prime = o.prime;
    p.seed = o.seed;
    p.samples = o.samples;
    p.window = o.window;
    p.d = o.d;
    p.budget.max_entries = o.budget;
    if (!o.cache.empty())
        p.catalog = [dir = o.cache, b = p.budget](const ReplicatedAlgebra& R) { return CatalogCache(dir).get(R, b); };
    auto report = verify(o.suite, p);
    std::cerr << "wall time: " << std::fixed << std::setprecision(3) << report.seconds << " s\n";
    if (o.json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        for (auto& c : report.checks)
            std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << "\n";
        if (report.summary.contains("achievable"))
            std::cout << "achievable: " << report.summary["achievable"].dump() << "\n";
        std::cout << report.suite << ": " << (report.pass() ? "pass" : "fail") << " (" << report.checks.size()
                  << " checks, " << report.failures() << " failed)\n";
    }
    return report.pass() ? ok : verification_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with replicated algebras of path algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--quiver", o.quiver, "Quiver file (text or JSON)")->required()->check(CLI::ExistingFile);
    app.add_option("--m", o.m, "Replication level m")->check(CLI::PositiveNumber);
    app.add_option("--prime", o.prime, "Field characteristic")->check(CLI::Range(2u, 46337u));
    app.add_option("--seed", o.seed, "Random seed");
    app.add_option("--budget", o.budget, "Maximum catalog size")->check(CLI::PositiveNumber);
    app.add_option("--window", o.window, "Dimension bound for windows over infinite bases")->check(CLI::PositiveNumber);
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--cache", o.cache, "Catalog cache directory");

    std::map<CLI::App*, std::function<int(const Options&)>> run;
    run[app.add_subcommand("info", "Algebra summary")] = cmd_info;
    run[app.add_subcommand("indecs", "Indecomposable catalog")] = cmd_indecs;
    auto* ar = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver");
    ar->add_option("--dot", o.dot, "Write a DOT file");
    run[ar] = cmd_ar_quiver;
    run[app.add_subcommand("tau-orbits", "tau-orbits of the catalog")] = cmd_tau_orbits;
    run[app.add_subcommand("strata", "Sigma strata")] = cmd_strata;
    run[app.add_subcommand("gldim", "Global dimension of A^(m)")] = cmd_gldim;
    auto* ge = app.add_subcommand("gldim-end", "gl.dim End(M) for a generator-cogenerator");
    ge->add_option("spec", o.spec, "Spec file (JSON with catalog_ids or modules)");
    ge->add_option("--preset", o.preset, "additive | base | E:i | thm32:d | lem47:d | lem48");
    run[ge] = cmd_gldim_end;
    auto* co = app.add_subcommand("construct", "Build a generator-cogenerator");
    co->add_option("kind", o.kind, "thm32 | E | lem47 | lem48 | additive | base")->required();
    co->add_option("--d", o.d, "Target global dimension");
    co->add_option("--i", o.i, "Index i for E_i");
    run[co] = cmd_construct;
    auto* ve = app.add_subcommand("verify", "Run a verification suite");
    ve->add_option("suite", o.suite, "Suite name")->required();
    ve->add_option("--samples", o.samples, "Random samples");
    ve->add_option("--d", o.d, "Target global dimension (lem47)");
    run[ve] = cmd_verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }
    try {
        for (auto& [sub, fn] : run)
            if (sub->parsed())
                return fn(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const ResourceError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return resource_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return input_error;
}
