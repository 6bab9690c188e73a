#pragma once

// On-disk catalog cache keyed by a fingerprint of (quiver text, m, p).

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "artrans.hpp"
#include "replicated.hpp"

namespace repalg {

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 14695981039346656037ull)
{
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fingerprint(const Quiver& q, std::size_t m, std::uint32_t p)
{
    std::uint64_t h = fnv1a(q.to_text());
    h = fnv1a("|m=" + std::to_string(m) + "|p=" + std::to_string(p), h);
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

inline std::string fingerprint(const ReplicatedAlgebra& R)
{
    return fingerprint(R.quiver(), R.level(), R.field().p());
}

inline nlohmann::json catalog_to_json(const ReplicatedAlgebra& R, const IndecCatalog& c)
{
    auto link = [](std::size_t i) { return i == IndecCatalog::none ? nlohmann::json(nullptr) : nlohmann::json(i); };
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
        entries.push_back({{"module", R.to_json(c.module(i))},
                           {"projective", c[i].projective},
                           {"injective", c[i].injective},
                           {"tau", link(c[i].tau)},
                           {"tau_inv", link(c[i].tau_inv)}});
    return {{"format", 1}, {"fingerprint", fingerprint(R)}, {"entries", entries}};
}

/// Rejects a document whose fingerprint does not match R (InputError).
inline IndecCatalog catalog_from_json(const ReplicatedAlgebra& R, const nlohmann::json& j)
{
    if (j.at("fingerprint").get<std::string>() != fingerprint(R))
        throw InputError("catalog fingerprint does not match the algebra");
    auto link = [](const nlohmann::json& v) { return v.is_null() ? IndecCatalog::none : v.get<std::size_t>(); };
    std::vector<IndecCatalog::Entry> entries;
    const auto& arr = j.at("entries");
    for (auto& e : arr) {
        IndecCatalog::Entry x{R.from_json(e.at("module")), e.at("projective").get<bool>(), e.at("injective").get<bool>(),
                              link(e.at("tau")), link(e.at("tau_inv"))};
        auto bad = [&](std::size_t i) { return i != IndecCatalog::none && i >= arr.size(); };
        if (bad(x.tau) || bad(x.tau_inv))
            throw InputError("catalog entry links out of range");
        entries.push_back(std::move(x));
    }
    return IndecCatalog::from_entries(R.algebra(), std::move(entries));
}

class CatalogCache {
public:
    explicit CatalogCache(std::filesystem::path dir, std::ostream* warn = &std::cerr) : dir_(std::move(dir)), warn_(warn) {}

    std::filesystem::path path_for(const ReplicatedAlgebra& R) const
    {
        return dir_ / ("catalog-" + fingerprint(R) + ".json");
    }

    /// Cached catalog if present and valid; unreadable or stale files are reported and ignored.
    std::optional<IndecCatalog> load(const ReplicatedAlgebra& R) const
    {
        auto p = path_for(R);
        if (!std::filesystem::exists(p))
            return std::nullopt;
        try {
            std::ifstream in(p);
            return catalog_from_json(R, nlohmann::json::parse(in));
        } catch (const std::exception& e) {
            if (warn_)
                *warn_ << "warning: ignoring catalog cache " << p.string() << ": " << e.what() << "\n";
            return std::nullopt;
        }
    }

    void save(const ReplicatedAlgebra& R, const IndecCatalog& c) const
    {
        std::filesystem::create_directories(dir_);
        auto p = path_for(R);
        auto tmp = p;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out)
                throw InputError("cannot write catalog cache " + tmp.string());
            out << catalog_to_json(R, c).dump() << "\n";
        }
        std::filesystem::rename(tmp, p);
    }

    IndecCatalog get(const ReplicatedAlgebra& R, const CatalogBudget& budget = {}) const
    {
        if (auto c = load(R))
            return std::move(*c);
        IndecCatalog c(R.algebra(), budget);
        save(R, c);
        return c;
    }

private:
    std::filesystem::path dir_;
    std::ostream* warn_;
};

} // namespace repalg
