#pragma once

// Finite acyclic quivers and their path combinatorics.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "field.hpp"
#include <json.hpp>

namespace repalg {

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
};

/// A malformed input file; carries the 1-based line and column of the problem.
struct ParseError : InputError {
    ParseError(std::size_t line, std::size_t col, const std::string& msg)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
          line(line), col(col)
    {
    }
    std::size_t line, col;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows))
    {
        validate();
    }

    std::size_t num_vertices() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t vertex_index(const std::string& name) const
    {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == name)
                return i;
        throw InputError("unknown vertex '" + name + "'");
    }

    /// Text format: `vertex <name>` and `arrow <name>: <src> -> <tgt>`, `#` comments.
    static Quiver parse_text(const std::string& text)
    {
        std::vector<std::string> verts;
        std::vector<std::tuple<std::string, std::string, std::string, std::size_t, std::size_t>> pending;
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos)
                line.erase(h);
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos)
                continue;
            std::istringstream ls(line);
            std::string kw;
            ls >> kw;
            if (kw == "vertex") {
                std::string name, extra;
                if (!(ls >> name))
                    throw ParseError(lineno, line.size() + 1, "expected vertex name");
                if (ls >> extra)
                    throw ParseError(lineno, line.find(extra) + 1, "unexpected token '" + extra + "'");
                for (auto& v : verts)
                    if (v == name)
                        throw ParseError(lineno, line.find(name) + 1, "duplicate vertex '" + name + "'");
                verts.push_back(name);
            } else if (kw == "arrow") {
                auto colon = line.find(':');
                auto arrow = line.find("->");
                if (colon == std::string::npos)
                    throw ParseError(lineno, line.size() + 1, "expected ':' after arrow name");
                if (arrow == std::string::npos || arrow < colon)
                    throw ParseError(lineno, colon + 2, "expected '<src> -> <tgt>'");
                auto strip = [](std::string s) {
                    auto a = s.find_first_not_of(" \t\r");
                    auto b = s.find_last_not_of(" \t\r");
                    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
                };
                std::size_t kwend = line.find("arrow") + 5;
                std::string name = strip(line.substr(kwend, colon - kwend));
                std::string src = strip(line.substr(colon + 1, arrow - colon - 1));
                std::string tgt = strip(line.substr(arrow + 2));
                if (name.empty())
                    throw ParseError(lineno, kwend + 1, "empty arrow name");
                if (src.empty())
                    throw ParseError(lineno, colon + 2, "missing source vertex");
                if (tgt.empty() || tgt.find_first_of(" \t") != std::string::npos)
                    throw ParseError(lineno, arrow + 3, "malformed target vertex");
                pending.emplace_back(name, src, tgt, lineno, colon + 2);
            } else {
                throw ParseError(lineno, start + 1, "unknown keyword '" + kw + "'");
            }
        }
        std::vector<Arrow> arrows;
        for (auto& [name, src, tgt, ln, col] : pending) {
            auto find = [&](const std::string& v) -> std::size_t {
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (verts[i] == v)
                        return i;
                throw ParseError(ln, col, "undeclared vertex '" + v + "'");
            };
            arrows.push_back({name, find(src), find(tgt)});
        }
        return Quiver(std::move(verts), std::move(arrows));
    }

    /// JSON form: {"vertices": [...], "arrows": [{"name","source","target"}...]}.
    static Quiver from_json(const nlohmann::json& j)
    {
        try {
            std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
            std::vector<Arrow> arrows;
            Quiver tmp;
            tmp.vertices_ = verts;
            for (auto& a : j.at("arrows"))
                arrows.push_back({a.at("name").get<std::string>(), tmp.vertex_index(a.at("source").get<std::string>()),
                                  tmp.vertex_index(a.at("target").get<std::string>())});
            return Quiver(std::move(verts), std::move(arrows));
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("quiver JSON: ") + e.what());
        }
    }

    /// Accepts either the text format or JSON (detected by a leading '{').
    static Quiver parse(const std::string& text)
    {
        auto s = text.find_first_not_of(" \t\r\n");
        if (s != std::string::npos && text[s] == '{') {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
                throw InputError(std::string("quiver JSON: ") + e.what());
            }
            return from_json(j);
        }
        return parse_text(text);
    }

    nlohmann::json to_json() const
    {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& a : arrows_)
            arr.push_back({{"name", a.name}, {"source", vertices_[a.source]}, {"target", vertices_[a.target]}});
        return {{"vertices", vertices_}, {"arrows", arr}};
    }

    std::string to_text() const
    {
        std::string s;
        for (auto& v : vertices_)
            s += "vertex " + v + "\n";
        for (auto& a : arrows_)
            s += "arrow " + a.name + ": " + vertices_[a.source] + " -> " + vertices_[a.target] + "\n";
        return s;
    }

    /// Euler form <d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j.
    long euler_form(const std::vector<std::size_t>& d, const std::vector<std::size_t>& e) const
    {
        long s = 0;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            s += static_cast<long>(d[i] * e[i]);
        for (auto& a : arrows_)
            s -= static_cast<long>(d[a.source] * e[a.target]);
        return s;
    }

private:
    void validate() const
    {
        const std::size_t n = vertices_.size();
        if (n == 0)
            throw InputError("quiver has no vertices");
        for (auto& a : arrows_)
            if (a.source >= n || a.target >= n)
                throw InputError("arrow '" + a.name + "' has an endpoint out of range");
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            for (std::size_t j = i + 1; j < arrows_.size(); ++j)
                if (arrows_[i].name == arrows_[j].name)
                    throw InputError("duplicate arrow name '" + arrows_[i].name + "'");
        // connectivity of the underlying graph
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = i;
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto& a : arrows_)
            parent[find(a.source)] = find(a.target);
        for (std::size_t i = 1; i < n; ++i)
            if (find(i) != find(0))
                throw InputError("quiver is not connected");
        // acyclicity by Kahn's algorithm
        std::vector<std::size_t> indeg(n, 0);
        for (auto& a : arrows_)
            ++indeg[a.target];
        std::vector<std::size_t> stack;
        for (std::size_t i = 0; i < n; ++i)
            if (!indeg[i])
                stack.push_back(i);
        std::size_t seen = 0;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            ++seen;
            for (auto& a : arrows_)
                if (a.source == v && --indeg[a.target] == 0)
                    stack.push_back(a.target);
        }
        if (seen != n)
            throw InputError("quiver has an oriented cycle");
    }

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

struct Path {
    std::size_t source;
    std::size_t target;
    std::vector<std::size_t> arrows; // empty for the trivial path at `source`
    bool trivial() const { return arrows.empty(); }
};

/// All paths of an acyclic quiver, trivial paths first (one per vertex, in vertex order),
/// then by length and lexicographically by arrow indices.
class PathBasis {
public:
    explicit PathBasis(const Quiver& q) : quiver_(q)
    {
        for (std::size_t v = 0; v < q.num_vertices(); ++v)
            paths_.push_back({v, v, {}});
        std::vector<Path> frontier;
        for (std::size_t a = 0; a < q.arrows().size(); ++a)
            frontier.push_back({q.arrows()[a].source, q.arrows()[a].target, {a}});
        while (!frontier.empty()) {
            std::vector<Path> next;
            for (auto& p : frontier) {
                paths_.push_back(p);
                for (std::size_t a = 0; a < q.arrows().size(); ++a) {
                    if (q.arrows()[a].source != p.target)
                        continue;
                    Path e = p;
                    e.arrows.push_back(a);
                    e.target = q.arrows()[a].target;
                    next.push_back(std::move(e));
                }
            }
            frontier = std::move(next);
        }
        for (std::size_t i = 0; i < paths_.size(); ++i)
            index_[key(paths_[i])] = i;
    }

    const Quiver& quiver() const { return quiver_; }
    std::size_t size() const { return paths_.size(); }
    const Path& operator[](std::size_t i) const { return paths_[i]; }
    const std::vector<Path>& paths() const { return paths_; }

    std::optional<std::size_t> find(const Path& p) const
    {
        auto it = index_.find(key(p));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    /// Index of the concatenation p then q, or nothing if target(p) != source(q).
    std::optional<std::size_t> compose(std::size_t p, std::size_t q) const
    {
        const Path& a = paths_[p];
        const Path& b = paths_[q];
        if (a.target != b.source)
            return std::nullopt;
        Path c{a.source, b.target, a.arrows};
        c.arrows.insert(c.arrows.end(), b.arrows.begin(), b.arrows.end());
        return find(c);
    }

    /// q such that p = r q (r a prefix of p).
    std::optional<std::size_t> strip_prefix(std::size_t p, std::size_t r) const
    {
        const Path& a = paths_[p];
        const Path& b = paths_[r];
        if (a.source != b.source || b.arrows.size() > a.arrows.size())
            return std::nullopt;
        if (!std::equal(b.arrows.begin(), b.arrows.end(), a.arrows.begin()))
            return std::nullopt;
        Path c{b.target, a.target, std::vector<std::size_t>(a.arrows.begin() + b.arrows.size(), a.arrows.end())};
        return find(c);
    }

    /// q such that p = q r (r a suffix of p).
    std::optional<std::size_t> strip_suffix(std::size_t p, std::size_t r) const
    {
        const Path& a = paths_[p];
        const Path& b = paths_[r];
        if (a.target != b.target || b.arrows.size() > a.arrows.size())
            return std::nullopt;
        if (!std::equal(b.arrows.rbegin(), b.arrows.rend(), a.arrows.rbegin()))
            return std::nullopt;
        Path c{a.source, b.source, std::vector<std::size_t>(a.arrows.begin(), a.arrows.end() - b.arrows.size())};
        return find(c);
    }

    /// Paths admitting no extension on either side.
    std::vector<std::size_t> maximal_paths() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < paths_.size(); ++i) {
            bool ext = false;
            for (auto& a : quiver_.arrows())
                if (a.target == paths_[i].source || a.source == paths_[i].target)
                    ext = true;
            if (!ext)
                out.push_back(i);
        }
        return out;
    }

    std::string name(std::size_t i) const
    {
        const Path& p = paths_[i];
        if (p.trivial())
            return "e" + quiver_.vertices()[p.source];
        std::string s;
        for (std::size_t k = 0; k < p.arrows.size(); ++k)
            s += (k ? "." : "") + quiver_.arrows()[p.arrows[k]].name;
        return s;
    }

    std::optional<std::size_t> find_by_name(const std::string& n) const
    {
        for (std::size_t i = 0; i < paths_.size(); ++i)
            if (name(i) == n)
                return i;
        return std::nullopt;
    }

private:
    static std::string key(const Path& p)
    {
        std::string k = std::to_string(p.source) + ":";
        for (auto a : p.arrows)
            k += std::to_string(a) + ",";
        return k;
    }

    Quiver quiver_;
    std::vector<Path> paths_;
    std::map<std::string, std::size_t> index_;
};

} // namespace repalg
