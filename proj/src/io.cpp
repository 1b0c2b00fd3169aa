#include "degseq/io.hpp"

#include <cstdio>
#include <sstream>

#include "degseq/errors.hpp"

namespace degseq {

std::string to_graph6(const SimpleGraph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw ResourceError("graph6 encoder supports n <= 258047");
    }
    int acc = 0;
    int bits = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

SimpleGraph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw ParseError("graph6: input ends early");
        const int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " out of range");
        return c - 63;
    };
    int n = next();
    if (n == 63) {
        if (pos < text.size() && text[pos] == 126) throw ResourceError("graph6: 8-byte order field not supported");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | next();
        if (n > 4096) throw ResourceError("graph6: n=" + std::to_string(n) + " too large for the dense representation");
    }
    SimpleGraph g(n);
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    const long long expected = (pairs + 5) / 6;
    if (static_cast<long long>(text.size() - pos) != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                         std::to_string(text.size() - pos));
    int acc = 0;
    int bits = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            if (bits == 0) {
                acc = next();
                bits = 6;
            }
            --bits;
            if (acc >> bits & 1) g.add_edge(i, j);
        }
    return g;
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

Json to_json(const StarSubdivisionWitness& w) {
    Json j;
    j["order"] = w.order;
    j["branch_vertices"] = w.branch_vertices;
    Json paths = Json::array();
    for (const auto& p : w.paths) {
        Json e{{"u", p.u}, {"v", p.v}};
        if (p.mid) e["mid"] = *p.mid;
        paths.push_back(std::move(e));
    }
    j["paths"] = std::move(paths);
    if (!w.stars.empty()) {
        Json stars = Json::array();
        for (const auto& s : w.stars) stars.push_back({{"center", s.center}, {"leaves", s.leaves}});
        j["stars"] = std::move(stars);
    }
    return j;
}

StarSubdivisionWitness witness_from_json(const Json& j) {
    try {
        StarSubdivisionWitness w;
        w.order = j.at("order").get<int>();
        w.branch_vertices = j.at("branch_vertices").get<std::vector<Vertex>>();
        for (const auto& p : j.at("paths")) {
            WitnessPath path{p.at("u").get<Vertex>(), p.at("v").get<Vertex>(), std::nullopt};
            if (p.contains("mid")) path.mid = p.at("mid").get<Vertex>();
            w.paths.push_back(path);
        }
        if (j.contains("stars"))
            for (const auto& s : j.at("stars"))
                w.stars.push_back({s.at("center").get<Vertex>(), s.at("leaves").get<std::vector<Vertex>>()});
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witness JSON: ") + e.what());
    }
}

namespace {

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (auto [u, v] : edges) out.push_back({u, v});
    return out;
}

} // namespace

Json to_json(const ConstructionPlan& p) {
    Json j;
    j["case"] = std::string(to_string(p.which));
    j["m"] = p.m;
    j["alpha"] = p.alpha;
    j["beta"] = p.beta;
    j["r"] = p.r;
    j["tree_degrees"] = p.t;
    j["tree_edges"] = edges_json(p.tree_edges);
    j["chosen"] = p.chosen;
    j["removed_edges"] = edges_json(p.removed_edges);
    if (p.which == ConstructionCase::CaseTwo) {
        j["s_order"] = p.s_order;
        j["low_degree_edges"] = edges_json(p.low_degree_edges);
    }
    j["a_targets"] = p.a_targets;
    j["b_targets"] = p.b_targets;
    return j;
}

Json to_json(const BoundReport& r) {
    Json out = Json::object();
    for (const auto& v : r.verdicts) {
        if (!v.evaluated) continue;
        out[std::string(to_string(v.kind))] = {
            {"holds", v.holds}, {"tight", v.tight}, {"slack", v.slack.to_string()}};
    }
    return out;
}

Json to_json(const SweepReport& r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["tool_version"] = std::string(kToolVersion);
    j["n_max"] = r.n_max;
    j["sequences_checked"] = r.sequences_checked;
    j["workers"] = r.workers;
    j["seconds"] = r.seconds;
    j["clean"] = r.clean();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json tight = Json::array();
        for (const auto& d : c.tight_cases) tight.push_back(d.to_string());
        checks.push_back({{"check", std::string(to_string(c.check))},
                          {"evaluated", c.evaluated},
                          {"violations", c.violations},
                          {"tight_cases", std::move(tight)}});
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string sweep_summary(const SweepReport& r) {
    std::ostringstream os;
    char line[128];
    std::snprintf(line, sizeof line, "%-16s %10s %10s %8s\n", "check", "evaluated", "violations", "tight");
    os << line;
    for (const auto& c : r.checks) {
        std::snprintf(line, sizeof line, "%-16s %10lld %10zu %8zu\n", std::string(to_string(c.check)).c_str(),
                      static_cast<long long>(c.evaluated), c.violations.size(), c.tight_cases.size());
        os << line;
    }
    std::snprintf(line, sizeof line, "n <= %d, %lld sequences, %.2f s, %d workers\n", r.n_max,
                  static_cast<long long>(r.sequences_checked), r.seconds, r.workers);
    os << line;
    return os.str();
}

} // namespace degseq
