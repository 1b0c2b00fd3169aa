#include "degseq/cli.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "degseq/errors.hpp"
#include "degseq/io.hpp"
#include "degseq/oracle.hpp"
#include "degseq/realizers.hpp"

namespace degseq {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json certificate_header(const DegreeSequence& d) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["tool_version"] = std::string(kToolVersion);
    j["timestamp"] = utc_timestamp();
    j["input"] = {{"sequence", d.to_string()}, {"n", d.size()}};
    return j;
}

Json sourced(const Sourced<int>& s) {
    return {{"value", s.value}, {"method", std::string(to_string(s.source))}};
}

Json profile_json(const BasicProfile& p) {
    Json j{{"verdict", std::string(to_string(p.verdict))}};
    if (p.m) j["m"] = *p.m;
    return j;
}

Json witnessed_json(const WitnessedGraph& w) {
    return {{"graph6", to_graph6(w.graph)}, {"witness", to_json(w.witness)}};
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw ResourceError("cannot write " + path);
    f << j.dump(2) << "\n";
}

void ensure_verified(const WitnessedGraph& w) {
    const auto check = verify_witness(w.graph, w.witness);
    if (!check) throw InternalError("emitted witness fails verification: " + std::string(to_string(check.reason)) +
                                    " " + check.detail);
}

// Order-preserving list of integers separated by commas or spaces.
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::stringstream ss(text);
    while (ss >> token) {
        std::stringstream parts(token);
        std::string item;
        while (std::getline(parts, item, ',')) {
            if (item.empty()) continue;
            int v = 0;
            const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
            if (ec != std::errc{} || end != item.data() + item.size())
                throw ParseError("not an integer: '" + item + "'");
            out.push_back(v);
        }
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

struct CheckArgs {
    std::string sequence;
    bool oracle = false;
    int max_n = 0;
    std::string out_path;
};

int cmd_check(const CheckArgs& a, const OracleLimits& base, std::ostream& out) {
    const DegreeSequence d = parse_sequence(a.sequence);
    OracleLimits limits = base;
    if (a.max_n > 0) {
        limits.chi_layer = a.max_n;
        limits.realizations = std::max(limits.realizations, a.max_n);
        limits.h1 = std::max(limits.h1, a.max_n);
    }
    Json cert = certificate_header(d);
    Json verdicts;
    Json artifacts = Json::object();
    const bool graphic = is_graphic(d);
    verdicts["graphic"] = graphic;
    if (graphic) {
        verdicts["profile"] = profile_json(classify_basic_profile(d));
        const SequenceStats stats = compute_stats(d, a.oracle, limits);
        verdicts["omega"] = sourced(*stats.omega);
        verdicts["delta_max"] = stats.delta_max;
        if (stats.chi) verdicts["chi"] = sourced(*stats.chi);
        if (stats.h1) verdicts["h1"] = sourced(*stats.h1);
        if (a.oracle) verdicts["bounds"] = to_json(check_bounds(stats));
        try {
            const int k = stats.omega->value;
            const SimpleGraph g = realize_with_clique(d, k, limits);
            WitnessedGraph w{g, clique_witness(maximum_clique(g))};
            ensure_verified(w);
            artifacts["omega_realization"] = witnessed_json(w);
        } catch (const ResourceError&) {
            artifacts["omega_realization"] = nullptr;
        }
    }
    cert["verdicts"] = std::move(verdicts);
    cert["artifacts"] = std::move(artifacts);
    emit(cert, a.out_path, out);
    return kExitOk;
}

struct RealizeArgs {
    std::string sequence;
    bool tree = false;
    int clique = 0;
    std::string bipartite;
    std::string low_degree;
    bool dot = false;
};

int cmd_realize(const RealizeArgs& a, const OracleLimits& limits, std::ostream& out) {
    SimpleGraph g;
    std::string note;
    if (!a.bipartite.empty()) {
        const auto slash = a.bipartite.find('/');
        if (slash == std::string::npos) throw ParseError("--bipartite must look like 'a1,a2/b1,b2,b3'");
        const auto left = parse_int_list(a.bipartite.substr(0, slash));
        const auto right = parse_int_list(a.bipartite.substr(slash + 1));
        auto r = realize_bipartite_with_matching(left, right);
        g = std::move(r.graph);
        std::ostringstream os;
        os << "matching";
        for (auto [u, v] : r.matching) os << " " << u << "-" << v;
        note = os.str();
    } else if (!a.low_degree.empty()) {
        const auto ne = parse_int_list(a.low_degree);
        if (ne.size() != 2) throw ParseError("--low-degree expects 'n,e'");
        g = realize_low_degree(ne[0], ne[1]);
    } else {
        if (a.sequence.empty()) throw ParseError("a degree sequence is required");
        const DegreeSequence d = parse_sequence(a.sequence);
        if (a.tree) {
            g = realize_tree(d);
        } else if (a.clique > 0) {
            if (a.clique > d.size()) throw ArgumentError("k <= n", "clique size exceeds the sequence length");
            if (!rao_omega_at_least(d, a.clique))
                throw InfeasibleError("no realization of " + d.to_string() + " has a clique of order " +
                                      std::to_string(a.clique) + " (clique criterion fails)");
            g = realize_with_clique(d, a.clique, limits);
            std::ostringstream os;
            os << "clique";
            for (Vertex v = 0; v < a.clique; ++v) os << " " << v;
            const auto w = clique_witness([&] {
                std::vector<Vertex> c(static_cast<std::size_t>(a.clique));
                for (Vertex v = 0; v < a.clique; ++v) c[static_cast<std::size_t>(v)] = v;
                return c;
            }());
            if (!verify_witness(g, w)) throw InternalError("clique on the top positions is missing");
            os << " verified";
            note = os.str();
        } else {
            g = realize_any(d);
        }
    }
    out << to_graph6(g) << "\n";
    if (!note.empty()) out << "# " << note << "\n";
    if (a.dot) out << to_dot(g);
    return kExitOk;
}

struct HajosArgs {
    std::string input;
    bool pipeline = false;
    std::string out_path;
};

int cmd_hajos(const HajosArgs& a, const OracleLimits& limits, std::ostream& out) {
    if (a.pipeline) {
        const SimpleGraph g = from_graph6(a.input);
        const PipelineResult r = witness_pipeline(g, limits);
        ensure_verified(r.realization);
        Json cert = certificate_header(r.realization.graph.degree_sequence());
        cert["input"]["graph6"] = a.input;
        Json factors = Json::array();
        for (const auto& f : r.decomposition.factor_vertices) factors.push_back(f);
        cert["verdicts"] = {{"chi_input", {{"value", r.chi}, {"method", "oracle-enumeration"}}},
                            {"h1", {{"value", r.realization.witness.order}, {"method", "witness-lower-bound"}}},
                            {"witness_verified", true}};
        cert["artifacts"] = {{"kept_vertices", r.decomposition.kept},
                             {"factors", std::move(factors)},
                             {"realization", witnessed_json(r.realization)}};
        emit(cert, a.out_path, out);
        return kExitOk;
    }
    const DegreeSequence d = parse_sequence(a.input);
    const BasicWitnessResult r = build_basic_witness(d);
    ensure_verified(r.realization);
    Json cert = certificate_header(d);
    cert["verdicts"] = {{"graphic", true},
                        {"profile", profile_json(classify_basic_profile(d))},
                        {"h1", {{"value", r.realization.witness.order}, {"method", "witness-lower-bound"}}},
                        {"witness_verified", true}};
    cert["artifacts"] = {{"realization", witnessed_json(r.realization)}, {"plan", to_json(r.plan)}};
    emit(cert, a.out_path, out);
    return kExitOk;
}

struct SweepArgs {
    int max_n = 0;
    std::string checks;
    std::string out_path;
    bool force = false;
    int workers = 0;
};

int cmd_sweep(const SweepArgs& a, const OracleLimits& limits, std::ostream& out) {
    std::set<SweepCheck> checks;
    if (a.checks.empty()) {
        checks.insert(all_sweep_checks().begin(), all_sweep_checks().end());
    } else {
        std::stringstream ss(a.checks);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty()) checks.insert(parse_sweep_check(name));
    }
    const SweepReport report = sweep(a.max_n, checks, {limits, a.force, a.workers});
    if (!a.out_path.empty()) emit(to_json(report), a.out_path, out);
    out << sweep_summary(report);
    for (const auto& c : report.checks)
        for (const auto& v : c.violations) out << "violation [" << to_string(c.check) << "] " << v << "\n";
    return report.clean() ? kExitOk : kExitViolations;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degree-sequence certification tool", "degseq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    CheckArgs check;
    auto* c = app.add_subcommand("check", "graphicality, clique number and profile of a sequence");
    c->add_option("sequence", check.sequence, "comma-separated degrees")->required();
    c->add_flag("--oracle", check.oracle, "add chi(D) and h1(D) by enumeration");
    c->add_option("--max-n", check.max_n, "raise the enumeration cap");
    c->add_option("--out", check.out_path, "write the certificate here");

    RealizeArgs realize;
    auto* r = app.add_subcommand("realize", "build a realization");
    r->add_option("sequence", realize.sequence, "comma-separated degrees");
    auto* tree = r->add_flag("--tree", realize.tree, "realize as a tree");
    auto* clique = r->add_option("--clique", realize.clique, "force a clique on the k largest degrees");
    auto* bip = r->add_option("--bipartite", realize.bipartite, "sides 'a/b', with a matching covering a");
    auto* low = r->add_option("--low-degree", realize.low_degree, "'n,e': degrees in {1,2}");
    tree->excludes(clique, bip, low);
    clique->excludes(bip, low);
    bip->excludes(low);
    r->add_flag("--dot", realize.dot, "also print DOT");

    HajosArgs hajos;
    auto* h = app.add_subcommand("hajos", "realization with a star-subdivided clique");
    h->add_option("input", hajos.input, "sequence, or graph6 with --pipeline")->required();
    h->add_flag("--pipeline", hajos.pipeline, "decompose a graph6 input and certify chi(G) <= witness order");
    h->add_option("--out", hajos.out_path, "write the certificate here");

    SweepArgs sw;
    auto* s = app.add_subcommand("sweep", "exhaustive checks over all graphic sequences");
    s->add_option("--max-n", sw.max_n, "largest sequence length")->required();
    s->add_option("--checks", sw.checks, "comma-separated subset of the checks");
    s->add_option("--out", sw.out_path, "write the JSON report here");
    s->add_flag("--force", sw.force, "allow n beyond the configured caps");
    s->add_option("--workers", sw.workers, "worker threads (0 = all cores)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    const OracleLimits limits = OracleLimits::from_env();
    try {
        if (*c) return cmd_check(check, limits, out);
        if (*r) return cmd_realize(realize, limits, out);
        if (*h) return cmd_hajos(hajos, limits, out);
        return cmd_sweep(sw, limits, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const ArgumentError& e) {
        err << "infeasible: " << e.condition() << " violated (" << e.what() << ")\n";
        return kExitInfeasible;
    } catch (const DomainError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace degseq
