#include "degseq/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <thread>

#include "degseq/analysis.hpp"
#include "degseq/errors.hpp"
#include "degseq/realizers.hpp"

namespace degseq {

OracleLimits OracleLimits::from_env() {
    OracleLimits limits;
    if (const char* raw = std::getenv("DEGSEQ_ORACLE_LIMIT")) {
        char* end = nullptr;
        const long v = std::strtol(raw, &end, 10);
        if (end != raw && *end == '\0' && v > 0 && v <= 64) {
            limits.realizations = static_cast<int>(v);
            limits.chi_layer = static_cast<int>(v);
        }
    }
    return limits;
}

// ------------------------------------------------------------- sequences

namespace {

class SequenceWalker {
public:
    SequenceWalker(int n, int min_degree, const std::function<void(const DegreeSequence&)>& visit)
        : n_(n), min_(min_degree), visit_(visit), prefix_(static_cast<std::size_t>(n), 0) {}

    void run() {
        if (n_ == 0) {
            visit_(DegreeSequence{});
            return;
        }
        // Lexicographically increasing order: d_1 ascending.
        for (int first = min_; first <= n_ - 1; ++first) extend(0, first, 0);
    }

private:
    // Place value at position `pos`; entries after it are <= value.
    void extend(int pos, int value, long long sum) {
        prefix_[static_cast<std::size_t>(pos)] = value;
        sum += value;
        const int t = pos + 1;
        // Prefix test with every later entry bounded by `value`.
        if (sum > static_cast<long long>(t) * (t - 1) + static_cast<long long>(n_ - t) * std::min(value, t)) return;
        if (t == n_) {
            DegreeSequence d(prefix_);
            if (is_graphic(d)) visit_(d);
            return;
        }
        for (int next = min_; next <= value; ++next) extend(pos + 1, next, sum);
    }

    int n_;
    int min_;
    const std::function<void(const DegreeSequence&)>& visit_;
    std::vector<int> prefix_;
};

} // namespace

void for_each_graphic_sequence(int n, int min_degree, const std::function<void(const DegreeSequence&)>& visit) {
    if (n < 0) throw ArgumentError("n >= 0", "negative sequence length");
    SequenceWalker(n, std::max(0, min_degree), visit).run();
}

std::vector<DegreeSequence> enumerate_graphic_sequences(int n, const OracleLimits& limits) {
    if (n < 1 || n > limits.sequences)
        throw ResourceError("graphic sequence enumeration needs 1 <= n <= " + std::to_string(limits.sequences) +
                            ", got n=" + std::to_string(n));
    std::vector<DegreeSequence> out;
    for_each_graphic_sequence(n, 0, [&](const DegreeSequence& d) { out.push_back(d); });
    return out;
}

std::vector<SimpleGraph> enumerate_graphs(int n) {
    if (n < 0 || n > 8) throw ResourceError("graph enumeration supports 0 <= n <= 8, got n=" + std::to_string(n));
    std::vector<SimpleGraph> level{SimpleGraph(0)};
    for (int k = 0; k < n; ++k) {
        std::map<std::uint64_t, SimpleGraph> next;
        for (const auto& g : level) {
            for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
                SimpleGraph h(k + 1);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (Vertex v = 0; v < k; ++v)
                    if (subset >> v & 1u) h.add_edge(v, k);
                next.emplace(canonical_code(h), std::move(h));
            }
        }
        level.clear();
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    return level;
}

// --------------------------------------------------------------- oracles

namespace {

void check_chi_layer(const DegreeSequence& d, const OracleLimits& limits) {
    if (d.size() > limits.chi_layer)
        throw ResourceError("chi/h1 oracle limited to n <= " + std::to_string(limits.chi_layer) +
                            ", got n=" + std::to_string(d.size()));
}

// Realizations of d, deduplicated up to isomorphism from n >= 6 on.
void for_each_realization_class(const DegreeSequence& d, const OracleLimits& limits,
                                const std::function<bool(const SimpleGraph&)>& visit) {
    OracleLimits l = limits;
    l.realizations = std::max(l.realizations, d.size());
    enumerate_realizations(d, visit, {d.size() >= 6, l});
}

} // namespace

int omega_by_enumeration(const DegreeSequence& d, const OracleLimits& limits) {
    if (!is_graphic(d)) throw DomainError("sequence " + d.to_string() + " is not graphic");
    if (d.empty()) return 0;
    int best = 0;
    const int cap = std::min(d.size(), d.max_degree() + 1);
    enumerate_realizations(d, [&](const SimpleGraph& g) {
        best = std::max(best, clique_number(g));
        return best < cap;
    }, {false, limits});
    return best;
}

int chi_of_sequence(const DegreeSequence& d, const OracleLimits& limits) {
    check_chi_layer(d, limits);
    if (!is_graphic(d)) throw DomainError("sequence " + d.to_string() + " is not graphic");
    if (d.empty()) return 0;
    const int cap = std::min(d.size(), d.max_degree() + 1);
    int best = 0;
    for_each_realization_class(d, limits, [&](const SimpleGraph& g) {
        if (!is_colorable(g, best, limits)) best = chromatic_number(g, limits);
        return best < cap;
    });
    return best;
}

int h1_of_sequence(const DegreeSequence& d, const OracleLimits& limits) {
    check_chi_layer(d, limits);
    if (!is_graphic(d)) throw DomainError("sequence " + d.to_string() + " is not graphic");
    if (d.empty()) return 0;
    int best = 0;
    for_each_realization_class(d, limits, [&](const SimpleGraph& g) {
        if (find_star_witness(g, best + 1, limits)) best = h1_of_graph(g, limits).order;
        return best < d.size();
    });
    return best;
}

CocycleOracle cocycle_sequence_oracle(int n, const OracleLimits& limits) {
    if (n < 3) throw ArgumentError("n >= 3", "(n-3)^n needs n >= 3");
    CocycleOracle out;
    std::vector<int> parts;
    // Partitions of the remaining vertices into non-increasing cycle lengths >= 3.
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
            std::vector<SimpleGraph> cycles;
            for (int len : parts) cycles.push_back(cycle_graph(len));
            const SimpleGraph g = disjoint_union(cycles).complement();
            out.chi = std::max(out.chi, chromatic_number(g, limits));
            out.omega = std::max(out.omega, clique_number(g));
            ++out.classes;
            return;
        }
        for (int len = std::min(remaining, largest); len >= 3; --len) {
            parts.push_back(len);
            rec(remaining - len, len);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

SequenceStats compute_stats(const DegreeSequence& d, bool with_oracle, const OracleLimits& limits) {
    SequenceStats s;
    s.delta_max = d.max_degree();
    if (!is_graphic(d)) return s;
    s.omega = Sourced<int>{omega_of_sequence(d), StatSource::RaoExact};
    if (with_oracle) {
        s.chi = Sourced<int>{chi_of_sequence(d, limits), StatSource::OracleEnumeration};
        s.h1 = Sourced<int>{h1_of_sequence(d, limits), StatSource::OracleEnumeration};
    }
    return s;
}

// ----------------------------------------------------------------- sweep

std::string_view to_string(SweepCheck c) {
    switch (c) {
    case SweepCheck::Hajos: return "hajos";
    case SweepCheck::Sf: return "sf";
    case SweepCheck::Reed: return "reed";
    case SweepCheck::Hajos2: return "hajos2";
    case SweepCheck::RaoVsOracle: return "rao_vs_oracle";
    case SweepCheck::EgVsOracle: return "eg_vs_oracle";
    case SweepCheck::LargeclVsRao: return "largecl_vs_rao";
    }
    return "?";
}

const std::vector<SweepCheck>& all_sweep_checks() {
    static const std::vector<SweepCheck> all{SweepCheck::Hajos,       SweepCheck::Sf,         SweepCheck::Reed,
                                             SweepCheck::Hajos2,      SweepCheck::RaoVsOracle, SweepCheck::EgVsOracle,
                                             SweepCheck::LargeclVsRao};
    return all;
}

SweepCheck parse_sweep_check(std::string_view name) {
    for (auto c : all_sweep_checks())
        if (to_string(c) == name) return c;
    throw ParseError("unknown sweep check '" + std::string(name) + "'");
}

bool needs_chi_layer(SweepCheck c) { return c != SweepCheck::LargeclVsRao; }

bool SweepReport::clean() const {
    for (const auto& c : checks)
        if (!c.violations.empty()) return false;
    return true;
}

const CheckOutcome& SweepReport::outcome(SweepCheck c) const {
    for (const auto& o : checks)
        if (o.check == c) return o;
    throw ArgumentError("check present", "sweep report lacks check " + std::string(to_string(c)));
}

namespace {

struct ItemResult {
    std::map<SweepCheck, CheckOutcome> per_check;
};

ItemResult evaluate(const DegreeSequence& d, const std::set<SweepCheck>& checks, const OracleLimits& limits) {
    ItemResult r;
    auto& out = r.per_check;
    auto note = [&](SweepCheck c, bool ok, bool tight, const std::string& what) {
        auto& o = out[c];
        o.check = c;
        ++o.evaluated;
        if (!ok) o.violations.push_back(d.to_string() + ": " + what);
        if (ok && tight) o.tight_cases.push_back(d);
    };
    const int n = d.size();
    const bool want_bounds = checks.count(SweepCheck::Hajos) || checks.count(SweepCheck::Sf) ||
                             checks.count(SweepCheck::Reed) || checks.count(SweepCheck::Hajos2);
    SequenceStats stats;
    stats.delta_max = d.max_degree();
    if (want_bounds) {
        stats.omega = Sourced<int>{omega_of_sequence(d), StatSource::RaoExact};
        stats.chi = Sourced<int>{chi_of_sequence(d, limits), StatSource::OracleEnumeration};
        if (checks.count(SweepCheck::Hajos))
            stats.h1 = Sourced<int>{h1_of_sequence(d, limits), StatSource::OracleEnumeration};
        const auto bounds = check_bounds(stats);
        auto slack_note = [&](SweepCheck c, BoundKind k) {
            const auto& v = bounds.get(k);
            note(c, v.holds, v.tight, std::string(to_string(k)) + " slack " + v.slack.to_string());
        };
        if (checks.count(SweepCheck::Hajos)) slack_note(SweepCheck::Hajos, BoundKind::Hajos);
        if (checks.count(SweepCheck::Sf)) slack_note(SweepCheck::Sf, BoundKind::Sf);
        if (checks.count(SweepCheck::Reed)) slack_note(SweepCheck::Reed, BoundKind::Reed);
        if (checks.count(SweepCheck::Hajos2)) {
            const auto& a = bounds.get(BoundKind::Hajos2a);
            const auto& b = bounds.get(BoundKind::Hajos2b);
            note(SweepCheck::Hajos2, a.holds && b.holds, a.tight || b.tight,
                 "hajos2 slacks " + a.slack.to_string() + ", " + b.slack.to_string());
        }
    }
    if (checks.count(SweepCheck::RaoVsOracle)) {
        const int oracle = omega_by_enumeration(d, limits);
        for (int k = 1; k <= n; ++k) {
            const bool rao = rao_omega_at_least(d, k);
            note(SweepCheck::RaoVsOracle, rao == (oracle >= k), false,
                 "k=" + std::to_string(k) + " criterion " + (rao ? "true" : "false") + ", enumeration omega " +
                     std::to_string(oracle));
        }
    }
    if (checks.count(SweepCheck::LargeclVsRao) && n % 2 == 1) {
        const int k = (n + 1) / 2;
        if (d.min_degree() >= k - 1) {
            const bool lc = largecl_check(d, k);
            const bool rao = rao_omega_at_least(d, k);
            note(SweepCheck::LargeclVsRao, lc == rao, false,
                 "k=" + std::to_string(k) + " largecl " + (lc ? "true" : "false") + ", rao " + (rao ? "true" : "false"));
        }
    }
    return r;
}

// All non-increasing sequences of length n over 0..n-1, compared against
// exhaustive realization search.
CheckOutcome eg_against_search(int n, const OracleLimits& limits) {
    CheckOutcome o;
    o.check = SweepCheck::EgVsOracle;
    std::vector<int> cur(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int pos, int cap) {
        if (pos == n) {
            DegreeSequence d(cur);
            bool found = false;
            for_each_labeled_realization(d, [&](const SimpleGraph&) {
                found = true;
                return false;
            }, limits);
            ++o.evaluated;
            if (found != is_graphic(d))
                o.violations.push_back(d.to_string() + ": is_graphic " + (found ? "false" : "true") +
                                       " but search " + (found ? "found" : "found no") + " realization");
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, n - 1);
    return o;
}

} // namespace

SweepReport sweep(int n_max, const std::set<SweepCheck>& checks, const SweepOptions& options) {
    OracleLimits limits = options.limits;
    bool chi_layer = false;
    for (auto c : checks) chi_layer = chi_layer || needs_chi_layer(c);
    const int cap = chi_layer ? limits.chi_layer : limits.omega_layer;
    if (n_max < 1) throw ArgumentError("n_max >= 1", "sweep needs n_max >= 1");
    if (n_max > cap) {
        if (!options.force)
            throw ResourceError("sweep with these checks is limited to n_max <= " + std::to_string(cap) +
                                " (got " + std::to_string(n_max) + "); pass force to override");
        limits.chi_layer = std::max(limits.chi_layer, n_max);
        limits.omega_layer = std::max(limits.omega_layer, n_max);
        limits.realizations = std::max(limits.realizations, n_max);
        limits.sequences = std::max(limits.sequences, n_max);
        limits.h1 = std::max(limits.h1, n_max);
        limits.chromatic = std::max(limits.chromatic, n_max);
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<DegreeSequence> work;
    for (int n = 1; n <= n_max; ++n)
        for_each_graphic_sequence(n, 0, [&](const DegreeSequence& d) { work.push_back(d); });

    std::set<SweepCheck> per_sequence = checks;
    per_sequence.erase(SweepCheck::EgVsOracle);

    int workers = options.workers > 0 ? options.workers : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(work.size())));
    std::vector<ItemResult> results(work.size());
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = static_cast<std::size_t>(w); i < work.size(); i += static_cast<std::size_t>(workers))
                        results[i] = evaluate(work[i], per_sequence, limits);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    SweepReport report;
    report.n_max = n_max;
    report.workers = workers;
    report.sequences_checked = static_cast<std::int64_t>(work.size());
    for (auto c : checks) {
        CheckOutcome merged;
        merged.check = c;
        if (c == SweepCheck::EgVsOracle) {
            for (int n = 1; n <= n_max; ++n) {
                auto o = eg_against_search(n, limits);
                merged.evaluated += o.evaluated;
                merged.violations.insert(merged.violations.end(), o.violations.begin(), o.violations.end());
            }
        } else {
            for (const auto& r : results) {
                auto it = r.per_check.find(c);
                if (it == r.per_check.end()) continue;
                merged.evaluated += it->second.evaluated;
                merged.violations.insert(merged.violations.end(), it->second.violations.begin(), it->second.violations.end());
                merged.tight_cases.insert(merged.tight_cases.end(), it->second.tight_cases.begin(), it->second.tight_cases.end());
            }
        }
        report.checks.push_back(std::move(merged));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace degseq
