#include <numeric>

#include "degseq/errors.hpp"
#include "degseq/hajos.hpp"

namespace degseq {

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ArgumentError("den != 0", "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string_view to_string(BoundKind k) {
    switch (k) {
    case BoundKind::Hajos: return "hajos";
    case BoundKind::Sf: return "sf";
    case BoundKind::Reed: return "reed";
    case BoundKind::Hajos2a: return "hajos2a";
    case BoundKind::Hajos2b: return "hajos2b";
    }
    return "?";
}

const BoundVerdict& BoundReport::get(BoundKind k) const {
    for (const auto& v : verdicts)
        if (v.kind == k) return v;
    throw ArgumentError("bound present", "bound report lacks " + std::string(to_string(k)));
}

bool BoundReport::all_hold() const {
    for (const auto& v : verdicts)
        if (v.evaluated && !v.holds) return false;
    return true;
}

BoundReport check_bounds(const SequenceStats& stats) {
    BoundReport report;
    auto add = [&](BoundKind kind, std::optional<Rational> slack) {
        BoundVerdict v;
        v.kind = kind;
        if (slack) {
            v.evaluated = true;
            v.slack = *slack;
            v.holds = slack->num >= 0;
            v.tight = slack->num == 0;
        }
        report.verdicts.push_back(v);
    };
    const bool have_chi = stats.chi.has_value();
    const bool have_omega = stats.omega.has_value();
    const bool have_h1 = stats.h1.has_value();
    const std::int64_t chi = have_chi ? stats.chi->value : 0;
    const std::int64_t omega = have_omega ? stats.omega->value : 0;
    const std::int64_t h1 = have_h1 ? stats.h1->value : 0;
    const std::int64_t delta = stats.delta_max;
    const bool pair = have_chi && have_omega;

    auto maybe = [](bool ok, Rational r) { return ok ? std::optional<Rational>(r) : std::nullopt; };
    // chi <= h1
    add(BoundKind::Hajos, maybe(have_chi && have_h1, Rational::of(h1 - chi, 1)));
    // 5 chi <= 6 omega + 3
    add(BoundKind::Sf, maybe(pair, Rational::of(6 * omega + 3 - 5 * chi, 5)));
    // 5 chi <= 4 omega + Delta + 5
    add(BoundKind::Reed, maybe(pair, Rational::of(4 * omega + delta + 5 - 5 * chi, 5)));
    // 6 omega >= 5 chi - 3
    add(BoundKind::Hajos2a, maybe(pair, Rational::of(6 * omega - 5 * chi + 3, 6)));
    // 4 omega >= 5 chi - Delta - 5
    add(BoundKind::Hajos2b, maybe(pair, Rational::of(4 * omega - 5 * chi + delta + 5, 4)));
    return report;
}

} // namespace degseq
