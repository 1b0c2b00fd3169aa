#include "degseq/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "degseq/errors.hpp"

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (int x : degrees_) {
        if (x < 0)
            throw ArgumentError("d_i >= 0", "degree sequence entries must be non-negative, got " +
                                                std::to_string(x));
    }
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
    sum_ = std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

std::string DegreeSequence::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i) os << ',';
        os << degrees_[i];
    }
    os << ')';
    return os.str();
}

DegreeSequence parse_sequence(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos])) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) ++end;
        std::string_view token = text.substr(pos, end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
            throw ParseError("not a non-negative integer: '" + std::string(token) + "'");
        values.push_back(value);
        pos = end;
    }
    return DegreeSequence(std::move(values));
}

bool is_graphic(const DegreeSequence& d) {
    if (d.sum() % 2 != 0) return false;
    const int n = d.size();
    // lhs(t) <= t(t-1) + sum_{i>t} min(d_i, t) for every prefix length t
    std::int64_t prefix = 0;
    for (int t = 1; t <= n; ++t) {
        prefix += d[t - 1];
        std::int64_t rhs = std::int64_t{t} * (t - 1);
        for (int i = t; i < n; ++i) rhs += std::min(d[i], t);
        if (prefix > rhs) return false;
    }
    return true;
}

bool rao_omega_at_least(const DegreeSequence& d, int k) {
    const int n = d.size();
    if (k < 1 || k > n)
        throw ArgumentError("1 <= k <= n", "clique order k=" + std::to_string(k) +
                                               " out of range for n=" + std::to_string(n));
    // 1-based view to keep the inequality readable
    auto deg = [&](int i) -> std::int64_t { return d[i - 1]; };
    if (d.sum() % 2 != 0) return false;
    if (deg(k) < k - 1) return false;

    for (int s = 0; s <= k; ++s) {
        for (int t = 0; t <= n - k; ++t) {
            const std::int64_t st = s + t;
            std::int64_t lhs = 0;
            for (int i = 1; i <= s; ++i) lhs += deg(i);
            for (int i = k + 1; i <= k + t; ++i) lhs += deg(i);
            lhs -= st * (st - 1);  // 2 * C(s+t, 2)

            std::int64_t rhs = 0;
            for (int i = s + 1; i <= k; ++i) rhs += std::min(st, deg(i) + s - k + 1);
            for (int i = k + t + 1; i <= n; ++i) rhs += std::min(st, deg(i));
            if (lhs > rhs) return false;
        }
    }
    return true;
}

int omega_of_sequence(const DegreeSequence& d) {
    if (!is_graphic(d)) throw DomainError("sequence " + d.to_string() + " is not graphic");
    if (d.empty()) return 0;
    for (int k = std::min(d.size(), d.max_degree() + 1); k >= 1; --k) {
        if (rao_omega_at_least(d, k)) return k;
    }
    throw InternalError("no k >= 1 satisfies the clique criterion for graphic " + d.to_string());
}

bool yinli_sufficient(const DegreeSequence& d, int k) {
    const int n = d.size();
    if (k < 1 || k > n) return false;
    if (d[k - 1] < k - 1) return false;
    if (n < 2 * k) return false;
    return d[2 * k - 1] >= k - 2;
}

bool largecl_check(const DegreeSequence& d, int k) {
    const int n = d.size();
    if (k < 1 || n != 2 * k - 1)
        throw ArgumentError("n = 2k-1", "sequence length " + std::to_string(n) +
                                            " is not 2k-1 for k=" + std::to_string(k));
    auto deg = [&](int i) -> std::int64_t { return d[i - 1]; };
    if (deg(n) < k - 1)
        throw ArgumentError("d_{2k-1} >= k-1", "minimum degree " + std::to_string(deg(n)) +
                                                   " is below k-1=" + std::to_string(k - 1));
    std::int64_t lhs = 0;
    for (int i = 1; i <= k - 1; ++i) lhs += deg(i) - deg(k);
    for (int i = k + 1; i <= 2 * k - 1; ++i) lhs += deg(k) - deg(i);
    return lhs >= 2 * k - 2 - deg(k);
}

std::string_view to_string(ProfileVerdict v) {
    switch (v) {
    case ProfileVerdict::NotOddLength: return "NotOddLength";
    case ProfileVerdict::MinDegTooLow: return "MinDegTooLow";
    case ProfileVerdict::LargeCliqueExists: return "LargeCliqueExists";
    case ProfileVerdict::NontrivialBasicProfile: return "NontrivialBasicProfile";
    }
    return "?";
}

BasicProfile classify_basic_profile(const DegreeSequence& d) {
    if (!is_graphic(d)) throw DomainError("sequence " + d.to_string() + " is not graphic");
    const int n = d.size();
    if (n % 2 == 0) return {ProfileVerdict::NotOddLength, std::nullopt};
    const int m = (n - 1) / 2;
    if (d.min_degree() < m) return {ProfileVerdict::MinDegTooLow, m};
    if (largecl_check(d, m + 1)) return {ProfileVerdict::LargeCliqueExists, m};
    return {ProfileVerdict::NontrivialBasicProfile, m};
}

std::string_view to_string(StatSource s) {
    switch (s) {
    case StatSource::OracleEnumeration: return "oracle-enumeration";
    case StatSource::RaoExact: return "rao-exact";
    case StatSource::WitnessLowerBound: return "witness-lower-bound";
    }
    return "?";
}

} // namespace degseq
