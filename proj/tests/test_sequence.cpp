#include <doctest.h>

#include <set>

#include "degseq/errors.hpp"
#include "degseq/oracle.hpp"
#include "degseq/sequence.hpp"
#include "support/brute.hpp"

using namespace degseq;

namespace {

// Graphicality over every subset I rather than prefixes.
bool graphic_all_subsets(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    long long total = 0;
    for (int x : d) total += x;
    if (total % 2) return false;
    for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
        const int size = std::popcount(sub);
        long long lhs = 0, rhs = static_cast<long long>(size) * (size - 1);
        for (int i = 0; i < n; ++i) {
            if (sub >> i & 1u) lhs += d[static_cast<std::size_t>(i)];
            else rhs += std::min(d[static_cast<std::size_t>(i)], size);
        }
        if (lhs > rhs) return false;
    }
    return true;
}

// Sorted degree sequences realized by at least one labeled graph on n vertices.
std::set<std::vector<int>> realizable(int n) {
    std::set<std::vector<int>> out;
    for (auto deg : brute::all_degree_lists(n)) {
        std::sort(deg.rbegin(), deg.rend());
        out.insert(deg);
    }
    return out;
}

void for_each_tuple(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int pos, int cap) {
        if (pos == n) {
            visit(cur);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, std::max(0, n));
}

} // namespace

TEST_CASE("parse_sequence sorts and rejects bad tokens") {
    CHECK(parse_sequence("2,2,2,2,2") == DegreeSequence{2, 2, 2, 2, 2});
    CHECK(parse_sequence("1 3 1 1").degrees() == std::vector<int>{3, 1, 1, 1});
    CHECK_THROWS_AS(parse_sequence("2,-1"), ParseError);
    try {
        parse_sequence("2,x7");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("x7") != std::string::npos);
    }
    CHECK(parse_sequence("").empty());
}

TEST_CASE("DegreeSequence fields") {
    DegreeSequence d{1, 3, 2};
    CHECK(d.degrees() == std::vector<int>{3, 2, 1});
    CHECK(d.sum() == 6);
    CHECK(d.min_degree() == 1);
    CHECK(d.max_degree() == 3);
    CHECK(d.to_string() == "(3,2,1)");
    CHECK_THROWS_AS(DegreeSequence({1, -1}), ArgumentError);
}

TEST_CASE("is_graphic examples") {
    CHECK(is_graphic({2, 2, 2, 2, 2}));
    CHECK_FALSE(is_graphic({3, 3, 1, 1}));
    CHECK_FALSE(is_graphic({1}));
    CHECK(is_graphic(DegreeSequence{}));
    CHECK(brute::count_labeled({3, 3, 1, 1}) == 0);
}

TEST_CASE("is_graphic matches exhaustive realization search for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto real = realizable(n);
        for_each_tuple(n, [&](const std::vector<int>& d) {
            const bool graphic = is_graphic(DegreeSequence(d));
            CHECK_MESSAGE(graphic == (real.count(d) > 0), DegreeSequence(d).to_string());
        });
    }
}

TEST_CASE("prefix test equals the all-subsets test for n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for_each_tuple(n, [&](const std::vector<int>& d) {
            CHECK(is_graphic(DegreeSequence(d)) == graphic_all_subsets(d));
        });
}

TEST_CASE("rao_omega_at_least examples") {
    CHECK(rao_omega_at_least({3, 3, 3, 3}, 4));
    CHECK_FALSE(rao_omega_at_least({2, 2, 2, 2, 2}, 3));
    CHECK(rao_omega_at_least({3, 3, 2, 2, 2}, 3));
    CHECK_THROWS_AS(rao_omega_at_least({2, 2, 2}, 0), ArgumentError);
    CHECK_THROWS_AS(rao_omega_at_least({2, 2, 2}, 4), ArgumentError);
}

TEST_CASE("omega_of_sequence examples") {
    CHECK(omega_of_sequence({2, 2, 2, 2, 2}) == 2);
    CHECK(omega_of_sequence(DegreeSequence(std::vector<int>(10, 7))) == 5);
    CHECK(omega_of_sequence({3, 3, 3, 3}) == 4);
    CHECK(omega_of_sequence(DegreeSequence{}) == 0);
    CHECK_THROWS_AS(omega_of_sequence({3, 3, 1, 1}), DomainError);
}

TEST_CASE("yinli_sufficient examples and soundness for n <= 8") {
    CHECK(yinli_sufficient({2, 2, 2, 2, 2, 2}, 3));
    CHECK_FALSE(yinli_sufficient({2, 2, 2, 2, 2}, 3));
    CHECK(yinli_sufficient({2, 2, 2, 2, 2, 2}, 2));
    for (int n = 1; n <= 8; ++n)
        for_each_graphic_sequence(n, 0, [&](const DegreeSequence& d) {
            for (int k = 1; k <= n; ++k)
                if (yinli_sufficient(d, k)) CHECK_MESSAGE(rao_omega_at_least(d, k), d.to_string(), " k=", k);
        });
}

TEST_CASE("largecl_check examples and preconditions") {
    CHECK_FALSE(largecl_check({2, 2, 2, 2, 2}, 3));
    CHECK(largecl_check({4, 4, 4, 4, 4}, 3));
    CHECK(largecl_check({3, 3, 2, 2, 2}, 3));
    try {
        largecl_check({2, 2, 2, 2}, 3);
        FAIL("expected an argument error");
    } catch (const ArgumentError& e) {
        CHECK(e.condition() == "n = 2k-1");
    }
    try {
        largecl_check({2, 2, 1, 1, 0}, 3);
        FAIL("expected an argument error");
    } catch (const ArgumentError& e) {
        CHECK(e.condition() == "d_{2k-1} >= k-1");
    }
}

TEST_CASE("classify_basic_profile examples") {
    const auto c5 = classify_basic_profile({2, 2, 2, 2, 2});
    CHECK(c5.verdict == ProfileVerdict::NontrivialBasicProfile);
    CHECK(c5.m == 2);
    CHECK(classify_basic_profile({2, 2, 2, 2}).verdict == ProfileVerdict::NotOddLength);
    CHECK(classify_basic_profile({2, 2, 2, 1, 1}).verdict == ProfileVerdict::MinDegTooLow);
    CHECK(classify_basic_profile({3, 3, 2, 2, 2}).verdict == ProfileVerdict::LargeCliqueExists);
    CHECK_THROWS_AS(classify_basic_profile({3, 3, 1, 1}), DomainError);
}

TEST_CASE("nontrivial profile invariant") {
    for (int n = 1; n <= 9; n += 2)
        for_each_graphic_sequence(n, 0, [&](const DegreeSequence& d) {
            const auto p = classify_basic_profile(d);
            if (p.verdict != ProfileVerdict::NontrivialBasicProfile) return;
            const int m = *p.m;
            CHECK(n == 2 * m + 1);
            CHECK(d.min_degree() >= m);
            CHECK_FALSE(largecl_check(d, m + 1));
        });
}

TEST_CASE("source tags") {
    CHECK(to_string(StatSource::RaoExact) == "rao-exact");
    CHECK(to_string(StatSource::OracleEnumeration) == "oracle-enumeration");
    CHECK(to_string(StatSource::WitnessLowerBound) == "witness-lower-bound");
}
