#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace degseq {

/// A multiset of non-negative integers stored in non-increasing order.
///
/// Graphicality is not enforced; a DegreeSequence may describe a list that no
/// simple graph realizes. Indexing through operator[] is 0-based.
class DegreeSequence {
public:
    DegreeSequence() = default;

    /// Sorts `degrees` non-increasing. Throws ArgumentError on negative entries.
    explicit DegreeSequence(std::vector<int> degrees);
    DegreeSequence(std::initializer_list<int> degrees)
        : DegreeSequence(std::vector<int>(degrees)) {}

    const std::vector<int>& degrees() const noexcept { return degrees_; }
    int size() const noexcept { return static_cast<int>(degrees_.size()); }
    bool empty() const noexcept { return degrees_.empty(); }
    std::int64_t sum() const noexcept { return sum_; }
    int min_degree() const noexcept { return degrees_.empty() ? 0 : degrees_.back(); }
    int max_degree() const noexcept { return degrees_.empty() ? 0 : degrees_.front(); }

    int operator[](int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    auto begin() const noexcept { return degrees_.begin(); }
    auto end() const noexcept { return degrees_.end(); }

    /// "(2,2,2,2,2)"
    std::string to_string() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence& a, const DegreeSequence& b) {
        return a.degrees_ <=> b.degrees_;
    }

private:
    std::vector<int> degrees_;
    std::int64_t sum_ = 0;
};

/// Parses comma and/or whitespace separated non-negative integers.
DegreeSequence parse_sequence(std::string_view text);

/// Erdős–Gallai test, evaluated on prefixes of the sorted sequence.
bool is_graphic(const DegreeSequence& d);

/// Rao's criterion: true iff `d` has a realization containing a k-clique.
/// Requires 1 <= k <= n.
bool rao_omega_at_least(const DegreeSequence& d, int k);

/// Exact omega(D), the largest clique over all realizations.
/// Throws DomainError for non-graphic input. Returns 0 for the empty sequence.
int omega_of_sequence(const DegreeSequence& d);

/// Yin–Li sufficient condition for a k-clique realization.
bool yinli_sufficient(const DegreeSequence& d, int k);

/// Clique-forcing test for sequences of length 2k-1 with minimum degree at
/// least k-1. Throws ArgumentError when those hypotheses fail.
bool largecl_check(const DegreeSequence& d, int k);

enum class ProfileVerdict { NotOddLength, MinDegTooLow, LargeCliqueExists, NontrivialBasicProfile };

std::string_view to_string(ProfileVerdict v);

struct BasicProfile {
    ProfileVerdict verdict = ProfileVerdict::NotOddLength;
    std::optional<int> m;  // n = 2m + 1, present for odd n

    friend bool operator==(const BasicProfile&, const BasicProfile&) = default;
};

/// Classifies whether `d` can be the degree sequence of a nontrivial basic
/// graph. Throws DomainError for non-graphic input.
BasicProfile classify_basic_profile(const DegreeSequence& d);

enum class StatSource { OracleEnumeration, RaoExact, WitnessLowerBound };

std::string_view to_string(StatSource s);

template <class T>
struct Sourced {
    T value{};
    StatSource source = StatSource::RaoExact;
};

/// Numeric summary of a degree sequence. Fields that were not computed stay
/// empty. Only the star-subdivision layer h1 is tracked; h(D) and H(D) are
/// bounded below by it but never computed.
struct SequenceStats {
    std::optional<Sourced<int>> chi;
    std::optional<Sourced<int>> omega;
    std::optional<Sourced<int>> h1;
    int delta_max = 0;
};

} // namespace degseq
