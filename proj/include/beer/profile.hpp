#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "beer/bitvec.hpp"
#include "beer/ecc_code.hpp"
#include "beer/retention.hpp"

namespace beer {

// A retention test pattern: the set of data cells programmed CHARGED. All
// other data cells are DISCHARGED; parity cell charges follow from encoding.
struct TestPattern {
    std::size_t data_bits = 0;                    // k
    std::vector<std::size_t> charged_data_bits;   // sorted, unique, < k

    bool operator==(const TestPattern& other) const = default;
};

// Logical data bits that program the pattern's charge states under the given
// polarity (cells outside charged_data_bits come out DISCHARGED).
BitVector dataword_for_pattern(const TestPattern& pattern, const CellPolarity& polarity);

// One profile row: which DISCHARGED data bits the on-die corrector can flip
// (miscorrect) when retention errors strike this pattern's CHARGED cells.
struct ProfileEntry {
    TestPattern pattern;
    std::vector<std::size_t> miscorrectable; // sorted; disjoint from charged set
};

struct MiscorrectionProfile {
    std::size_t data_bits = 0;
    std::vector<ProfileEntry> entries;

    bool operator==(const MiscorrectionProfile& other) const = default;
};

// Raw per-bit post-correction error counts from a measurement campaign.
struct ObservedEntry {
    TestPattern pattern;
    std::vector<std::uint64_t> counts; // length k, indexed by data bit
    std::uint64_t words = 0;
};

struct ObservedProfile {
    std::size_t data_bits = 0;
    std::vector<ObservedEntry> entries;
};

// All C(k, w) patterns for each requested weight: weights ascending, patterns
// in lexicographic order of their charged sets. Throws ArgumentError when a
// weight is outside [1, k].
std::vector<TestPattern> enumerate_test_patterns(std::size_t k, const std::set<std::size_t>& weights);

// Ground-truth profile by exhaustive enumeration: for every pattern, walks
// all 2^m subsets of its m CHARGED codeword cells as candidate error sets and
// records each post-correction flip of a DISCHARGED data bit. Refuses
// patterns with m > max_charged_cells, since the subset count doubles per
// cell; use monte_carlo_profile for those.
MiscorrectionProfile exhaustive_profile(const EccCode& code,
                                        const std::vector<TestPattern>& patterns,
                                        const CellPolarity& polarity,
                                        std::size_t max_charged_cells = 24);

// Simulation-based profile: words_per_pattern independent words per pattern
// through the retention channel, accumulating post-correction error counts
// per data bit. Deterministic for fixed (model.seed, words_per_pattern),
// independent of the worker count.
ObservedProfile monte_carlo_profile(const EccCode& code,
                                    const std::vector<TestPattern>& patterns,
                                    const CellPolarity& polarity,
                                    const RetentionErrorModel& model,
                                    const TransientNoiseModel& noise,
                                    std::uint64_t words_per_pattern,
                                    std::size_t jobs = 1);

// Separates real miscorrections from sporadic transient flips: within each
// entry, a non-charged bit is kept iff its count exceeds relative_threshold
// times the entry's maximum non-charged count.
MiscorrectionProfile threshold_filter(const ObservedProfile& observed,
                                      double relative_threshold = 0.01);

// Expected fraction of the 2^m error subsets of an m-cell pattern that appear
// at least once across `words` reads when each charged cell fails with the
// given probability. Reported as a sampling-coverage diagnostic for
// monte_carlo_profile.
double estimate_subset_coverage(std::size_t charged_cells, double failure_probability,
                                std::uint64_t words);

// Folds externally captured (written, read) dataword pairs into an
// ObservedProfile. pattern_index[i] names the pattern word i was written
// with. Throws FormatError on length mismatches or out-of-range indices.
ObservedProfile ingest_dump(const std::vector<std::pair<BitVector, BitVector>>& word_pairs,
                            const std::vector<std::size_t>& pattern_index,
                            const std::vector<TestPattern>& patterns);

} // namespace beer
