#include "beer/profile.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "beer/errors.hpp"
#include "beer/parallel.hpp"

namespace beer {

BitVector dataword_for_pattern(const TestPattern& pattern, const CellPolarity& polarity) {
    BitVector d(pattern.data_bits);
    for (std::size_t i = 0; i < pattern.data_bits; ++i) {
        d.set(i, polarity.is_anti(i)); // DISCHARGED default
    }
    for (std::size_t pos : pattern.charged_data_bits) {
        if (pos >= pattern.data_bits) {
            throw ArgumentError("pattern charges data bit " + std::to_string(pos) +
                                " beyond dataword of " + std::to_string(pattern.data_bits) +
                                " bits");
        }
        d.set(pos, !polarity.is_anti(pos));
    }
    return d;
}

std::vector<TestPattern> enumerate_test_patterns(std::size_t k, const std::set<std::size_t>& weights) {
    std::vector<TestPattern> out;
    for (std::size_t w : weights) {
        if (w < 1 || w > k) {
            throw ArgumentError("pattern weight " + std::to_string(w) +
                                " outside [1, " + std::to_string(k) + "]");
        }
        // Lexicographic combinations of w charged positions.
        std::vector<std::size_t> comb(w);
        for (std::size_t i = 0; i < w; ++i) comb[i] = i;
        for (;;) {
            out.push_back(TestPattern{k, comb});
            std::size_t i = w;
            while (i > 0 && comb[i - 1] == k - w + (i - 1)) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < w; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return out;
}

MiscorrectionProfile exhaustive_profile(const EccCode& code,
                                        const std::vector<TestPattern>& patterns,
                                        const CellPolarity& polarity,
                                        std::size_t max_charged_cells) {
    const std::size_t k = code.data_bits();
    MiscorrectionProfile profile;
    profile.data_bits = k;
    profile.entries.reserve(patterns.size());
    for (const TestPattern& pattern : patterns) {
        if (pattern.data_bits != k) {
            throw ArgumentError("pattern sized for " + std::to_string(pattern.data_bits) +
                                " data bits fed to a code with " + std::to_string(k));
        }
        const BitVector dataword = dataword_for_pattern(pattern, polarity);
        const BitVector stored = code.encode(dataword);
        const std::vector<std::size_t> charged = charge_states(stored, polarity).set_positions();
        const std::size_t m = charged.size();
        if (m > max_charged_cells) {
            throw ArgumentError(
                "pattern charges " + std::to_string(m) + " cells; exhausting 2^" +
                std::to_string(m) + " error subsets exceeds the limit of 2^" +
                std::to_string(max_charged_cells) +
                " (use monte_carlo_profile for wide patterns)");
        }
        std::vector<bool> charged_data(k, false);
        for (std::size_t pos : pattern.charged_data_bits) charged_data[pos] = true;

        std::vector<bool> hit(k, false);
        // Gray-code walk over all non-empty error subsets; one column XOR per
        // step keeps the syndrome current.
        std::uint32_t syndrome = 0;
        for (std::uint64_t g = 1; g < (std::uint64_t{1} << m); ++g) {
            const int toggled = std::countr_zero(g);
            syndrome ^= code.column(charged[static_cast<std::size_t>(toggled)]);
            if (syndrome == 0) continue;
            const std::size_t flips = code.position_for_syndrome(syndrome);
            if (flips < k && !charged_data[flips]) {
                hit[flips] = true;
            }
        }
        ProfileEntry entry;
        entry.pattern = pattern;
        for (std::size_t j = 0; j < k; ++j) {
            if (hit[j]) entry.miscorrectable.push_back(j);
        }
        profile.entries.push_back(std::move(entry));
    }
    return profile;
}

ObservedProfile monte_carlo_profile(const EccCode& code,
                                    const std::vector<TestPattern>& patterns,
                                    const CellPolarity& polarity,
                                    const RetentionErrorModel& model,
                                    const TransientNoiseModel& noise,
                                    std::uint64_t words_per_pattern,
                                    std::size_t jobs) {
    const std::size_t k = code.data_bits();
    ObservedProfile observed;
    observed.data_bits = k;
    observed.entries.resize(patterns.size());
    parallel_for(jobs, patterns.size(), [&](std::size_t pi) {
        const TestPattern& pattern = patterns[pi];
        const BitVector dataword = dataword_for_pattern(pattern, polarity);
        ObservedEntry entry;
        entry.pattern = pattern;
        entry.counts.assign(k, 0);
        entry.words = words_per_pattern;
        for (std::uint64_t w = 0; w < words_per_pattern; ++w) {
            const std::uint64_t word_index = pi * words_per_pattern + w;
            const BitVector read = simulate_read(code, dataword, polarity, model, noise, word_index);
            for (std::size_t pos : (read ^ dataword).set_positions()) {
                ++entry.counts[pos];
            }
        }
        observed.entries[pi] = std::move(entry);
    });
    return observed;
}

MiscorrectionProfile threshold_filter(const ObservedProfile& observed, double relative_threshold) {
    MiscorrectionProfile profile;
    profile.data_bits = observed.data_bits;
    profile.entries.reserve(observed.entries.size());
    for (const ObservedEntry& entry : observed.entries) {
        std::vector<bool> charged(observed.data_bits, false);
        for (std::size_t pos : entry.pattern.charged_data_bits) charged[pos] = true;
        std::uint64_t max_count = 0;
        for (std::size_t j = 0; j < entry.counts.size(); ++j) {
            if (!charged[j]) max_count = std::max(max_count, entry.counts[j]);
        }
        ProfileEntry out;
        out.pattern = entry.pattern;
        if (max_count > 0) {
            const double cutoff = relative_threshold * static_cast<double>(max_count);
            for (std::size_t j = 0; j < entry.counts.size(); ++j) {
                if (!charged[j] && static_cast<double>(entry.counts[j]) > cutoff) {
                    out.miscorrectable.push_back(j);
                }
            }
        }
        profile.entries.push_back(std::move(out));
    }
    return profile;
}

double estimate_subset_coverage(std::size_t charged_cells, double failure_probability,
                                std::uint64_t words) {
    const std::size_t m = charged_cells;
    const double q = failure_probability;
    double covered = 0.0;
    double binom = 1.0; // C(m, t)
    for (std::size_t t = 0; t <= m; ++t) {
        const double p_subset = std::pow(q, static_cast<double>(t)) *
                                std::pow(1.0 - q, static_cast<double>(m - t));
        double p_seen;
        if (p_subset <= 0.0) {
            p_seen = 0.0;
        } else if (p_subset >= 1.0) {
            p_seen = 1.0;
        } else {
            p_seen = 1.0 - std::exp(static_cast<double>(words) * std::log1p(-p_subset));
        }
        covered += binom * p_seen;
        binom = binom * static_cast<double>(m - t) / static_cast<double>(t + 1);
    }
    return covered / std::ldexp(1.0, static_cast<int>(m));
}

ObservedProfile ingest_dump(const std::vector<std::pair<BitVector, BitVector>>& word_pairs,
                            const std::vector<std::size_t>& pattern_index,
                            const std::vector<TestPattern>& patterns) {
    if (word_pairs.size() != pattern_index.size()) {
        throw FormatError("dump holds " + std::to_string(word_pairs.size()) +
                          " word pairs but " + std::to_string(pattern_index.size()) +
                          " pattern assignments");
    }
    if (patterns.empty()) {
        throw FormatError("dump declares no test patterns");
    }
    const std::size_t k = patterns.front().data_bits;
    ObservedProfile observed;
    observed.data_bits = k;
    observed.entries.resize(patterns.size());
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        if (patterns[pi].data_bits != k) {
            throw FormatError("dump patterns disagree on dataword width");
        }
        observed.entries[pi].pattern = patterns[pi];
        observed.entries[pi].counts.assign(k, 0);
    }
    for (std::size_t i = 0; i < word_pairs.size(); ++i) {
        const auto& [written, read] = word_pairs[i];
        if (written.size() != k || read.size() != k) {
            throw FormatError("word pair " + std::to_string(i) + " has " +
                              std::to_string(written.size()) + "/" + std::to_string(read.size()) +
                              " bits, expected " + std::to_string(k));
        }
        const std::size_t pi = pattern_index[i];
        if (pi >= patterns.size()) {
            throw FormatError("word " + std::to_string(i) + " references unknown pattern " +
                              std::to_string(pi));
        }
        ObservedEntry& entry = observed.entries[pi];
        ++entry.words;
        for (std::size_t pos : (written ^ read).set_positions()) {
            ++entry.counts[pos];
        }
    }
    return observed;
}

} // namespace beer
