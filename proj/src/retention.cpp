#include "beer/retention.hpp"

#include <string>

#include "beer/errors.hpp"
#include "beer/rng.hpp"

namespace beer {

namespace {

constexpr std::uint64_t kRetentionSalt = 0x72657431ULL; // "ret1"
constexpr std::uint64_t kNoiseSalt = 0x6e6f6973ULL;     // "nois"

} // namespace

BitVector charge_states(const BitVector& codeword, const CellPolarity& polarity) {
    if (polarity.size() != codeword.size()) {
        throw DimensionError("charge_states: polarity covers " + std::to_string(polarity.size()) +
                             " cells, codeword has " + std::to_string(codeword.size()));
    }
    return codeword ^ polarity.anti_mask();
}

BitVector inject_retention_errors(const BitVector& codeword, const CellPolarity& polarity,
                                  const RetentionErrorModel& model, std::uint64_t word_index) {
    const std::size_t n = codeword.size();
    std::vector<bool> eligible(n, true);
    if (model.error_prone_positions) {
        eligible.assign(n, false);
        for (std::size_t pos : *model.error_prone_positions) {
            if (pos >= n) {
                throw ArgumentError("inject_retention_errors: error-prone position " +
                                    std::to_string(pos) + " outside codeword of " +
                                    std::to_string(n) + " bits");
            }
            eligible[pos] = true;
        }
    }
    const BitVector charged = charge_states(codeword, polarity);
    BitVector out = codeword;
    Rng rng = Rng::for_stream(model.seed, {kRetentionSalt, word_index});
    for (std::size_t i = 0; i < n; ++i) {
        if (charged.get(i) && eligible[i] && rng.bernoulli(model.failure_probability)) {
            out.flip(i); // discharge: logical value flips
        }
    }
    return out;
}

BitVector simulate_read(const EccCode& code, const BitVector& dataword,
                        const CellPolarity& polarity, const RetentionErrorModel& model,
                        const TransientNoiseModel& noise, std::uint64_t word_index) {
    const BitVector stored = code.encode(dataword);
    const BitVector decayed = inject_retention_errors(stored, polarity, model, word_index);
    DecodeResult decoded = code.decode(decayed);
    if (noise.flip_probability > 0.0) {
        Rng rng = Rng::for_stream(model.seed, {kNoiseSalt, word_index});
        for (std::size_t i = 0; i < decoded.dataword.size(); ++i) {
            if (rng.bernoulli(noise.flip_probability)) {
                decoded.dataword.flip(i);
            }
        }
    }
    return std::move(decoded.dataword);
}

} // namespace beer
