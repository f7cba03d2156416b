#include "beer/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <chrono>
#include <string>

#include "beer/errors.hpp"

namespace beer {

namespace {

constexpr std::size_t kMaxSolverParityBits = 8; // column values fit in a byte
constexpr std::size_t kMaxSolverDataBits = 256;

using ValueSet = std::bitset<256>;   // candidate column values, indexed by value
using PosSet = std::bitset<kMaxSolverDataBits>;

struct NormEntry {
    std::vector<std::uint16_t> charged; // charged data positions
    PosSet miscorrect;                  // expected miscorrectable positions
    PosSet constrained;                 // positions the entry says anything about
};

// GF(2) span membership over packed column values (bit r = parity row r).
struct SpanBasis {
    std::array<std::uint32_t, kMaxSolverParityBits> by_leading{};

    void insert(std::uint32_t v) {
        while (v != 0) {
            const int lead = 31 - std::countl_zero(v);
            std::uint32_t& slot = by_leading[static_cast<std::size_t>(lead)];
            if (slot == 0) {
                slot = v;
                return;
            }
            v ^= slot;
        }
    }

    bool contains(std::uint32_t v) const {
        while (v != 0) {
            const int lead = 31 - std::countl_zero(v);
            const std::uint32_t slot = by_leading[static_cast<std::size_t>(lead)];
            if (slot == 0) return false;
            v ^= slot;
        }
        return true;
    }
};

class ProfileSearch {
public:
    ProfileSearch(const MiscorrectionProfile& profile, std::size_t k, std::size_t limit)
        : k_(k), p_(min_parity_bits(k)), limit_(limit) {
        if (k_ == 0 || k_ > kMaxSolverDataBits) {
            throw ArgumentError("solve: k = " + std::to_string(k_) + " outside supported [1, " +
                                std::to_string(kMaxSolverDataBits) + "]");
        }
        if (p_ > kMaxSolverParityBits) {
            throw ArgumentError("solve: k = " + std::to_string(k_) + " needs " + std::to_string(p_) +
                                " parity bits; the search supports at most " +
                                std::to_string(kMaxSolverParityBits));
        }
        if (profile.data_bits != k_) {
            throw ArgumentError("solve: profile is for " + std::to_string(profile.data_bits) +
                                " data bits, requested k = " + std::to_string(k_));
        }
        normalize_(profile);
        precompute_masks_();
    }

    SolveOutcome run() {
        const auto start = std::chrono::steady_clock::now();
        SolveOutcome outcome;
        if (!infeasible_) {
            std::vector<ValueSet> cand(k_, domain_);
            std::vector<std::uint8_t> block_of(p_, 0);
            reset_state_();
            search_(cand, block_of);
        }
        std::sort(found_.begin(), found_.end(),
                  [](const EccCode& a, const EccCode& b) { return code_less(a, b); });
        outcome.solutions = std::move(found_);
        outcome.exhausted = !stopped_early_;
        outcome.stats.nodes = nodes_;
        outcome.stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        return outcome;
    }

private:
    std::size_t k_;
    std::size_t p_;
    std::size_t limit_;
    std::uint32_t parity_mask_ = 0;

    std::vector<NormEntry> entries_;
    // 1-CHARGED entries indexed by their single charged position.
    std::vector<int> single_entry_at_;
    // Wider entries indexed by charged position; an entry activates when its
    // last charged position is assigned.
    std::vector<std::vector<std::uint32_t>> wide_entries_at_;
    std::vector<std::uint32_t> wide_ids_;
    bool infeasible_ = false;

    ValueSet domain_;
    std::array<ValueSet, 256> sub_mask_;   // values contained in s
    std::array<ValueSet, 256> super_mask_; // values containing s

    std::vector<std::int32_t> assigned_;
    std::vector<std::uint16_t> unassigned_left_; // per wide entry
    std::uint64_t nodes_ = 0;
    bool stopped_early_ = false;
    std::vector<EccCode> found_;

    void normalize_(const MiscorrectionProfile& profile) {
        single_entry_at_.assign(k_, -1);
        wide_entries_at_.assign(k_, {});
        for (const ProfileEntry& raw : profile.entries) {
            NormEntry entry;
            PosSet charged_set;
            for (std::size_t pos : raw.pattern.charged_data_bits) {
                if (pos >= k_) {
                    throw ArgumentError("profile charges data bit " + std::to_string(pos) +
                                        " beyond k = " + std::to_string(k_));
                }
                charged_set.set(pos);
            }
            for (std::size_t pos : raw.pattern.charged_data_bits) {
                entry.charged.push_back(static_cast<std::uint16_t>(pos));
            }
            std::sort(entry.charged.begin(), entry.charged.end());
            entry.charged.erase(std::unique(entry.charged.begin(), entry.charged.end()),
                                entry.charged.end());
            for (std::size_t pos : raw.miscorrectable) {
                if (pos >= k_) {
                    throw ArgumentError("profile marks data bit " + std::to_string(pos) +
                                        " beyond k = " + std::to_string(k_));
                }
                if (charged_set.test(pos)) {
                    throw ArgumentError("profile marks charged bit " + std::to_string(pos) +
                                        " as miscorrectable; charged cells carry no evidence");
                }
                entry.miscorrect.set(pos);
            }
            for (std::size_t pos = 0; pos < k_; ++pos) {
                if (!charged_set.test(pos)) entry.constrained.set(pos);
            }
            if (entry.charged.empty()) {
                // No charged cells: no error subset exists, so nothing may be
                // miscorrectable.
                if (entry.miscorrect.any()) infeasible_ = true;
                continue;
            }
            if (entry.charged.size() == 1) {
                const std::size_t pos = entry.charged.front();
                if (single_entry_at_[pos] >= 0) {
                    // Duplicate pattern: answers must agree.
                    const NormEntry& prev = entries_[static_cast<std::size_t>(single_entry_at_[pos])];
                    if (prev.miscorrect != entry.miscorrect) infeasible_ = true;
                    continue;
                }
                single_entry_at_[pos] = static_cast<int>(entries_.size());
                entries_.push_back(std::move(entry));
            } else {
                const std::uint32_t id = static_cast<std::uint32_t>(entries_.size());
                for (std::uint16_t pos : entry.charged) {
                    wide_entries_at_[pos].push_back(id);
                }
                wide_ids_.push_back(id);
                entries_.push_back(std::move(entry));
            }
        }
    }

    void precompute_masks_() {
        parity_mask_ = (p_ >= 32) ? ~std::uint32_t{0}
                                  : ((std::uint32_t{1} << p_) - 1);
        for (std::uint32_t v = 0; v <= parity_mask_; ++v) {
            if (std::popcount(v) >= 2) domain_.set(v);
        }
        for (std::uint32_t s = 0; s <= parity_mask_; ++s) {
            ValueSet subs;
            ValueSet supers;
            for (std::uint32_t v = 0; v <= parity_mask_; ++v) {
                if ((v & ~s) == 0) subs.set(v);
                if ((s & ~v) == 0) supers.set(v);
            }
            sub_mask_[s] = subs;
            super_mask_[s] = supers;
        }
    }

    void reset_state_() {
        assigned_.assign(k_, -1);
        unassigned_left_.assign(entries_.size(), 0);
        for (std::uint32_t id : wide_ids_) {
            unassigned_left_[id] = static_cast<std::uint16_t>(entries_[id].charged.size());
        }
    }

    // Span of the charged cells of a fully assigned wide entry: data columns
    // plus identity columns of the parity cells charged by P*d.
    SpanBasis entry_span_(const NormEntry& entry) const {
        SpanBasis basis;
        std::uint32_t parity_charge = 0;
        for (std::uint16_t pos : entry.charged) {
            const std::uint32_t col = static_cast<std::uint32_t>(assigned_[pos]);
            parity_charge ^= col;
        }
        for (std::uint16_t pos : entry.charged) {
            basis.insert(static_cast<std::uint32_t>(assigned_[pos]));
        }
        std::uint32_t bits = parity_charge;
        while (bits != 0) {
            basis.insert(bits & (~bits + 1)); // lowest set bit as identity column
            bits &= bits - 1;
        }
        return basis;
    }

    ValueSet span_member_mask_(const SpanBasis& basis) const {
        ValueSet mask;
        for (std::uint32_t v = 0; v <= parity_mask_; ++v) {
            if (basis.contains(v)) mask.set(v);
        }
        return mask;
    }

    // Applies every consequence of assigning `value` at `pos`. Returns false
    // on contradiction. `cand` is the current node's working copy.
    bool propagate_(std::vector<ValueSet>& cand, std::size_t pos, std::uint32_t value) {
        assigned_[pos] = static_cast<std::int32_t>(value);
        for (std::size_t u = 0; u < k_; ++u) {
            if (assigned_[u] < 0) cand[u].reset(value);
        }
        // Containment constraints from the 1-CHARGED entry at pos.
        if (single_entry_at_[pos] >= 0) {
            const NormEntry& entry = entries_[static_cast<std::size_t>(single_entry_at_[pos])];
            for (std::size_t u = 0; u < k_; ++u) {
                if (u == pos || !entry.constrained.test(u)) continue;
                const bool expected = entry.miscorrect.test(u);
                if (assigned_[u] >= 0) {
                    const std::uint32_t vu = static_cast<std::uint32_t>(assigned_[u]);
                    if (((vu & ~value) == 0) != expected) return false;
                } else {
                    cand[u] &= expected ? sub_mask_[value] : ~sub_mask_[value];
                    if (cand[u].none()) return false;
                }
            }
        }
        // Containment constraints from 1-CHARGED entries at other positions.
        for (std::size_t u = 0; u < k_; ++u) {
            if (u == pos || single_entry_at_[u] < 0) continue;
            const NormEntry& entry = entries_[static_cast<std::size_t>(single_entry_at_[u])];
            if (!entry.constrained.test(pos)) continue;
            const bool expected = entry.miscorrect.test(pos);
            if (assigned_[u] >= 0) continue; // checked when u was assigned
            cand[u] &= expected ? super_mask_[value] : ~super_mask_[value];
            if (cand[u].none()) return false;
        }
        // Wide entries whose charged set just completed. Counters move first
        // so a mid-loop contradiction leaves them consistent for unassign_.
        for (std::uint32_t id : wide_entries_at_[pos]) {
            --unassigned_left_[id];
        }
        for (std::uint32_t id : wide_entries_at_[pos]) {
            if (unassigned_left_[id] != 0) continue;
            const NormEntry& entry = entries_[id];
            const SpanBasis basis = entry_span_(entry);
            const ValueSet member = span_member_mask_(basis);
            for (std::size_t u = 0; u < k_; ++u) {
                if (!entry.constrained.test(u)) continue;
                const bool expected = entry.miscorrect.test(u);
                if (assigned_[u] >= 0) {
                    if (member.test(static_cast<std::size_t>(assigned_[u])) != expected) {
                        return false;
                    }
                } else {
                    cand[u] &= expected ? member : ~member;
                    if (cand[u].none()) return false;
                }
            }
        }
        return true;
    }

    void unassign_(std::size_t pos) {
        for (std::uint32_t id : wide_entries_at_[pos]) {
            ++unassigned_left_[id];
        }
        assigned_[pos] = -1;
    }

    // Partition refinement: rows keep their block when their bit in `value`
    // matches; blocks split deterministically by (old block, bit).
    static std::vector<std::uint8_t> refine_blocks_(const std::vector<std::uint8_t>& block_of,
                                                    std::uint32_t value) {
        std::vector<std::uint8_t> keys(block_of.size());
        for (std::size_t r = 0; r < block_of.size(); ++r) {
            keys[r] = static_cast<std::uint8_t>(block_of[r] * 2 + ((value >> r) & 1));
        }
        std::array<std::int8_t, 32> renum;
        renum.fill(-1);
        std::uint8_t next = 0;
        std::vector<std::uint8_t> sorted_keys(keys);
        std::sort(sorted_keys.begin(), sorted_keys.end());
        for (std::uint8_t key : sorted_keys) {
            if (renum[key] < 0) renum[key] = static_cast<std::int8_t>(next++);
        }
        std::vector<std::uint8_t> out(block_of.size());
        for (std::size_t r = 0; r < block_of.size(); ++r) {
            out[r] = static_cast<std::uint8_t>(renum[keys[r]]);
        }
        return out;
    }

    // Values equivalent under permutations of interchangeable rows have equal
    // per-block popcounts; one representative per key survives.
    std::uint64_t orbit_key_(const std::vector<std::uint8_t>& block_of, std::uint32_t value) const {
        std::array<std::uint8_t, kMaxSolverParityBits> counts{};
        for (std::size_t r = 0; r < p_; ++r) {
            if ((value >> r) & 1) ++counts[block_of[r]];
        }
        std::uint64_t key = 0;
        for (std::size_t b = 0; b < kMaxSolverParityBits; ++b) {
            key |= static_cast<std::uint64_t>(counts[b]) << (b * 8);
        }
        return key;
    }

    bool complete_() const {
        for (std::size_t pos = 0; pos < k_; ++pos) {
            if (assigned_[pos] < 0) return false;
        }
        return true;
    }

    // Exact profile check of a full assignment; guards against any gap in the
    // incremental propagation.
    bool validate_full_() const {
        for (const NormEntry& entry : entries_) {
            const SpanBasis basis = entry_span_(entry);
            for (std::size_t u = 0; u < k_; ++u) {
                if (!entry.constrained.test(u)) continue;
                if (basis.contains(static_cast<std::uint32_t>(assigned_[u])) !=
                    entry.miscorrect.test(u)) {
                    return false;
                }
            }
        }
        return true;
    }

    void emit_solution_() {
        BitMatrix parity(p_, k_);
        for (std::size_t c = 0; c < k_; ++c) {
            for (std::size_t r = 0; r < p_; ++r) {
                parity.set(r, c, (static_cast<std::uint32_t>(assigned_[c]) >> r) & 1);
            }
        }
        found_.push_back(canonicalize(EccCode(parity)));
        if (limit_ != 0 && found_.size() >= limit_) stopped_early_ = true;
    }

    void search_(const std::vector<ValueSet>& cand, const std::vector<std::uint8_t>& block_of) {
        if (stopped_early_) return;
        if (complete_()) {
            if (validate_full_()) emit_solution_();
            return;
        }
        // Minimum-remaining-values position; ties break toward low index.
        std::size_t pick = k_;
        std::size_t best = ~std::size_t{0};
        for (std::size_t pos = 0; pos < k_; ++pos) {
            if (assigned_[pos] >= 0) continue;
            const std::size_t c = cand[pos].count();
            if (c < best) {
                best = c;
                pick = pos;
            }
        }
        if (best == 0) return;
        std::vector<std::uint64_t> seen_keys;
        seen_keys.reserve(best);
        for (std::uint32_t value = 0; value <= parity_mask_; ++value) {
            if (stopped_early_) return;
            if (!cand[pick].test(value)) continue;
            const std::uint64_t key = orbit_key_(block_of, value);
            if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end()) {
                continue;
            }
            seen_keys.push_back(key);
            ++nodes_;
            std::vector<ValueSet> next_cand(cand);
            if (propagate_(next_cand, pick, value)) {
                search_(next_cand, refine_blocks_(block_of, value));
            }
            unassign_(pick);
        }
    }
};

} // namespace

SolveOutcome solve(const MiscorrectionProfile& profile, std::size_t k, std::size_t solution_limit) {
    ProfileSearch search(profile, k, solution_limit);
    return search.run();
}

UniquenessResult check_uniqueness(const MiscorrectionProfile& profile, std::size_t k) {
    SolveOutcome outcome = solve(profile, k, 2);
    UniquenessResult result;
    if (outcome.solutions.empty()) {
        result.kind = Uniqueness::none;
    } else if (outcome.solutions.size() == 1) {
        result.kind = Uniqueness::unique;
    } else {
        result.kind = Uniqueness::multiple;
    }
    result.codes = std::move(outcome.solutions);
    return result;
}

bool code_less(const EccCode& a, const EccCode& b) {
    if (a.data_bits() != b.data_bits()) return a.data_bits() < b.data_bits();
    if (a.parity_bits() != b.parity_bits()) return a.parity_bits() < b.parity_bits();
    for (std::size_t r = 0; r < a.parity_bits(); ++r) {
        for (std::size_t c = 0; c < a.data_bits(); ++c) {
            const bool x = a.parity_part().get(r, c);
            const bool y = b.parity_part().get(r, c);
            if (x != y) return !x;
        }
    }
    return false;
}

} // namespace beer
