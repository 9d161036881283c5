#include "nclab/ncpart.hpp"

#include "nclab/closedform.hpp"
#include "nclab/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace nclab {

Params::Params(int m_, int n_, int t_) : m(m_), n(n_), t(t_) {
    if (m < 1 || n < 1 || t < 1 || t > n) {
        throw ParameterError("invalid parameters (m,n,t)=(" + std::to_string(m) + "," + std::to_string(n) + "," +
                             std::to_string(t) + "); need m>=1, n>=1, 1<=t<=n");
    }
}

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks) : ground_size_(ground_size) {
    if (ground_size < 0) throw DomainError("negative ground size");
    std::vector<int> seen(static_cast<std::size_t>(ground_size), 0);
    for (auto& block : blocks) {
        if (block.empty()) throw DomainError("empty block");
        for (int e : block) {
            if (e < 1 || e > ground_size) {
                throw DomainError("element " + std::to_string(e) + " outside [1," + std::to_string(ground_size) + "]");
            }
            if (seen[static_cast<std::size_t>(e - 1)]++) throw DomainError("element " + std::to_string(e) + " repeated");
        }
        std::sort(block.begin(), block.end());
    }
    for (int i = 0; i < ground_size; ++i) {
        if (!seen[static_cast<std::size_t>(i)]) throw DomainError("element " + std::to_string(i + 1) + " not covered");
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    blocks_ = std::move(blocks);
    block_index_.assign(static_cast<std::size_t>(ground_size), 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int e : blocks_[b]) block_index_[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
    }
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
    std::map<int, std::vector<int>> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(static_cast<int>(i) + 1);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(by_label.size());
    for (auto& [label, block] : by_label) blocks.push_back(std::move(block));
    return SetPartition(static_cast<int>(labels.size()), std::move(blocks));
}

SetPartition SetPartition::singletons(int ground_size) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= ground_size; ++i) blocks.push_back({i});
    return SetPartition(ground_size, std::move(blocks));
}

std::int64_t BlockProfile::block_total() const {
    std::int64_t s = 0;
    for (auto b : counts) s += b;
    return s;
}

std::int64_t BlockProfile::weighted_total() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) s += static_cast<std::int64_t>(i + 1) * counts[i];
    return s;
}

bool is_t_partition(const SetPartition& pi, int t) {
    if (t < 1 || t > pi.ground_size()) {
        throw ParameterError("t=" + std::to_string(t) + " outside [1," + std::to_string(pi.ground_size()) + "]");
    }
    for (int i = 1; i <= t; ++i) {
        for (int j = i + 1; j <= t; ++j) {
            if (pi.same_block(i, j)) return false;
        }
    }
    return true;
}

bool is_m_divisible(const SetPartition& pi, int m) {
    return std::all_of(pi.blocks().begin(), pi.blocks().end(),
                       [m](const auto& b) { return static_cast<int>(b.size()) % m == 0; });
}

bool is_noncrossing_t(const SetPartition& pi, int t) {
    if (!is_t_partition(pi, t)) throw DomainError("not a " + std::to_string(t) + "-partition");
    const int n = pi.ground_size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (pi.same_block(i, j)) continue;
            for (int k = j + 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l) {
                    if (j <= t) {
                        if (pi.same_block(i, l) && pi.same_block(j, k)) return false;
                    } else {
                        if (pi.same_block(i, k) && pi.same_block(j, l)) return false;
                    }
                }
            }
        }
    }
    return true;
}

bool is_member(const SetPartition& pi, const Params& p) {
    return pi.ground_size() == p.ground_size() && is_m_divisible(pi, p.m) && is_t_partition(pi, p.t) &&
           is_noncrossing_t(pi, p.t);
}

bool refines(const SetPartition& finer, const SetPartition& coarser) {
    if (finer.ground_size() != coarser.ground_size()) throw DomainError("refines: ground sizes differ");
    for (const auto& block : finer.blocks()) {
        const int target = coarser.block_of(block.front());
        for (int e : block) {
            if (coarser.block_of(e) != target) return false;
        }
    }
    return true;
}

int rank_of(const SetPartition& pi, const Params& p) { return p.n - pi.block_count(); }

BlockProfile block_profile(const SetPartition& pi, const Params& p) {
    BlockProfile profile;
    profile.counts.assign(static_cast<std::size_t>(p.n), 0);
    for (const auto& block : pi.blocks()) {
        const int size = static_cast<int>(block.size());
        if (size % p.m != 0) {
            throw DomainError("block of size " + std::to_string(size) + " is not divisible by m=" + std::to_string(p.m));
        }
        const int i = size / p.m;
        if (i > p.n) throw DomainError("block larger than m*n");
        ++profile.counts[static_cast<std::size_t>(i - 1)];
    }
    return profile;
}

WeightSignature weight_signature(const BlockProfile& profile) {
    WeightSignature w;
    for (std::size_t i = 0; i < profile.counts.size(); ++i) {
        if (profile.counts[i] != 0) w.exponents[static_cast<int>(i) + 1] = profile.counts[i];
    }
    return w;
}

SetPartition tilde_transform(const SetPartition& pi, int t) {
    if (t < 1 || t > pi.ground_size()) throw ParameterError("tilde_transform: t out of range");
    std::vector<std::vector<int>> blocks = pi.blocks();
    for (auto& block : blocks) {
        for (int& e : block) {
            if (e <= t) e = t + 1 - e;
        }
    }
    return SetPartition(pi.ground_size(), std::move(blocks));
}

namespace {

// Depth-first generation of m-divisible non-crossing labellings: the block
// of the leftmost free element is grown left to right, each skipped gap is
// filled recursively, and whatever follows the closed block is independent.
class ClassicalGenerator {
public:
    ClassicalGenerator(int m, int ground, std::uint64_t cap) : m_(m), labels_(static_cast<std::size_t>(ground), -1), cap_(cap) {}

    std::vector<SetPartition> run() {
        fill(0, static_cast<int>(labels_.size()), 0, [this](int) {
            if (out_.size() >= cap_) throw ResourceError("classical enumeration exceeded the object cap");
            out_.push_back(SetPartition::from_labels(labels_));
        });
        return std::move(out_);
    }

private:
    // Partition positions [lo, hi) (0-based). Labels start at `label`; `done`
    // receives the next free label once the interval is filled.
    using Done = std::function<void(int)>;

    void fill(int lo, int hi, int label, const Done& done) {
        if (lo == hi) {
            done(label);
            return;
        }
        labels_[static_cast<std::size_t>(lo)] = label;
        choose(lo + 1, hi, label, 1, label + 1, done);
    }

    // Extends the block `block_label` (currently of size `size`) whose last
    // element sits just before `pos`: either close the block and fill the
    // rest, or skip a gap [pos, next) and add `next` to the block.
    void choose(int pos, int hi, int block_label, int size, int label, const Done& done) {
        if (size % m_ == 0) fill(pos, hi, label, done);
        // Gap lengths must be multiples of m for the gap to be fillable.
        for (int next = pos; next < hi; next += m_) {
            fill(pos, next, label, [&, next](int after_gap) {
                labels_[static_cast<std::size_t>(next)] = block_label;
                choose(next + 1, hi, block_label, size + 1, after_gap, done);
            });
        }
    }

    int m_;
    std::vector<int> labels_;
    std::uint64_t cap_;
    std::vector<SetPartition> out_;
};

} // namespace

std::vector<SetPartition> enumerate_classical_nc(int m, int n, std::uint64_t cap) {
    const Params classical(m, n, 1);
    if (total_count(classical) > cap) {
        throw ResourceError("enumeration of NC(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ") exceeds the object cap");
    }
    auto out = ClassicalGenerator(m, m * n, cap).run();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartition> enumerate_nc(const Params& p, std::uint64_t cap) {
    if (total_count(p) > cap) throw ResourceError("NC_{n,t}^{(m)} is predicted to exceed the object cap");
    std::vector<SetPartition> out;
    for (const auto& sigma : enumerate_classical_nc(p.m, p.n, cap)) {
        if (!is_t_partition(sigma, p.t)) continue;
        SetPartition pi = tilde_transform(sigma, p.t);
        if (!is_noncrossing_t(pi, p.t)) {
            throw InvariantError("tilde preimage of a classical non-crossing partition fails the t-aware test");
        }
        out.push_back(std::move(pi));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartition> enumerate_all_partitions(int ground_size) {
    std::vector<SetPartition> out;
    std::vector<int> word(static_cast<std::size_t>(ground_size), 0);
    // Restricted growth words: word[0] = 0, word[i] <= 1 + max(word[0..i)).
    auto rec = [&](auto&& self, int i, int max_label) -> void {
        if (i == ground_size) {
            out.push_back(SetPartition::from_labels(word));
            return;
        }
        for (int label = 0; label <= max_label + 1; ++label) {
            word[static_cast<std::size_t>(i)] = label;
            self(self, i + 1, std::max(max_label, label));
        }
    };
    if (ground_size == 0) return {SetPartition(0, {})};
    rec(rec, 1, 0);
    return out;
}

std::vector<BlockProfile> all_profiles(int n) {
    std::vector<BlockProfile> out;
    std::vector<std::int64_t> b(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == 0) {
            if (remaining == 0) out.push_back(BlockProfile{b});
            return;
        }
        for (int c = 0; c * i <= remaining; ++c) {
            b[static_cast<std::size_t>(i - 1)] = c;
            self(self, i - 1, remaining - c * i);
        }
        b[static_cast<std::size_t>(i - 1)] = 0;
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nclab
