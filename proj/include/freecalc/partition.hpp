#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freecalc {

// A partition of {1..n}. Blocks are kept sorted by minimum element with
// elements ascending inside each block; every constructor canonicalizes.
class SetPartition {
public:
    using Block = std::vector<int>;

    SetPartition() = default;

    // Validates that the blocks are disjoint, non-empty and cover {1..n}.
    static SetPartition from_blocks(std::size_t n, std::vector<Block> blocks);

    // labels[i] is an arbitrary block tag for element i + 1.
    static SetPartition from_labels(std::span<const int> labels);

    static SetPartition zero(std::size_t n);
    static SetPartition one(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    const Block& block(std::size_t b) const { return blocks_.at(b); }

    // Index of the block containing element i (1-based).
    std::size_t block_of(int i) const { return static_cast<std::size_t>(labels_.at(static_cast<std::size_t>(i - 1))); }
    bool same_block(int i, int j) const { return block_of(i) == block_of(j); }

    // Restricted growth string: labels in order of first appearance.
    const std::vector<int>& labels() const noexcept { return labels_; }

    std::vector<std::size_t> block_sizes() const;

    // Canonical "1 5 8|2 7|3|4 6" form; the empty partition prints as "".
    std::string to_string() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.n_ == b.n_ && a.labels_ == b.labels_; }
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        return a.labels_ <=> b.labels_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Block> blocks_;
    std::vector<int> labels_;
};

struct SetPartitionHash {
    std::size_t operator()(const SetPartition& p) const noexcept;
};

// Parses the canonical text form. An explicit `n` at least the largest element
// appends singletons max+1..n; elements below the maximum must all appear.
SetPartition parse_partition(std::string_view text, std::optional<std::size_t> n = std::nullopt);

inline constexpr std::size_t kAllPartitionsCap = 12;
inline constexpr std::size_t kNoncrossingCap = 14;
inline constexpr std::size_t kIntervalCap = 30;
inline constexpr std::size_t kCrossingNumberCap = 14;

using PartitionVisitor = std::function<void(const SetPartition&)>;

// Enumerations in restricted-growth-string order.
void enumerate_all(std::size_t n, const PartitionVisitor& visit);
void enumerate_noncrossing(std::size_t n, const PartitionVisitor& visit);
void enumerate_interval(std::size_t n, const PartitionVisitor& visit);

std::vector<SetPartition> all_partitions(std::size_t n);
std::vector<SetPartition> noncrossing_partitions(std::size_t n);
std::vector<SetPartition> interval_partitions(std::size_t n);

// Every noncrossing sigma <= p, each once. Subject to the noncrossing cap.
void enumerate_noncrossing_refinements(const SetPartition& p, const PartitionVisitor& visit);

bool is_noncrossing(const SetPartition& p);
bool is_interval(const SetPartition& p);

// Refinement order: every block of a lies inside a block of b.
bool leq(const SetPartition& a, const SetPartition& b);
SetPartition meet(const SetPartition& a, const SetPartition& b);
// Join in the lattice of all partitions; may be crossing for noncrossing inputs.
SetPartition join(const SetPartition& a, const SetPartition& b);

SetPartition opposite(const SetPartition& p);
SetPartition thicken(const SetPartition& p, int k);
// Replaces point i by u[i-1] consecutive points of the same block.
SetPartition expand(const SetPartition& p, std::span<const int> u);
SetPartition direct_sum(const SetPartition& a, const SetPartition& b);
// a + a + ... + a, m times.
SetPartition repeat_sum(const SetPartition& a, std::size_t m);

enum class BlockRole { inner, outer };

struct BlockRoleLabeling {
    SetPartition partition;
    std::vector<BlockRole> roles; // parallel to partition.blocks()
    std::size_t inner_count = 0;
    std::size_t outer_count = 0;
};

// Requires a noncrossing partition.
BlockRoleLabeling classify_blocks(const SetPartition& p);
bool has_inner_singleton(const SetPartition& p);

// Minimal number of extra blocks needed to refine p into a noncrossing
// partition.
std::size_t crossing_number(const SetPartition& p);

// Kreweras complement for the interleaving 1 1' 2 2' ... n n'.
SetPartition kreweras(const SetPartition& p);

} // namespace freecalc
