#include "freecalc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "freecalc/error.hpp"
#include "freecalc/rational.hpp"

namespace freecalc {

SetPartition SetPartition::from_labels(std::span<const int> labels)
{
    SetPartition p;
    p.n_ = labels.size();
    p.labels_.resize(labels.size());
    std::vector<std::pair<int, int>> seen; // tag -> canonical index
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == labels[i]; });
        int canon;
        if (it == seen.end()) {
            canon = static_cast<int>(seen.size());
            seen.emplace_back(labels[i], canon);
            p.blocks_.emplace_back();
        } else {
            canon = it->second;
        }
        p.labels_[i] = canon;
        p.blocks_[static_cast<std::size_t>(canon)].push_back(static_cast<int>(i + 1));
    }
    return p;
}

SetPartition SetPartition::from_blocks(std::size_t n, std::vector<Block> blocks)
{
    std::vector<int> labels(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw InvalidArgument("empty block");
        }
        for (int e : blocks[b]) {
            if (e < 1 || static_cast<std::size_t>(e) > n) {
                throw InvalidArgument("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
            }
            auto& slot = labels[static_cast<std::size_t>(e - 1)];
            if (slot != -1) {
                throw InvalidArgument("duplicate element " + std::to_string(e));
            }
            slot = static_cast<int>(b);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] == -1) {
            throw InvalidArgument("element " + std::to_string(i + 1) + " is not covered");
        }
    }
    return from_labels(labels);
}

SetPartition SetPartition::zero(std::size_t n)
{
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

SetPartition SetPartition::one(std::size_t n)
{
    return from_labels(std::vector<int>(n, 0));
}

std::vector<std::size_t> SetPartition::block_sizes() const
{
    std::vector<std::size_t> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        sizes.push_back(b.size());
    }
    return sizes;
}

std::string SetPartition::to_string() const
{
    std::ostringstream out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b > 0) {
            out << '|';
        }
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i > 0) {
                out << ' ';
            }
            out << blocks_[b][i];
        }
    }
    return out.str();
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const noexcept
{
    std::size_t h = p.size() * 0x9e3779b97f4a7c15ULL;
    for (int l : p.labels()) {
        h ^= static_cast<std::size_t>(l) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

SetPartition parse_partition(std::string_view text, std::optional<std::size_t> n)
{
    std::vector<SetPartition::Block> blocks;
    std::size_t max_element = 0;
    std::size_t start = 0;
    const std::string s(text);
    bool blank = s.find_first_not_of(" \t") == std::string::npos;
    if (!blank) {
        while (start <= s.size()) {
            std::size_t bar = s.find('|', start);
            if (bar == std::string::npos) {
                bar = s.size();
            }
            std::istringstream in(s.substr(start, bar - start));
            SetPartition::Block block;
            std::string tok;
            while (in >> tok) {
                long long v = 0;
                std::size_t used = 0;
                try {
                    v = std::stoll(tok, &used);
                } catch (const std::exception&) {
                    throw InvalidArgument("malformed partition element '" + tok + "'");
                }
                if (used != tok.size()) {
                    throw InvalidArgument("malformed partition element '" + tok + "'");
                }
                if (v <= 0) {
                    throw InvalidArgument("partition elements must be positive, got " + tok);
                }
                block.push_back(static_cast<int>(v));
                max_element = std::max(max_element, static_cast<std::size_t>(v));
            }
            if (block.empty()) {
                throw InvalidArgument("empty block in partition '" + s + "'");
            }
            blocks.push_back(std::move(block));
            start = bar + 1;
        }
    }
    std::size_t size = max_element;
    if (n) {
        if (*n < max_element) {
            throw InvalidArgument("explicit n smaller than the largest element");
        }
        size = *n;
        for (std::size_t k = max_element + 1; k <= size; ++k) {
            blocks.push_back({static_cast<int>(k)});
        }
    }
    return SetPartition::from_blocks(size, std::move(blocks));
}

namespace {

// Incremental noncrossing bookkeeping for building a partition one element
// at a time from the left. Adding j to block b whose last element is l is
// legal only if every element strictly between l and j belongs to a block
// lying entirely inside (l, j); such blocks are then closed.
struct NcBuilder {
    std::vector<int> labels;
    std::vector<int> first;
    std::vector<int> last;
    std::vector<char> closed;

    int blocks() const { return static_cast<int>(first.size()); }

    bool can_extend(int b, int j) const
    {
        if (closed[static_cast<std::size_t>(b)]) {
            return false;
        }
        const int l = last[static_cast<std::size_t>(b)];
        for (int x = l + 1; x < j; ++x) {
            if (first[static_cast<std::size_t>(labels[static_cast<std::size_t>(x - 1)])] < l) {
                return false;
            }
        }
        return true;
    }

    void extend(int b, int j)
    {
        const int l = last[static_cast<std::size_t>(b)];
        for (int x = l + 1; x < j; ++x) {
            closed[static_cast<std::size_t>(labels[static_cast<std::size_t>(x - 1)])] = 1;
        }
        last[static_cast<std::size_t>(b)] = j;
        labels.push_back(b);
    }

    void open(int j)
    {
        labels.push_back(blocks());
        first.push_back(j);
        last.push_back(j);
        closed.push_back(0);
    }
};

void nc_recurse(std::size_t n, NcBuilder& state, const PartitionVisitor& visit)
{
    const int j = static_cast<int>(state.labels.size()) + 1;
    if (static_cast<std::size_t>(j) > n) {
        visit(SetPartition::from_labels(state.labels));
        return;
    }
    for (int b = 0; b < state.blocks(); ++b) {
        if (state.can_extend(b, j)) {
            NcBuilder next = state;
            next.extend(b, j);
            nc_recurse(n, next, visit);
        }
    }
    NcBuilder next = state;
    next.open(j);
    nc_recurse(n, next, visit);
}

void all_recurse(std::size_t n, std::vector<int>& labels, int used, const PartitionVisitor& visit)
{
    if (labels.size() == n) {
        visit(SetPartition::from_labels(labels));
        return;
    }
    for (int b = 0; b <= used; ++b) {
        labels.push_back(b);
        all_recurse(n, labels, std::max(used, b + 1), visit);
        labels.pop_back();
    }
}

} // namespace

void enumerate_all(std::size_t n, const PartitionVisitor& visit)
{
    check_cap(n, kAllPartitionsCap, "enumerate_all");
    std::vector<int> labels;
    labels.reserve(n);
    all_recurse(n, labels, 0, visit);
}

void enumerate_noncrossing(std::size_t n, const PartitionVisitor& visit)
{
    check_cap(n, kNoncrossingCap, "enumerate_noncrossing");
    NcBuilder state;
    nc_recurse(n, state, visit);
}

void enumerate_interval(std::size_t n, const PartitionVisitor& visit)
{
    check_cap(n, kIntervalCap, "enumerate_interval");
    if (n == 0) {
        visit(SetPartition{});
        return;
    }
    // Bit i of the cut mask set means a new block starts at element i + 2.
    // Restricted-growth order puts "stay in the current block" first, which
    // corresponds to reversed bit order of the mask read from the left.
    const std::size_t cuts = n - 1;
    const unsigned long long total = 1ULL << cuts;
    std::vector<int> labels(n);
    for (unsigned long long code = 0; code < total; ++code) {
        labels[0] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            const bool cut = (code >> (cuts - i)) & 1ULL;
            labels[i] = labels[i - 1] + (cut ? 1 : 0);
        }
        visit(SetPartition::from_labels(labels));
    }
}

std::vector<SetPartition> all_partitions(std::size_t n)
{
    std::vector<SetPartition> out;
    enumerate_all(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<SetPartition> noncrossing_partitions(std::size_t n)
{
    std::vector<SetPartition> out;
    enumerate_noncrossing(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<SetPartition> interval_partitions(std::size_t n)
{
    std::vector<SetPartition> out;
    enumerate_interval(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

bool is_noncrossing(const SetPartition& p)
{
    NcBuilder state;
    const int n = static_cast<int>(p.size());
    std::vector<int> map(p.block_count(), -1);
    for (int j = 1; j <= n; ++j) {
        const std::size_t b = p.block_of(j);
        if (map[b] == -1) {
            map[b] = state.blocks();
            state.open(j);
        } else {
            if (!state.can_extend(map[b], j)) {
                return false;
            }
            state.extend(map[b], j);
        }
    }
    return true;
}

bool is_interval(const SetPartition& p)
{
    for (const auto& b : p.blocks()) {
        if (b.back() - b.front() + 1 != static_cast<int>(b.size())) {
            return false;
        }
    }
    return true;
}

namespace {

void require_same_size(const SetPartition& a, const SetPartition& b)
{
    if (a.size() != b.size()) {
        throw InvalidArgument("partitions of different ground sets (" + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()) + ")");
    }
}

} // namespace

bool leq(const SetPartition& a, const SetPartition& b)
{
    require_same_size(a, b);
    for (const auto& block : a.blocks()) {
        const std::size_t target = b.block_of(block.front());
        for (int e : block) {
            if (b.block_of(e) != target) {
                return false;
            }
        }
    }
    return true;
}

SetPartition meet(const SetPartition& a, const SetPartition& b)
{
    require_same_size(a, b);
    std::vector<int> labels(a.size());
    const int width = static_cast<int>(b.block_count());
    for (std::size_t i = 0; i < a.size(); ++i) {
        labels[i] = a.labels()[i] * width + b.labels()[i];
    }
    return SetPartition::from_labels(labels);
}

SetPartition join(const SetPartition& a, const SetPartition& b)
{
    require_same_size(a, b);
    const std::size_t n = a.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](const SetPartition& p) {
        for (const auto& block : p.blocks()) {
            for (int e : block) {
                const int r1 = find(block.front() - 1);
                const int r2 = find(e - 1);
                if (r1 != r2) {
                    parent[static_cast<std::size_t>(std::max(r1, r2))] = std::min(r1, r2);
                }
            }
        }
    };
    unite(a);
    unite(b);
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = find(static_cast<int>(i));
    }
    return SetPartition::from_labels(labels);
}

SetPartition opposite(const SetPartition& p)
{
    const std::size_t n = p.size();
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = p.labels()[n - 1 - i];
    }
    return SetPartition::from_labels(labels);
}

SetPartition expand(const SetPartition& p, std::span<const int> u)
{
    if (u.size() != p.size()) {
        throw InvalidArgument("expansion vector length " + std::to_string(u.size()) + " does not match n = " +
                              std::to_string(p.size()));
    }
    std::vector<int> labels;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 1) {
            throw InvalidArgument("expansion multiplicities must be >= 1");
        }
        labels.insert(labels.end(), static_cast<std::size_t>(u[i]), p.labels()[i]);
    }
    return SetPartition::from_labels(labels);
}

SetPartition thicken(const SetPartition& p, int k)
{
    if (k < 1) {
        throw InvalidArgument("thickening factor must be >= 1");
    }
    const std::vector<int> u(p.size(), k);
    return expand(p, u);
}

SetPartition direct_sum(const SetPartition& a, const SetPartition& b)
{
    std::vector<int> labels = a.labels();
    const int shift = static_cast<int>(a.block_count());
    for (int l : b.labels()) {
        labels.push_back(l + shift);
    }
    return SetPartition::from_labels(labels);
}

SetPartition repeat_sum(const SetPartition& a, std::size_t m)
{
    SetPartition out;
    for (std::size_t i = 0; i < m; ++i) {
        out = direct_sum(out, a);
    }
    return out;
}

namespace {

void require_noncrossing(const SetPartition& p, std::string_view op)
{
    if (!is_noncrossing(p)) {
        throw InvalidArgument(std::string(op) + " requires a noncrossing partition, got '" + p.to_string() + "'");
    }
}

} // namespace

BlockRoleLabeling classify_blocks(const SetPartition& p)
{
    require_noncrossing(p, "classify_blocks");
    BlockRoleLabeling out{p, std::vector<BlockRole>(p.block_count(), BlockRole::outer), 0, 0};
    // In a noncrossing partition a block B is straddled by C iff some two
    // consecutive elements of C enclose min(B).
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        const int k = p.block(b).front();
        for (std::size_t c = 0; c < p.block_count() && out.roles[b] == BlockRole::outer; ++c) {
            if (c == b) {
                continue;
            }
            const auto& other = p.block(c);
            if (other.front() < k && other.back() > k) {
                out.roles[b] = BlockRole::inner;
            }
        }
    }
    for (BlockRole r : out.roles) {
        (r == BlockRole::inner ? out.inner_count : out.outer_count) += 1;
    }
    return out;
}

bool has_inner_singleton(const SetPartition& p)
{
    const auto labeling = classify_blocks(p);
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        if (labeling.roles[b] == BlockRole::inner && p.block(b).size() == 1) {
            return true;
        }
    }
    return false;
}

namespace {

// Depth-first search over noncrossing refinements, assigning elements left to
// right. `extra` counts sub-blocks beyond one per parent block seen so far and
// never decreases, so it bounds the final cut count from below.
struct CrossingSearch {
    const SetPartition& parent;
    std::size_t best;
    std::vector<int> owner; // parent block of each sub-block
    std::vector<char> parent_seen;

    void run(NcBuilder& state, std::size_t extra)
    {
        if (extra >= best) {
            return;
        }
        const int j = static_cast<int>(state.labels.size()) + 1;
        if (static_cast<std::size_t>(j) > parent.size()) {
            best = extra;
            return;
        }
        const int pb = static_cast<int>(parent.block_of(j));
        for (int b = state.blocks() - 1; b >= 0; --b) {
            if (owner[static_cast<std::size_t>(b)] == pb && state.can_extend(b, j)) {
                NcBuilder next = state;
                next.extend(b, j);
                run(next, extra);
            }
        }
        const bool first_of_parent = !parent_seen[static_cast<std::size_t>(pb)];
        NcBuilder next = state;
        next.open(j);
        owner.push_back(pb);
        parent_seen[static_cast<std::size_t>(pb)] = 1;
        run(next, extra + (first_of_parent ? 0 : 1));
        parent_seen[static_cast<std::size_t>(pb)] = first_of_parent ? 0 : 1;
        owner.pop_back();
    }
};

} // namespace

namespace {

void refinement_recurse(const SetPartition& parent, NcBuilder& state, std::vector<int>& owner,
                        const PartitionVisitor& visit)
{
    const int j = static_cast<int>(state.labels.size()) + 1;
    if (static_cast<std::size_t>(j) > parent.size()) {
        visit(SetPartition::from_labels(state.labels));
        return;
    }
    const int pb = static_cast<int>(parent.block_of(j));
    for (int b = 0; b < state.blocks(); ++b) {
        if (owner[static_cast<std::size_t>(b)] == pb && state.can_extend(b, j)) {
            NcBuilder next = state;
            next.extend(b, j);
            refinement_recurse(parent, next, owner, visit);
        }
    }
    NcBuilder next = state;
    next.open(j);
    owner.push_back(pb);
    refinement_recurse(parent, next, owner, visit);
    owner.pop_back();
}

} // namespace

void enumerate_noncrossing_refinements(const SetPartition& p, const PartitionVisitor& visit)
{
    check_cap(p.size(), kNoncrossingCap, "enumerate_noncrossing_refinements");
    NcBuilder state;
    std::vector<int> owner;
    refinement_recurse(p, state, owner, visit);
}

std::size_t crossing_number(const SetPartition& p)
{
    check_cap(p.size(), kCrossingNumberCap, "crossing_number");
    if (is_noncrossing(p)) {
        return 0;
    }
    CrossingSearch search{p, p.size() - p.block_count(), {}, std::vector<char>(p.block_count(), 0)};
    NcBuilder state;
    search.run(state, 0);
    return search.best;
}

SetPartition kreweras(const SetPartition& p)
{
    require_noncrossing(p, "kreweras");
    const int n = static_cast<int>(p.size());
    // i' ~ j' (i < j) iff {i+1, ..., j} is a union of blocks of p.
    auto closed_segment = [&](int lo, int hi) {
        for (int x = lo; x <= hi; ++x) {
            const auto& b = p.block(p.block_of(x));
            if (b.front() < lo || b.back() > hi) {
                return false;
            }
        }
        return true;
    };
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int i = 1; i <= n; ++i) {
        if (labels[static_cast<std::size_t>(i - 1)] != -1) {
            continue;
        }
        labels[static_cast<std::size_t>(i - 1)] = next;
        for (int j = i + 1; j <= n; ++j) {
            if (labels[static_cast<std::size_t>(j - 1)] == -1 && closed_segment(i + 1, j)) {
                labels[static_cast<std::size_t>(j - 1)] = next;
            }
        }
        ++next;
    }
    return SetPartition::from_labels(labels);
}

} // namespace freecalc
