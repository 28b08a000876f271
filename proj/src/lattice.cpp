#include "freecalc/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "freecalc/error.hpp"

namespace freecalc {

namespace {

// Coarsenings of `lower` below `upper` are the set partitions of the blocks
// of `lower` that only merge blocks lying in a common block of `upper`.
void coarsen(const SetPartition& lower, const SetPartition& upper, std::vector<int>& group, int groups,
             std::vector<int>& group_owner, std::vector<SetPartition>& out)
{
    const std::size_t b = group.size();
    if (b == lower.block_count()) {
        std::vector<int> labels(lower.size());
        for (std::size_t i = 0; i < lower.size(); ++i) {
            labels[i] = group[static_cast<std::size_t>(lower.labels()[i])];
        }
        out.push_back(SetPartition::from_labels(labels));
        return;
    }
    const int owner = static_cast<int>(upper.block_of(lower.block(b).front()));
    for (int g = 0; g < groups; ++g) {
        if (group_owner[static_cast<std::size_t>(g)] == owner) {
            group.push_back(g);
            coarsen(lower, upper, group, groups, group_owner, out);
            group.pop_back();
        }
    }
    group.push_back(groups);
    group_owner.push_back(owner);
    coarsen(lower, upper, group, groups + 1, group_owner, out);
    group_owner.pop_back();
    group.pop_back();
}

struct MemoKey {
    Lattice lattice;
    SetPartition lower;
    SetPartition upper;
    bool operator<(const MemoKey& o) const
    {
        if (lattice != o.lattice) {
            return lattice < o.lattice;
        }
        if (lower != o.lower) {
            return lower < o.lower;
        }
        return upper < o.upper;
    }
};

std::shared_mutex memo_mutex;
std::map<MemoKey, Rational>& memo()
{
    static std::map<MemoKey, Rational> table;
    return table;
}

void require_member(Lattice lattice, const SetPartition& p)
{
    if (lattice == Lattice::noncrossing && !is_noncrossing(p)) {
        throw InvalidArgument("'" + p.to_string() + "' is not noncrossing");
    }
}

} // namespace

std::vector<SetPartition> lattice_interval(Lattice lattice, const SetPartition& lower, const SetPartition& upper)
{
    require_member(lattice, lower);
    require_member(lattice, upper);
    if (!leq(lower, upper)) {
        throw InvalidArgument("'" + lower.to_string() + "' is not below '" + upper.to_string() + "'");
    }
    check_cap(lower.size(), lattice == Lattice::all ? kAllPartitionsCap : kNoncrossingCap, "lattice_interval");
    std::vector<SetPartition> all;
    std::vector<int> group;
    std::vector<int> owner;
    coarsen(lower, upper, group, 0, owner, all);
    if (lattice == Lattice::noncrossing) {
        std::erase_if(all, [](const SetPartition& p) { return !is_noncrossing(p); });
    }
    return all;
}

std::vector<std::pair<Rational, SetPartition>> mobius_row(Lattice lattice, const SetPartition& sigma,
                                                          const SetPartition& pi)
{
    std::vector<SetPartition> interval = lattice_interval(lattice, sigma, pi);
    // Finer partitions first, so every predecessor is done before its successors.
    std::stable_sort(interval.begin(), interval.end(), [](const SetPartition& a, const SetPartition& b) {
        return a.block_count() > b.block_count();
    });
    std::vector<Rational> mu(interval.size());
    {
        std::shared_lock lock(memo_mutex);
        bool complete = true;
        for (std::size_t i = 0; i < interval.size() && complete; ++i) {
            auto it = memo().find(MemoKey{lattice, sigma, interval[i]});
            if (it == memo().end()) {
                complete = false;
            } else {
                mu[i] = it->second;
            }
        }
        if (complete) {
            std::vector<std::pair<Rational, SetPartition>> out;
            for (std::size_t i = 0; i < interval.size(); ++i) {
                out.emplace_back(mu[i], interval[i]);
            }
            return out;
        }
    }
    for (std::size_t i = 0; i < interval.size(); ++i) {
        if (i == 0) {
            mu[i] = 1;
            continue;
        }
        Rational acc = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (interval[j].block_count() > interval[i].block_count() && leq(interval[j], interval[i])) {
                acc += mu[j];
            }
        }
        mu[i] = -acc;
    }
    std::vector<std::pair<Rational, SetPartition>> out;
    {
        std::unique_lock lock(memo_mutex);
        for (std::size_t i = 0; i < interval.size(); ++i) {
            memo().emplace(MemoKey{lattice, sigma, interval[i]}, mu[i]);
            out.emplace_back(mu[i], interval[i]);
        }
    }
    return out;
}

Rational mobius(Lattice lattice, const SetPartition& sigma, const SetPartition& pi)
{
    require_member(lattice, sigma);
    require_member(lattice, pi);
    if (!leq(sigma, pi)) {
        throw InvalidArgument("mobius: '" + sigma.to_string() + "' is not below '" + pi.to_string() + "'");
    }
    {
        std::shared_lock lock(memo_mutex);
        auto it = memo().find(MemoKey{lattice, sigma, pi});
        if (it != memo().end()) {
            return it->second;
        }
    }
    for (const auto& [value, tau] : mobius_row(lattice, sigma, pi)) {
        if (tau == pi) {
            return value;
        }
    }
    throw Error("mobius: upper element missing from its own interval");
}

} // namespace freecalc
