#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into the library's enumeration, lattice or measure code.

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "freecalc/partition.hpp"
#include "freecalc/rational.hpp"

namespace oracle {

using freecalc::Integer;
using freecalc::Rational;
using Labels = std::vector<int>; // labels[i] = block tag of element i + 1

inline void grow(std::size_t n, Labels& cur, int blocks, std::vector<Labels>& out)
{
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        cur.push_back(b);
        grow(n, cur, std::max(blocks, b + 1), out);
        cur.pop_back();
    }
}

inline std::vector<Labels> partitions(std::size_t n)
{
    std::vector<Labels> out;
    Labels cur;
    grow(n, cur, 0, out);
    return out;
}

inline bool crossing(const Labels& l)
{
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (l[a] == l[c] && l[b] == l[d] && l[a] != l[b])
                        return true;
    return false;
}

inline std::vector<Labels> noncrossing(std::size_t n)
{
    std::vector<Labels> out;
    for (auto& l : partitions(n))
        if (!crossing(l))
            out.push_back(l);
    return out;
}

inline std::size_t block_count(const Labels& l)
{
    int m = -1;
    for (int x : l)
        m = std::max(m, x);
    return static_cast<std::size_t>(m + 1);
}

inline std::vector<std::size_t> block_sizes(const Labels& l)
{
    std::vector<std::size_t> s(block_count(l), 0);
    for (int x : l)
        ++s[static_cast<std::size_t>(x)];
    return s;
}

inline bool finer(const Labels& a, const Labels& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j] && b[i] != b[j])
                return false;
    return true;
}

// sigma ^ pi = 0: no two points share a block in both.
inline bool meet_is_zero(const Labels& a, const Labels& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j] && b[i] == b[j])
                return false;
    return true;
}

inline Labels labels_of(const freecalc::SetPartition& p)
{
    return p.labels();
}

inline freecalc::SetPartition to_partition(const Labels& l)
{
    return freecalc::SetPartition::from_labels(l);
}

inline Integer catalan(unsigned n)
{
    Integer c = 1;
    for (unsigned k = 0; k < n; ++k)
        c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

inline Integer bell(unsigned n)
{
    // Bell triangle.
    std::vector<Integer> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Integer> next{row.back()};
        for (const auto& x : row)
            next.push_back(next.back() + x);
        row = next;
    }
    return row.front();
}

inline Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

// mu_P(sigma, pi) = prod over blocks of pi of (-1)^(j-1) (j-1)!, j = number of
// sigma-blocks inside.
inline Rational mobius_p_product(const Labels& sigma, const Labels& pi)
{
    std::map<int, std::map<int, bool>> inside;
    for (std::size_t i = 0; i < pi.size(); ++i)
        inside[pi[i]][sigma[i]] = true;
    Rational r = 1;
    for (auto& [b, s] : inside) {
        const unsigned j = static_cast<unsigned>(s.size());
        r *= Rational(factorial(j - 1)) * (j % 2 == 1 ? 1 : -1);
    }
    return r;
}

// Largest noncrossing sigma on the barred points such that pi on 1, 3, 5, ...
// together with sigma on 2, 4, 6, ... is noncrossing.
inline Labels kreweras(const Labels& pi)
{
    const std::size_t n = pi.size();
    Labels best;
    std::size_t best_blocks = n + 1;
    for (const auto& s : noncrossing(n)) {
        Labels both(2 * n);
        const int shift = static_cast<int>(block_count(pi));
        for (std::size_t i = 0; i < n; ++i) {
            both[2 * i] = pi[i];
            both[2 * i + 1] = s[i] + shift;
        }
        if (!crossing(both) && block_count(s) < best_blocks) {
            best = s;
            best_blocks = block_count(s);
        }
    }
    return best;
}

// min |sigma| - |pi| over noncrossing sigma <= pi, by full enumeration.
inline std::size_t crossing_number(const Labels& pi)
{
    std::size_t best = pi.size();
    for (const auto& s : noncrossing(pi.size()))
        if (finer(s, pi))
            best = std::min(best, block_count(s) - block_count(pi));
    return best;
}

using CumulantFn = std::function<Rational(std::size_t)>;

inline Rational nc_sum(std::size_t n, const CumulantFn& r)
{
    Rational acc = 0;
    for (const auto& l : noncrossing(n)) {
        Rational p = 1;
        for (auto s : block_sizes(l))
            p *= r(s);
        acc += p;
    }
    return acc;
}

// phi(sum over index tuples with kernel exactly pi of X_{i_1}^{k_1} ... X_{i_n}^{k_n})
// where X_1..X_N are free with cumulants r_m / N: every tuple is enumerated and
// each word moment is summed over NC partitions below its kernel.
inline Rational finite_n(const Labels& pi, const std::vector<int>& k, const CumulantFn& r, unsigned big_n)
{
    const std::size_t n = pi.size();
    std::size_t len = 0;
    for (int x : k)
        len += static_cast<std::size_t>(x);
    const auto nc_len = noncrossing(len);
    Rational acc = 0;
    std::vector<unsigned> idx(n, 0);
    while (true) {
        Labels ker(n);
        std::map<unsigned, int> seen;
        for (std::size_t i = 0; i < n; ++i) {
            auto it = seen.emplace(idx[i], static_cast<int>(seen.size())).first;
            ker[i] = it->second;
        }
        if (ker == pi) {
            std::vector<unsigned> word;
            for (std::size_t i = 0; i < n; ++i)
                for (int j = 0; j < k[i]; ++j)
                    word.push_back(idx[i]);
            Labels wker(len);
            for (std::size_t i = 0; i < len; ++i)
                wker[i] = static_cast<int>(word[i]);
            for (const auto& s : nc_len) {
                if (!finer(s, wker))
                    continue;
                Rational p = 1;
                for (auto sz : block_sizes(s))
                    p *= r(sz) / big_n;
                acc += p;
            }
        }
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] == big_n)
            idx[pos++] = 0;
        if (pos == n)
            break;
    }
    return acc;
}

} // namespace oracle
