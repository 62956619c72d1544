#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcum/gamma_poly.hpp"
#include "gcum/ring.hpp"

namespace gcum::partitions {

using algebra::GammaPoly;
using algebra::Rational;

/// Set partition of {1..k} in canonical form: each block strictly
/// increasing, blocks ordered by their minima (so block 1 contains 1).
struct SetPartition {
    int k = 0;
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

/// Validates disjointness/coverage and sorts into canonical form.
inline SetPartition normalize(SetPartition pi) {
    std::vector<int> seen(static_cast<size_t>(pi.k) + 1, 0);
    for (auto& b : pi.blocks) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > pi.k) throw std::invalid_argument("SetPartition: element out of range");
            if (seen[static_cast<size_t>(x)]++) throw std::invalid_argument("SetPartition: repeated element");
        }
    }
    for (int x = 1; x <= pi.k; ++x)
        if (!seen[static_cast<size_t>(x)]) throw std::invalid_argument("SetPartition: element missing");
    std::sort(pi.blocks.begin(), pi.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return pi;
}

/// Parses the literal syntax "1 2 5 7 | 3 4 6".
inline SetPartition parse_partition(const std::string& text) {
    SetPartition pi;
    std::vector<int> cur;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "|") {
            pi.blocks.push_back(cur);
            cur.clear();
        } else {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("parse_partition: bad token '" + tok + "'");
            cur.push_back(v);
            pi.k = std::max(pi.k, v);
        }
    }
    pi.blocks.push_back(cur);
    return normalize(pi);
}

inline std::string to_string(const SetPartition& pi) {
    std::string s;
    for (size_t i = 0; i < pi.blocks.size(); ++i) {
        if (i) s += " | ";
        for (size_t j = 0; j < pi.blocks[i].size(); ++j) {
            if (j) s += " ";
            s += std::to_string(pi.blocks[i][j]);
        }
    }
    return s;
}

/// Streams every set partition of {1..k} exactly once, in canonical form,
/// via restricted growth strings (memory stays O(k) at Bell-number scale).
inline void enumerate_set_partitions(int k, const std::function<void(const SetPartition&)>& visit) {
    if (k < 1 || k > 12) throw std::invalid_argument("enumerate_set_partitions: k must be in 1..12");
    std::vector<int> rgs(static_cast<size_t>(k), 0);
    SetPartition pi;
    pi.k = k;
    auto emit = [&](int nblocks) {
        pi.blocks.assign(static_cast<size_t>(nblocks), {});
        for (int i = 0; i < k; ++i) pi.blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i + 1);
        visit(pi);
    };
    // rgs[i] = block index of element i+1; rgs[0]=0 and rgs[i] <= 1+max(prefix).
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == k) {
            emit(maxv + 1);
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[static_cast<size_t>(i)] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    rec(1, 0);
}

struct ArcStats {
    std::vector<int> p, q;
};

/// p(i) counts consecutive pairs of block i whose open gap meets an earlier
/// block; q(i) = |B_i| - 1 - p(i). Blocks are indexed by increasing minima,
/// so p(1) = 0 always.
inline ArcStats arc_stats(const SetPartition& pi) {
    ArcStats st;
    std::vector<char> earlier(static_cast<size_t>(pi.k) + 1, 0);
    for (const auto& block : pi.blocks) {
        int p = 0;
        for (size_t j = 0; j + 1 < block.size(); ++j) {
            bool met = false;
            for (int x = block[j] + 1; x < block[j + 1] && !met; ++x) met = earlier[static_cast<size_t>(x)];
            p += met;
        }
        st.p.push_back(p);
        st.q.push_back(static_cast<int>(block.size()) - 1 - p);
        for (int x : block) earlier[static_cast<size_t>(x)] = 1;
    }
    return st;
}

/// Product over blocks of p(i)! * (gamma_elt + p(i) + 1)_{q(i)} in a generic
/// ring containing the chosen value (or formal copy) of gamma.
template <algebra::Ring R>
R weight_W_in(const ArcStats& st, const R& gamma_elt) {
    R w(1);
    for (size_t i = 0; i < st.p.size(); ++i) {
        w *= R(algebra::factorial_ll(st.p[i]));
        w *= algebra::pochhammer(gamma_elt + R(st.p[i] + 1), st.q[i]);
    }
    return w;
}

inline GammaPoly weight_W(const SetPartition& pi) {
    return weight_W_in(arc_stats(pi), GammaPoly::gamma());
}

/// Refined weight: block 1 contributes (gamma+1)_{|B1|-1} * kappa_{|B1|},
/// every later block i contributes p(i)! (gamma+p(i)+1)_{q(i)} * a_{|B_i|}.
/// kappa and a are 1-based via kappa[l-1].
template <algebra::Ring R>
R refined_weight_w(const SetPartition& pi, const std::vector<R>& kappa, const std::vector<R>& a,
                   const R& gamma_elt) {
    ArcStats st = arc_stats(pi);
    R w(1);
    for (size_t i = 0; i < pi.blocks.size(); ++i) {
        size_t bs = pi.blocks[i].size();
        const std::vector<R>& seq = (i == 0) ? kappa : a;
        if (bs > seq.size())
            throw std::invalid_argument("refined_weight_w: sequence shorter than a block size");
        w *= R(algebra::factorial_ll(st.p[i]));
        w *= algebra::pochhammer(gamma_elt + R(st.p[i] + 1), st.q[i]);
        w *= seq[bs - 1];
    }
    return w;
}

/// Streams all perfect matchings of {1..k} (k even) in canonical form.
inline void enumerate_matchings(int k, const std::function<void(const SetPartition&)>& visit) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("enumerate_matchings: k must be even and >= 2");
    if (k > 16) throw std::invalid_argument("enumerate_matchings: k must be <= 16");
    std::vector<char> used(static_cast<size_t>(k) + 1, 0);
    SetPartition pi;
    pi.k = k;
    // Pairing the smallest free element first yields blocks already ordered
    // by minima.
    std::function<void()> rec = [&]() {
        int s = 1;
        while (s <= k && used[static_cast<size_t>(s)]) ++s;
        if (s > k) {
            visit(pi);
            return;
        }
        used[static_cast<size_t>(s)] = 1;
        for (int t = s + 1; t <= k; ++t) {
            if (used[static_cast<size_t>(t)]) continue;
            used[static_cast<size_t>(t)] = 1;
            pi.blocks.push_back({s, t});
            rec();
            pi.blocks.pop_back();
            used[static_cast<size_t>(t)] = 0;
        }
        used[static_cast<size_t>(s)] = 0;
    };
    rec();
}

/// Roof count of a perfect matching from its layered arc diagram: block j
/// (by increasing minima, m blocks total) has its roof at height m+1-j over
/// the span (s_j, t_j) and legs at s_j, t_j reaching from the ground up to
/// that roof. A roof is counted when no leg of another block crosses it.
inline int roof_count(const SetPartition& pi) {
    int m = pi.block_count();
    for (const auto& b : pi.blocks)
        if (b.size() != 2) throw std::invalid_argument("roof_count: not a perfect matching");
    int roofs = 0;
    for (int i = 0; i < m; ++i) {
        int si = pi.blocks[static_cast<size_t>(i)][0], ti = pi.blocks[static_cast<size_t>(i)][1];
        int hi = m - i;  // height m+1-j with j = i+1
        bool crossed = false;
        for (int j = 0; j < m && !crossed; ++j) {
            if (j == i) continue;
            int hj = m - j;
            if (hj < hi) continue;  // shorter legs pass under this roof
            for (int leg : pi.blocks[static_cast<size_t>(j)])
                if (si < leg && leg < ti) {
                    crossed = true;
                    break;
                }
        }
        roofs += !crossed;
    }
    return roofs;
}

/// True iff no two blocks interleave as x < y < z < w with x,z in one block
/// and y,w in the other. Two chains on a line cross exactly when their
/// merged order changes ownership at least three times.
inline bool is_noncrossing(const SetPartition& pi) {
    int n = pi.block_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto &A = pi.blocks[static_cast<size_t>(a)], &B = pi.blocks[static_cast<size_t>(b)];
            size_t ia = 0, ib = 0;
            int changes = 0, last = -1;
            while (ia < A.size() || ib < B.size()) {
                int tag;
                if (ib == B.size() || (ia < A.size() && A[ia] < B[ib])) {
                    tag = 0;
                    ++ia;
                } else {
                    tag = 1;
                    ++ib;
                }
                changes += (last != -1 && tag != last);
                last = tag;
            }
            if (changes >= 3) return false;
        }
    return true;
}

inline int descent_count(const std::vector<int>& bits) {
    int d = 0;
    for (size_t i = 0; i + 1 < bits.size(); ++i) d += (bits[i] == 1 && bits[i + 1] == 0);
    return d;
}

/// Sum of des(zeta)! * (gamma + des(zeta) + 1)_{M - des(zeta)} over all 0-1
/// sequences of length N with exactly M ones, by direct enumeration.
inline GammaPoly descent_sum(int N, int M) {
    if (N < 0 || M < 0 || M > N || N > 20)
        throw std::invalid_argument("descent_sum: need 0 <= M <= N <= 20");
    std::vector<int> bits(static_cast<size_t>(N), 0);
    std::fill(bits.end() - M, bits.end(), 1);
    std::sort(bits.begin(), bits.end());
    GammaPoly total;
    do {
        int d = descent_count(bits);
        GammaPoly term(Rational(algebra::factorial_ll(d)));
        term *= algebra::pochhammer(GammaPoly::gamma() + GammaPoly(d + 1), M - d);
        total += term;
    } while (std::next_permutation(bits.begin(), bits.end()));
    return total;
}

}  // namespace gcum::partitions
