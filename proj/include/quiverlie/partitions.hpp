#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "quiverlie/raiz.hpp"

namespace quiverlie {

// A multiset of non-unit raiz.  The empty multiset is the unique Kostant
// partition of 0.  Parts are kept in canonical order, so equality and the
// canonical order on partitions are plain lexicographic comparisons.
class KostantPartition {
public:
    explicit KostantPartition(int n) : n_(n) { check_rank(n); }

    KostantPartition(int n, std::vector<Raiz> parts) : n_(n), parts_(std::move(parts)) {
        check_rank(n);
        for (const auto& t : parts_) {
            if (t.n() != n_) throw std::invalid_argument("rank mismatch in partition part");
            if (t.is_unit()) throw std::invalid_argument("unit raiz cannot be a partition part");
        }
        std::sort(parts_.begin(), parts_.end());
    }

    int n() const { return n_; }
    bool empty() const { return parts_.empty(); }

    // sK: number of parts counted with multiplicity.
    long long kcount() const { return static_cast<long long>(parts_.size()); }

    DimensionVector dim() const {
        DimensionVector d(n_);
        for (const auto& t : parts_) d += t.dim();
        return d;
    }

    long long mult(const Raiz& theta) const {
        return static_cast<long long>(std::count(parts_.begin(), parts_.end(), theta));
    }

    const std::vector<Raiz>& parts() const { return parts_; }

    // (part, multiplicity) pairs in canonical order.
    std::vector<std::pair<Raiz, long long>> distinct() const {
        std::vector<std::pair<Raiz, long long>> out;
        for (size_t i = 0; i < parts_.size();) {
            size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            out.emplace_back(parts_[i], static_cast<long long>(j - i));
            i = j;
        }
        return out;
    }

    KostantPartition with(const Raiz& theta) const {
        if (theta.is_unit()) return *this;
        KostantPartition r = *this;
        r.parts_.insert(std::upper_bound(r.parts_.begin(), r.parts_.end(), theta), theta);
        return r;
    }

    KostantPartition without(const Raiz& theta) const {
        if (theta.is_unit()) return *this;
        KostantPartition r = *this;
        auto it = std::find(r.parts_.begin(), r.parts_.end(), theta);
        if (it == r.parts_.end())
            throw std::domain_error("part " + theta.str() + " not present in partition");
        r.parts_.erase(it);
        return r;
    }

    // Replace one copy of old_part by new_part; a unit new_part is dropped.
    KostantPartition replaced(const Raiz& old_part, const Raiz& new_part) const {
        return without(old_part).with(new_part);
    }

    std::string str() const {
        std::string s = "{";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += parts_[i].str();
        }
        return s + "}";
    }

    friend bool operator==(const KostantPartition& a, const KostantPartition& b) {
        return a.n_ == b.n_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const KostantPartition& a, const KostantPartition& b) {
        return !(a == b);
    }
    friend std::strong_ordering operator<=>(const KostantPartition& a,
                                            const KostantPartition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

private:
    int n_;
    std::vector<Raiz> parts_;
};

// A multiset of nonempty Kostant partitions (the local data at distinct
// points of the curve).
class Multipartition {
public:
    explicit Multipartition(int n) : n_(n) { check_rank(n); }

    Multipartition(int n, std::vector<KostantPartition> groups)
        : n_(n), groups_(std::move(groups)) {
        check_rank(n);
        for (const auto& g : groups_) {
            if (g.n() != n_) throw std::invalid_argument("rank mismatch in multipartition group");
            if (g.empty()) throw std::invalid_argument("multipartition groups must be nonempty");
        }
        std::sort(groups_.begin(), groups_.end());
    }

    int n() const { return n_; }
    const std::vector<KostantPartition>& groups() const { return groups_; }

    DimensionVector dim() const {
        DimensionVector d(n_);
        for (const auto& g : groups_) d += g.dim();
        return d;
    }

    bool simple() const {
        for (const auto& g : groups_)
            if (g.kcount() != 1) return false;
        return true;
    }

    std::string str() const {
        std::string s = "<";
        for (size_t i = 0; i < groups_.size(); ++i) {
            if (i) s += ",";
            s += groups_[i].str();
        }
        return s + ">";
    }

    friend bool operator==(const Multipartition& a, const Multipartition& b) {
        return a.n_ == b.n_ && a.groups_ == b.groups_;
    }
    friend std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.groups_.begin(), a.groups_.end(),
                                                      b.groups_.begin(), b.groups_.end());
    }

private:
    int n_;
    std::vector<KostantPartition> groups_;
};

// All raiz theta with dim(theta) <= box componentwise, in canonical order.
inline std::vector<Raiz> raiz_within(const DimensionVector& box) {
    std::vector<Raiz> out;
    int n = box.n();
    long long maxlen = box.total();
    for (int end = 0; end < n; ++end)
        for (long long len = 1; len <= maxlen; ++len) {
            Raiz t(n, end - len + 1, end);
            if (t.dim() <= box) out.push_back(t);
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline void kostant_rec(const std::vector<Raiz>& raiz, size_t idx, DimensionVector& rem,
                        std::vector<Raiz>& acc, std::vector<KostantPartition>& out) {
    if (rem.total() == 0) {
        out.emplace_back(rem.n(), acc);
        return;
    }
    if (idx == raiz.size()) return;
    const Raiz& t = raiz[idx];
    DimensionVector d = t.dim();
    // multiplicity 0 first, then as many copies as fit
    kostant_rec(raiz, idx + 1, rem, acc, out);
    long long m = 0;
    while (true) {
        rem -= d;
        if (!rem.nonnegative()) {
            rem += d;
            break;
        }
        ++m;
        acc.push_back(t);
        kostant_rec(raiz, idx + 1, rem, acc, out);
    }
    for (long long j = 0; j < m; ++j) {
        acc.pop_back();
        rem += d;
    }
}

}  // namespace detail

// All Kostant partitions of alpha, in the canonical deterministic order.
inline std::vector<KostantPartition> enumerate_kostant(const DimensionVector& alpha) {
    if (!alpha.nonnegative())
        throw std::invalid_argument("enumerate_kostant requires a nonnegative dimension vector");
    std::vector<Raiz> raiz = raiz_within(alpha);
    std::vector<KostantPartition> out;
    DimensionVector rem = alpha;
    std::vector<Raiz> acc;
    detail::kostant_rec(raiz, 0, rem, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

// All Kostant partitions A with dim(A) <= box componentwise (any total),
// in canonical order.  Used for box-bounded monomial bases.
inline std::vector<KostantPartition> enumerate_kostant_within(const DimensionVector& box) {
    if (!box.nonnegative())
        throw std::invalid_argument("enumerate_kostant_within requires a nonnegative box");
    std::vector<Raiz> raiz = raiz_within(box);
    std::vector<KostantPartition> out;
    std::vector<Raiz> acc;
    DimensionVector used(box.n());

    // depth-first over multiplicities, collecting every intermediate multiset
    struct Rec {
        const std::vector<Raiz>& raiz;
        const DimensionVector& box;
        std::vector<KostantPartition>& out;
        void go(size_t idx, DimensionVector& used, std::vector<Raiz>& acc) {
            if (idx == raiz.size()) {
                out.emplace_back(box.n(), acc);
                return;
            }
            go(idx + 1, used, acc);
            const Raiz& t = raiz[idx];
            DimensionVector d = t.dim();
            long long m = 0;
            while (true) {
                used += d;
                if (!(used <= box)) {
                    used -= d;
                    break;
                }
                ++m;
                acc.push_back(t);
                go(idx + 1, used, acc);
            }
            for (long long j = 0; j < m; ++j) {
                acc.pop_back();
                used -= d;
            }
        }
    } rec{raiz, box, out};
    rec.go(0, used, acc);
    std::sort(out.begin(), out.end());
    return out;
}

// Every lattice point 0 <= alpha <= box, sorted.
inline std::vector<DimensionVector> box_lattice(const DimensionVector& box) {
    int n = box.n();
    std::vector<DimensionVector> lattice;
    DimensionVector cur(n);
    while (true) {
        lattice.push_back(cur);
        int r = 0;
        while (r < n) {
            if (cur.at(r) < box.at(r)) {
                cur.at(r) += 1;
                for (int s = 0; s < r; ++s) cur.at(s) = 0;
                break;
            }
            ++r;
        }
        if (r == n) break;
    }
    std::sort(lattice.begin(), lattice.end());
    return lattice;
}

// Counts |FK(alpha)| for every alpha <= box by truncated multiplication of the
// Euler product prod_theta (1 - x^{dim theta})^{-1}.  This never enumerates a
// partition, so it serves as the counting cross-check for enumerate_kostant.
inline std::map<DimensionVector, long long> kostant_count_table(const DimensionVector& box) {
    std::vector<Raiz> raiz = raiz_within(box);
    std::vector<DimensionVector> lattice = box_lattice(box);
    std::map<DimensionVector, long long> cnt;
    for (const auto& a : lattice) cnt[a] = 0;
    cnt[DimensionVector(box.n())] = 1;
    // one knapsack pass per factor of the product
    for (const auto& t : raiz) {
        DimensionVector d = t.dim();
        for (const auto& a : lattice) {
            DimensionVector prev = a - d;
            if (!prev.nonnegative()) continue;
            cnt[a] += cnt[prev];
        }
    }
    return cnt;
}

// All multipartitions of alpha, in canonical order.
inline std::vector<Multipartition> enumerate_multipartitions(const DimensionVector& alpha) {
    if (!alpha.nonnegative())
        throw std::invalid_argument("enumerate_multipartitions requires nonnegative alpha");
    // candidate groups: nonempty Kostant partitions with dim <= alpha
    std::vector<KostantPartition> cand = enumerate_kostant_within(alpha);
    std::erase_if(cand, [](const KostantPartition& k) { return k.empty(); });

    std::vector<Multipartition> out;
    std::vector<KostantPartition> acc;
    struct Rec {
        const std::vector<KostantPartition>& cand;
        const DimensionVector& alpha;
        std::vector<Multipartition>& out;
        void go(size_t idx, DimensionVector& rem, std::vector<KostantPartition>& acc) {
            if (rem.total() == 0) {
                out.emplace_back(alpha.n(), acc);
                return;
            }
            if (idx == cand.size()) return;
            go(idx + 1, rem, acc);
            const KostantPartition& g = cand[idx];
            DimensionVector d = g.dim();
            long long m = 0;
            while (true) {
                rem -= d;
                if (!rem.nonnegative()) {
                    rem += d;
                    break;
                }
                ++m;
                acc.push_back(g);
                go(idx + 1, rem, acc);
            }
            for (long long j = 0; j < m; ++j) {
                acc.pop_back();
                rem += d;
            }
        }
    } rec{cand, alpha, out};
    DimensionVector rem = alpha;
    rec.go(0, rem, acc);
    std::sort(out.begin(), out.end());
    return out;
}

// Degree |S_Gamma~| / |S_mu~| of the covering C^alpha_mu -> C^alpha_Gamma,
// where Gamma = |mu| is the underlying usual partition.
inline long long covering_degree(const Multipartition& mu) {
    auto factorial = [](long long m) {
        long long f = 1;
        for (long long j = 2; j <= m; ++j) f *= j;
        return f;
    };
    std::map<DimensionVector, long long> by_dim;
    std::map<KostantPartition, long long> by_group;
    for (const auto& g : mu.groups()) {
        by_dim[g.dim()] += 1;
        by_group[g] += 1;
    }
    long long num = 1, den = 1;
    for (const auto& [d, m] : by_dim) num *= factorial(m);
    for (const auto& [g, m] : by_group) den *= factorial(m);
    return num / den;  // S_mu~ is a subgroup of S_Gamma~, so this is exact
}

// Coordinates kappa_p^q of a Kostant partition with every part renormalized
// so its endpoint lies in [s, s+n-1], plus the cumulative sums
// kappa_{<=p}^{>=q} used throughout the dimension formulas.
class KappaCoords {
public:
    KappaCoords(const KostantPartition& kappa, long long s) : n_(kappa.n()), s_(s) {
        for (const auto& [t, m] : kappa.distinct()) {
            // shift by the multiple of n taking q into [s, s+n-1]
            long long q = t.q();
            long long j = floor_div(s - q + n_ - 1, n_);
            coord_[{t.p() + j * n_, q + j * n_}] += m;
        }
    }

    int n() const { return n_; }
    long long s() const { return s_; }
    const std::map<std::pair<long long, long long>, long long>& coords() const { return coord_; }

    long long at(long long p, long long q) const {
        auto it = coord_.find({p, q});
        return it == coord_.end() ? 0 : it->second;
    }

    // kappa_{<=p}^{>=q}
    long long cum(long long p, long long q) const {
        long long total = 0;
        for (const auto& [pq, m] : coord_)
            if (pq.first <= p && pq.second >= q) total += m;
        return total;
    }

    long long min_p() const {
        long long m = s_;
        for (const auto& [pq, mult] : coord_) {
            (void)mult;
            m = std::min(m, pq.first);
        }
        return m;
    }

private:
    int n_;
    long long s_;
    std::map<std::pair<long long, long long>, long long> coord_;
};

inline KappaCoords kappa_coords(const KostantPartition& kappa, long long s) {
    return KappaCoords(kappa, s);
}

}  // namespace quiverlie
