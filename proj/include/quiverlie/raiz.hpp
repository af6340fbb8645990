#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quiverlie {

inline long long floor_mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

inline long long floor_div(long long x, long long m) {
    return (x >= 0) ? x / m : -((-x + m - 1) / m);
}

inline void check_rank(int n) {
    if (n < 2) throw std::invalid_argument("quiver rank must be at least 2");
}

// A vertex of the cyclic quiver with n vertices, i.e. an integer mod n.
class Residue {
public:
    Residue(int n, long long value) : n_(n) {
        check_rank(n);
        v_ = static_cast<int>(floor_mod(value, n));
    }

    int n() const { return n_; }
    int value() const { return v_; }

    Residue operator+(long long k) const { return Residue(n_, v_ + k); }
    Residue operator-(long long k) const { return Residue(n_, v_ - k); }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.n_ == b.n_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

private:
    int n_;
    int v_;
};

// Signed integer vector indexed by Z/nZ. Serves both as a dimension vector
// (nonnegative) and as a weight (signed).
class DimensionVector {
public:
    explicit DimensionVector(int n) : a_(static_cast<size_t>(n), 0) { check_rank(n); }

    static DimensionVector simple(const Residue& i) {
        DimensionVector d(i.n());
        d.a_[static_cast<size_t>(i.value())] = 1;
        return d;
    }

    // (...,1,1,1,...): one box at every vertex.
    static DimensionVector cycle(int n) {
        DimensionVector d(n);
        for (auto& x : d.a_) x = 1;
        return d;
    }

    int n() const { return static_cast<int>(a_.size()); }

    long long at(long long r) const { return a_[static_cast<size_t>(floor_mod(r, n()))]; }
    long long& at(long long r) { return a_[static_cast<size_t>(floor_mod(r, n()))]; }
    long long operator[](const Residue& i) const { return a_[static_cast<size_t>(i.value())]; }

    long long total() const {
        long long s = 0;
        for (auto x : a_) s += x;
        return s;
    }

    // The affine Cartan pairing <i', y> = 2y_i - y_{i-1} - y_{i+1}.
    // For n = 2 both neighbour terms hit the same entry, giving the
    // off-diagonal -2 of the affine Cartan matrix of type A~_1.
    long long cartan(const Residue& i) const {
        return 2 * at(i.value()) - at(i.value() - 1) - at(i.value() + 1);
    }

    bool nonnegative() const {
        for (auto x : a_)
            if (x < 0) return false;
        return true;
    }

    bool operator<=(const DimensionVector& o) const {
        require_same_rank(o);
        for (int r = 0; r < n(); ++r)
            if (a_[static_cast<size_t>(r)] > o.a_[static_cast<size_t>(r)]) return false;
        return true;
    }

    DimensionVector& operator+=(const DimensionVector& o) {
        require_same_rank(o);
        for (int r = 0; r < n(); ++r) a_[static_cast<size_t>(r)] += o.a_[static_cast<size_t>(r)];
        return *this;
    }
    DimensionVector& operator-=(const DimensionVector& o) {
        require_same_rank(o);
        for (int r = 0; r < n(); ++r) a_[static_cast<size_t>(r)] -= o.a_[static_cast<size_t>(r)];
        return *this;
    }
    friend DimensionVector operator+(DimensionVector a, const DimensionVector& b) { return a += b; }
    friend DimensionVector operator-(DimensionVector a, const DimensionVector& b) { return a -= b; }

    DimensionVector operator*(long long k) const {
        DimensionVector d = *this;
        for (auto& x : d.a_) x *= k;
        return d;
    }

    friend bool operator==(const DimensionVector& a, const DimensionVector& b) {
        return a.a_ == b.a_;
    }
    friend bool operator!=(const DimensionVector& a, const DimensionVector& b) {
        return !(a == b);
    }
    friend std::strong_ordering operator<=>(const DimensionVector& a, const DimensionVector& b) {
        if (auto c = a.a_.size() <=> b.a_.size(); c != 0) return c;
        for (size_t r = 0; r < a.a_.size(); ++r)
            if (auto c = a.a_[r] <=> b.a_[r]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    const std::vector<long long>& entries() const { return a_; }

    std::string str() const {
        std::string s = "(";
        for (int r = 0; r < n(); ++r) {
            if (r) s += ",";
            s += std::to_string(a_[static_cast<size_t>(r)]);
        }
        return s + ")";
    }

private:
    void require_same_rank(const DimensionVector& o) const {
        if (n() != o.n()) throw std::invalid_argument("rank mismatch between dimension vectors");
    }

    std::vector<long long> a_;
};

// An indecomposable nilpotent representation of the cyclic quiver, i.e. an
// interval (p,q) with p <= q taken modulo simultaneous shift by n.  Stored in
// the canonical normalization 0 <= q <= n-1.  A distinguished unit element is
// admitted: it is absorbed by smile/frown on either side, x_unit acts as 1 and
// d/dx_unit as 0 in the polynomial module.
class Raiz {
public:
    Raiz(int n, long long p, long long q) : n_(n) {
        check_rank(n);
        if (p > q) throw std::invalid_argument("raiz requires p <= q");
        // normalize q into [0, n-1]
        long long k = floor_div(q, n);
        p_ = p - k * n;
        q_ = q - k * n;
    }

    static Raiz unit(int n) {
        Raiz r(n);
        return r;
    }

    static Raiz simple(const Residue& i) { return Raiz(i.n(), i.value(), i.value()); }

    bool is_unit() const { return p_ > q_; }

    int n() const { return n_; }
    long long p() const { return p_; }
    long long q() const { return q_; }
    long long length() const { return is_unit() ? 0 : q_ - p_ + 1; }

    Residue begins_at() const {
        require_nonunit("begins_at");
        return Residue(n_, p_);
    }
    Residue ends_at() const {
        require_nonunit("ends_at");
        return Residue(n_, q_);
    }

    DimensionVector dim() const {
        DimensionVector d(n_);
        if (is_unit()) return d;
        // counts of residues in [p, q]
        long long len = length();
        long long full = len / n_, rest = len % n_;
        for (int r = 0; r < n_; ++r) d.at(r) = full;
        for (long long j = p_; j < p_ + rest; ++j) d.at(j) += 1;
        return d;
    }

    std::string str() const {
        if (is_unit()) return "unit";
        return std::to_string(p_) + ".." + std::to_string(q_);
    }

    friend bool operator==(const Raiz& a, const Raiz& b) {
        if (a.n_ != b.n_) return false;
        if (a.is_unit() || b.is_unit()) return a.is_unit() && b.is_unit();
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Raiz& a, const Raiz& b) { return !(a == b); }

    // Canonical order: unit first, then ends_at ascending, length descending.
    // (begins_at is determined by the other two.)
    friend std::strong_ordering operator<=>(const Raiz& a, const Raiz& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        bool ua = a.is_unit(), ub = b.is_unit();
        if (ua || ub) return (ub ? 1 : 0) <=> (ua ? 1 : 0);
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        return b.length() <=> a.length();
    }

private:
    explicit Raiz(int n) : n_(n), p_(1), q_(0) { check_rank(n); }

    void require_nonunit(const char* what) const {
        if (is_unit()) throw std::domain_error(std::string(what) + " undefined for the unit raiz");
    }

    int n_;
    long long p_, q_;
};

// theta in B_i: theta is the unit or begins at i.
inline bool in_B(const Raiz& theta, const Residue& i) {
    if (theta.n() != i.n()) throw std::invalid_argument("rank mismatch");
    return theta.is_unit() || theta.begins_at() == i;
}

// theta in E_i: theta is the unit or ends at i.
inline bool in_E(const Raiz& theta, const Residue& i) {
    if (theta.n() != i.n()) throw std::invalid_argument("rank mismatch");
    return theta.is_unit() || theta.ends_at() == i;
}

// eta = lower ~ upper: the extension 0 -> upper -> eta -> lower -> 0, defined
// when ends_at(lower) + 1 = begins_at(upper).  Unit on either side is neutral.
inline std::optional<Raiz> try_smile(const Raiz& lower, const Raiz& upper) {
    if (lower.n() != upper.n()) throw std::invalid_argument("rank mismatch");
    if (lower.is_unit()) return upper;
    if (upper.is_unit()) return lower;
    if (lower.ends_at() + 1 != upper.begins_at()) return std::nullopt;
    return Raiz(lower.n(), lower.p(), lower.q() + upper.length());
}

inline Raiz smile(const Raiz& lower, const Raiz& upper) {
    auto r = try_smile(lower, upper);
    if (!r)
        throw std::domain_error("smile undefined: " + lower.str() + " ~ " + upper.str());
    return *r;
}

// Removes the terminal segment theta from eta, the partial inverse of smile:
// frown(smile(a, b), b) = a.
inline std::optional<Raiz> try_frown(const Raiz& eta, const Raiz& theta) {
    if (eta.n() != theta.n()) throw std::invalid_argument("rank mismatch");
    if (theta.is_unit()) return eta;
    if (eta.is_unit()) return std::nullopt;
    if (!(eta.ends_at() == theta.ends_at()) || theta.length() > eta.length())
        return std::nullopt;
    if (theta.length() == eta.length()) return Raiz::unit(eta.n());
    return Raiz(eta.n(), eta.p(), eta.q() - theta.length());
}

inline Raiz frown(const Raiz& eta, const Raiz& theta) {
    auto r = try_frown(eta, theta);
    if (!r)
        throw std::domain_error("frown undefined: " + theta.str() + " is not a terminal segment of " + eta.str());
    return *r;
}

}  // namespace quiverlie
