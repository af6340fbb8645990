#pragma once

#include <map>
#include <optional>

#include "quiverlie/partitions.hpp"
#include "quiverlie/rational.hpp"

namespace quiverlie {

// Element of N = Q[x_theta]: a finite exact-rational combination of
// Kostant-partition monomials x^A.  Graded by deg x^A = -dim A; the empty
// partition is the unit monomial.  Zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(int n) : n_(n) { check_rank(n); }

    static Polynomial zero(int n) { return Polynomial(n); }

    static Polynomial monomial(const KostantPartition& a, Rat c = Rat(1)) {
        Polynomial p(a.n());
        if (c != 0) p.t_.emplace(a, std::move(c));
        return p;
    }

    static Polynomial one(int n) { return monomial(KostantPartition(n)); }

    // x_theta; the unit raiz gives the unit monomial.
    static Polynomial variable(const Raiz& theta) {
        return monomial(KostantPartition(theta.n()).with(theta));
    }

    int n() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<KostantPartition, Rat>& terms() const { return t_; }

    Rat coeff(const KostantPartition& a) const {
        auto it = t_.find(a);
        return it == t_.end() ? Rat(0) : it->second;
    }

    void add_term(const KostantPartition& a, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.emplace(a, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_rank(o);
        for (const auto& [a, c] : o.t_) add_term(a, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_rank(o);
        for (const auto& [a, c] : o.t_) add_term(a, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator*(const Rat& c) const {
        Polynomial p(n_);
        if (c == 0) return p;
        for (const auto& [a, x] : t_) p.t_.emplace(a, x * c);
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_rank(b);
        Polynomial p(a.n_);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                // multiset union of the two part lists
                std::vector<Raiz> parts = ma.parts();
                parts.insert(parts.end(), mb.parts().begin(), mb.parts().end());
                p.add_term(KostantPartition(a.n_, std::move(parts)), ca * cb);
            }
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // The common dimension vector of all monomials, if homogeneous.
    std::optional<DimensionVector> homogeneous_dim() const {
        std::optional<DimensionVector> d;
        for (const auto& [a, c] : t_) {
            DimensionVector ad = a.dim();
            if (!d)
                d = ad;
            else if (*d != ad)
                return std::nullopt;
        }
        return d;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [a, c] : t_) {
            if (!first) s += " + ";
            first = false;
            s += rat_str(c) + "*x^" + a.str();
        }
        return s;
    }

private:
    void require_same_rank(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("rank mismatch between polynomials");
    }

    int n_;
    std::map<KostantPartition, Rat> t_;
};

// d/dx_theta as a map on polynomials: d(x^A) = m(theta,A) x^{A \ theta}.
// d/dx_unit = 0.
inline Polynomial derivative(const Raiz& theta, const Polynomial& p) {
    Polynomial out(p.n());
    if (theta.is_unit()) return out;
    for (const auto& [a, c] : p.terms()) {
        long long m = a.mult(theta);
        if (m > 0) out.add_term(a.without(theta), c * rat_ll(m));
    }
    return out;
}

}  // namespace quiverlie
