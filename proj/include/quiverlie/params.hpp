#pragma once

#include <optional>
#include <vector>

#include "quiverlie/raiz.hpp"
#include "quiverlie/rational.hpp"

namespace quiverlie {

// The constants c_i of the module.  Either arbitrary exact rationals, or
// derived from geometry (genus g, normal-bundle degree d, line-bundle degrees
// deg L_0..deg L_{n-1} with deg L_{p+n} = deg L_p + d):
//   c_i = (2-2g) + deg L_{i+1} - deg L_i,   c0 = sum c_i = (2-2g) n + d.
struct Geometry {
    long long genus;
    long long d;
    std::vector<long long> degL;
};

class ModuleParams {
public:
    ModuleParams(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {
        check_rank(n);
        if (c_.size() != static_cast<size_t>(n))
            throw std::invalid_argument("need exactly n constants c_i");
    }

    static ModuleParams zeros(int n) { return ModuleParams(n, std::vector<Rat>(static_cast<size_t>(n), Rat(0))); }

    static ModuleParams from_geometry(int n, const Geometry& geom) {
        check_rank(n);
        if (geom.degL.size() != static_cast<size_t>(n))
            throw std::invalid_argument("need exactly n line bundle degrees");
        std::vector<Rat> c;
        for (int i = 0; i < n; ++i) {
            long long next =
                (i + 1 < n) ? geom.degL[static_cast<size_t>(i + 1)] : geom.degL[0] + geom.d;
            c.push_back(rat_ll(2 - 2 * geom.genus + next - geom.degL[static_cast<size_t>(i)]));
        }
        ModuleParams p(n, std::move(c));
        p.geom_ = geom;
        return p;
    }

    int n() const { return n_; }
    const Rat& c(const Residue& i) const { return c_[static_cast<size_t>(i.value())]; }
    const Rat& c(long long i) const { return c_[static_cast<size_t>(floor_mod(i, n_))]; }
    const std::vector<Rat>& all() const { return c_; }
    const std::optional<Geometry>& geometry() const { return geom_; }

    Rat c0() const {
        Rat s(0);
        for (const auto& x : c_) s += x;
        return s;
    }

private:
    int n_;
    std::vector<Rat> c_;
    std::optional<Geometry> geom_;
};

}  // namespace quiverlie
