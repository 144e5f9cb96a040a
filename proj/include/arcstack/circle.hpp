#pragma once

#include "arcstack/fsvec.hpp"
#include "arcstack/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace arcstack {

// Open arc of T = R/Z with rational endpoints; FULL is all of T. A non-full
// arc is the projection of (lo, hi) with lo in [0,1) and 0 < hi - lo <= 1.
class Arc {
public:
    Arc() : full_(true) {}
    static Arc full() { return Arc(); }
    static Arc interval(const Rat& lo, const Rat& hi);
    static Arc centered(const Rat& center, const Rat& length);

    bool is_full() const { return full_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat length() const { return full_ ? Rat(1) : hi_ - lo_; }
    Rat center() const;  // in [0,1); 0 for FULL

    bool contains_point(const Rat& x) const;
    bool closure_contains_point(const Rat& x) const;

    // this (open) subset of other (open)
    bool subset_of(const Arc& other) const;
    // closure(this) subset of other (open)
    bool closure_subset_of(const Arc& other) const;
    // closure(this) and closure(other) disjoint
    bool closure_disjoint(const Arc& other) const;

    bool operator==(const Arc& o) const;

    std::string str() const;  // "lo=p/q hi=r/s" or "FULL"
    static std::optional<Arc> parse(const std::string& s);

private:
    bool full_;
    Rat lo_, hi_;
};

// Image of the arc under x |-> S*x; FULL once |S|*length >= 1. S != 0.
Arc int_scale(const Int& s, const Arc& a);

// Image under x |-> q*x for rational q != 0, acting on the canonical lift.
// Used internally by the pipeline's separation arithmetic.
Arc rat_scale(const Rat& q, const Arc& a);

// Minkowski sum of scaled arcs: center sum k_i c_i, length sum |k_i| l_i,
// FULL at length >= 1. Coefficients must be nonzero and the list nonempty.
Arc lin_comb(const std::vector<std::pair<Int, Arc>>& terms);

// Arc function: finitely supported Index -> Arc, defaulting to T. Stored arcs
// are never FULL.
class ArcFunction {
public:
    ArcFunction() = default;

    Arc at(Index xi) const {
        auto it = arcs_.find(xi);
        return it == arcs_.end() ? Arc::full() : it->second;
    }

    void set(Index xi, const Arc& a) {
        if (a.is_full())
            arcs_.erase(xi);
        else
            arcs_[xi] = a;
    }

    bool supported(Index xi) const { return arcs_.count(xi) != 0; }
    const std::map<Index, Arc>& arcs() const { return arcs_; }
    std::vector<Index> support() const;

    // All support arcs share this length (an epsilon-arc function)?
    bool uniform_length(const Rat& eps) const;

    bool operator==(const ArcFunction& o) const { return arcs_ == o.arcs_; }

private:
    std::map<Index, Arc> arcs_;
};

// psi <= phi: psi(xi) = phi(xi) or closure(psi(xi)) inside phi(xi), for all xi.
bool refines(const ArcFunction& psi, const ArcFunction& phi);

// Pointwise int_scale; entries that blow up to T are dropped.
ArcFunction scale_arcfn(const Int& s, const ArcFunction& phi);

}  // namespace arcstack
