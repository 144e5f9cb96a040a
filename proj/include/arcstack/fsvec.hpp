#pragma once

#include "arcstack/rat.hpp"

#include <map>
#include <vector>

namespace arcstack {

using Index = unsigned long;

// Finitely supported map Index -> Q; only nonzero entries are stored.
class FinSuppVec {
public:
    FinSuppVec() = default;

    static FinSuppVec unit(Index mu, const Rat& v = Rat(1)) {
        FinSuppVec f;
        f.set(mu, v);
        return f;
    }

    void set(Index mu, const Rat& v) {
        if (sgn(v) == 0)
            entries_.erase(mu);
        else
            entries_[mu] = v;
    }

    Rat at(Index mu) const {
        auto it = entries_.find(mu);
        return it == entries_.end() ? Rat(0) : it->second;
    }

    bool supported(Index mu) const { return entries_.count(mu) != 0; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    std::vector<Index> support() const {
        std::vector<Index> s;
        s.reserve(entries_.size());
        for (auto& [mu, v] : entries_) s.push_back(mu);
        return s;
    }

    const std::map<Index, Rat>& entries() const { return entries_; }

    FinSuppVec& add_scaled(const Rat& c, const FinSuppVec& o) {
        for (auto& [mu, v] : o.entries_) set(mu, at(mu) + c * v);
        return *this;
    }

    FinSuppVec operator+(const FinSuppVec& o) const {
        FinSuppVec r = *this;
        return r.add_scaled(Rat(1), o);
    }

    FinSuppVec operator-(const FinSuppVec& o) const {
        FinSuppVec r = *this;
        return r.add_scaled(Rat(-1), o);
    }

    FinSuppVec scaled(const Rat& c) const {
        FinSuppVec r;
        for (auto& [mu, v] : entries_) r.set(mu, c * v);
        return r;
    }

    bool operator==(const FinSuppVec& o) const { return entries_ == o.entries_; }

    bool integral() const {
        for (auto& [mu, v] : entries_)
            if (v.get_den() != 1) return false;
        return true;
    }

    // L1 norm: sum of |entries|
    Rat norm1() const {
        Rat n(0);
        for (auto& [mu, v] : entries_) n += rat_abs(v);
        return n;
    }

    // lcm of entry denominators (1 for the zero vector)
    Int denominator_lcm() const {
        Int l(1);
        for (auto& [mu, v] : entries_) l = int_lcm(l, v.get_den());
        return l;
    }

private:
    std::map<Index, Rat> entries_;
};

}  // namespace arcstack
