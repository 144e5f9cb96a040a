#include "arcstack/circle.hpp"

#include <sstream>

namespace arcstack {

Arc Arc::interval(const Rat& lo, const Rat& hi) {
    if (!(hi > lo)) throw Unsupported("arc needs hi > lo");
    if (hi - lo > 1) return Arc::full();
    Arc a;
    a.full_ = false;
    Rat shift = Rat(rat_floor(lo));
    a.lo_ = lo - shift;
    a.hi_ = hi - shift;
    return a;
}

Arc Arc::centered(const Rat& center, const Rat& length) {
    if (sgn(length) <= 0) throw Unsupported("arc length must be positive");
    if (length >= 1) return Arc::full();
    return Arc::interval(center - length / 2, center + length / 2);
}

Rat Arc::center() const {
    if (full_) return Rat(0);
    return rat_frac((lo_ + hi_) / 2);
}

bool Arc::contains_point(const Rat& x) const {
    if (full_) return true;
    // some translate x + k lies in (lo, hi); k = ceil(lo - x) is the candidate
    Rat k = Rat(rat_ceil(lo_ - x));
    Rat t = x + k;
    if (t == lo_) t += 1;  // need strict
    return t < hi_;
}

bool Arc::closure_contains_point(const Rat& x) const {
    if (full_) return true;
    Rat k = Rat(rat_ceil(lo_ - x));
    Rat t = x + k;
    return t >= lo_ && t <= hi_;
}

namespace {

// subset test on lifts with k in {-1,0,1}; strict demands closure(a) in b.
bool lift_subset(const Rat& alo, const Rat& ahi, const Rat& blo, const Rat& bhi, bool strict) {
    for (int k = -1; k <= 1; ++k) {
        Rat lo = alo + k, hi = ahi + k;
        bool okl = strict ? (blo < lo) : (blo <= lo);
        bool okr = strict ? (hi < bhi) : (hi <= bhi);
        if (okl && okr) return true;
    }
    return false;
}

}  // namespace

bool Arc::subset_of(const Arc& other) const {
    if (other.full_) return true;
    if (full_) return false;
    return lift_subset(lo_, hi_, other.lo_, other.hi_, false);
}

bool Arc::closure_subset_of(const Arc& other) const {
    if (other.full_) return true;  // every closure sits inside T
    if (full_) return false;
    return lift_subset(lo_, hi_, other.lo_, other.hi_, true);
}

bool Arc::closure_disjoint(const Arc& other) const {
    if (full_ || other.full_) return false;
    // translates of [lo,hi] vs [olo,ohi]: overlap iff lo <= ohi+k and olo+k <= hi
    for (int k = -1; k <= 1; ++k) {
        if (lo_ <= other.hi_ + k && other.lo_ + k <= hi_) return false;
    }
    return true;
}

bool Arc::operator==(const Arc& o) const {
    if (full_ != o.full_) return false;
    if (full_) return true;
    return lo_ == o.lo_ && hi_ == o.hi_;
}

std::string Arc::str() const {
    if (full_) return "FULL";
    return "lo=" + rat_str(lo_) + " hi=" + rat_str(hi_);
}

std::optional<Arc> Arc::parse(const std::string& s) {
    if (s == "FULL") return Arc::full();
    auto lp = s.find("lo=");
    auto hp = s.find(" hi=");
    if (lp != 0 || hp == std::string::npos) return std::nullopt;
    auto lo = rat_parse(s.substr(3, hp - 3));
    auto hi = rat_parse(s.substr(hp + 4));
    if (!lo || !hi || !(*hi > *lo) || *hi - *lo > 1) return std::nullopt;
    return Arc::interval(*lo, *hi);
}

Arc int_scale(const Int& s, const Arc& a) {
    if (sgn(s) == 0) throw Unsupported("int_scale by 0 is degenerate");
    if (a.is_full()) return Arc::full();
    Rat len = Rat(int_abs(s)) * a.length();
    if (len >= 1) return Arc::full();
    return Arc::centered(Rat(s) * a.center(), len);
}

Arc rat_scale(const Rat& q, const Arc& a) {
    if (sgn(q) == 0) throw Unsupported("rat_scale by 0 is degenerate");
    if (a.is_full()) return Arc::full();
    Rat len = rat_abs(q) * a.length();
    if (len >= 1) return Arc::full();
    return Arc::centered(q * a.center(), len);
}

Arc lin_comb(const std::vector<std::pair<Int, Arc>>& terms) {
    if (terms.empty()) throw Unsupported("lin_comb needs at least one term");
    Rat center(0), len(0);
    for (auto& [k, a] : terms) {
        if (sgn(k) == 0) throw Unsupported("lin_comb coefficient 0");
        if (a.is_full()) return Arc::full();
        center += Rat(k) * a.center();
        len += Rat(int_abs(k)) * a.length();
    }
    if (len >= 1) return Arc::full();
    return Arc::centered(center, len);
}

std::vector<Index> ArcFunction::support() const {
    std::vector<Index> s;
    s.reserve(arcs_.size());
    for (auto& [xi, a] : arcs_) s.push_back(xi);
    return s;
}

bool ArcFunction::uniform_length(const Rat& eps) const {
    for (auto& [xi, a] : arcs_)
        if (a.length() != eps) return false;
    return true;
}

bool refines(const ArcFunction& psi, const ArcFunction& phi) {
    // where phi is full the condition is vacuous (closures always sit in T)
    for (auto& [xi, p] : phi.arcs()) {
        Arc q = psi.at(xi);
        if (!(q == p) && !q.closure_subset_of(p)) return false;
    }
    return true;
}

ArcFunction scale_arcfn(const Int& s, const ArcFunction& phi) {
    ArcFunction out;
    for (auto& [xi, a] : phi.arcs()) out.set(xi, int_scale(s, a));
    return out;
}

}  // namespace arcstack
