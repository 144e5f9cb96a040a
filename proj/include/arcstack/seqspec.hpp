#pragma once

#include "arcstack/fsvec.hpp"
#include "arcstack/sqrtval.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace arcstack {

// Index path of a track: a fixed coordinate or an injective walk through a
// reserved block, zeta(n) = base + n*stride.
struct PathConst {
    Index idx;
    bool operator==(const PathConst&) const = default;
};
struct PathInjective {
    Index base;
    unsigned long stride;
    bool operator==(const PathInjective&) const = default;
};
using Path = std::variant<PathConst, PathInjective>;

inline Index path_at(const Path& p, long n) {
    if (auto* c = std::get_if<PathConst>(&p)) return c->idx;
    auto& i = std::get<PathInjective>(p);
    return i.base + static_cast<unsigned long>(n) * i.stride;
}

inline bool path_constant(const Path& p) { return std::holds_alternative<PathConst>(p); }

inline bool operator==(const Path& a, const Path& b) {
    if (a.index() != b.index()) return false;
    if (auto* c = std::get_if<PathConst>(&a)) return *c == std::get<PathConst>(b);
    return std::get<PathInjective>(a) == std::get<PathInjective>(b);
}

// n |-> round(alpha * beta^n * n^k) * q, with alpha in Q(sqrt(.)), beta > 0.
struct RoundLaw {
    SqrtVal alpha;
    Rat beta;
    unsigned k = 0;
    Rat q = Rat(1);
};

// n |-> c_0 + c_1 n + ... + c_d n^d
struct PolyLaw {
    std::vector<Rat> coeffs;
};

using ValueLaw = std::variant<RoundLaw, PolyLaw>;

Rat law_value(const ValueLaw& law, long n);

struct Track {
    Path path;
    ValueLaw law;
};

// Growth scale (beta, k) of a term ~ C * beta^n * n^k, ordered lexicographically.
struct GrowthScale {
    Rat beta;
    unsigned k = 0;
};
int compare_scales(const GrowthScale& a, const GrowthScale& b);

enum class LimitKind { Zero, Finite, PlusInf, MinusInf };

struct RatioLimit {
    LimitKind kind;
    SqrtVal value;  // set when kind == Finite
};

// Asymptotic shape of a track-sum along one path.
struct PathAsymptotics {
    std::optional<GrowthScale> dominant;  // strictly above constant scale, coeff != 0
    SqrtVal dominant_coeff;
    bool bounded_noise = false;  // O(1) rounding residue present
    Rat exact_constant = Rat(0); // value when no dominant term and no noise
    bool eventually_constant() const { return !dominant && !bounded_noise; }
};

// Finite sum of tracks; an element of G^omega in symbolic form. The DSL is
// closed under Q-linear combination, which is what the stack construction
// needs for the sigma subtractions.
class SeqSpec {
public:
    SeqSpec() = default;
    explicit SeqSpec(std::string name) : name_(std::move(name)) {}
    SeqSpec(std::string name, std::vector<Track> tracks);

    static SeqSpec indicator(const std::string& name, Index mu);  // chi_{->mu}
    static SeqSpec linear_combination(const std::string& name,
                                      const std::vector<std::pair<Rat, const SeqSpec*>>& parts);

    const std::string& name() const { return name_; }
    const std::vector<Track>& tracks() const { return tracks_; }
    bool identically_zero() const { return tracks_.empty(); }

    FinSuppVec eval(long n) const;
    Rat value_at(long n, Index mu) const;

    // Laws of tracks lying exactly on `path`. Tracks on other paths can meet
    // path(n) at most transiently and do not affect asymptotics.
    std::vector<ValueLaw> laws_on_path(const Path& path) const;
    PathAsymptotics asymptotics_on_path(const Path& path) const;

    // Distinct paths appearing among tracks.
    std::vector<Path> paths() const;

private:
    void push_merged(Track t);
    std::string name_;
    std::vector<Track> tracks_;
};

PathAsymptotics law_sum_asymptotics(const std::vector<ValueLaw>& laws);

// lim value_num / value_den along n -> infinity; Unsupported is signalled by
// std::nullopt (bounded non-convergent rounding residue, or denominator
// eventually zero).
std::optional<RatioLimit> ratio_limit(const PathAsymptotics& num, const PathAsymptotics& den);

}  // namespace arcstack
