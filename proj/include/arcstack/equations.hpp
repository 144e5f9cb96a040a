#pragma once

#include "arcstack/circle.hpp"
#include "arcstack/fsvec.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arcstack {

// One member of the equation family: an integer-vector sequence sampled on A.
struct SampledIntSeq {
    std::string id;
    std::map<long, FinSuppVec> values;  // n -> f(n), integer entries

    const FinSuppVec& at(long n) const;
};

// The quintuple (phi, A, fam, S, U): an n-solution psi satisfies
// S*psi <= phi and, for each f, sum over supp f(n) of f(n)(mu)*psi(mu) in U_f.
struct ArcEquation {
    ArcFunction phi;
    std::vector<long> A;
    std::vector<SampledIntSeq> fam;
    Int S = 1;
    std::vector<Arc> U;  // parallel to fam

    void validate() const;  // structural invariants
};

struct CheckResult {
    bool ok = true;
    std::string witness;  // first violated clause when !ok
    explicit operator bool() const { return ok; }
};

// Exact decision of the n-solution relation, with the first violated clause
// reported. The scaling clause compares closures (the <= order); the sum
// clause is plain open-in-open containment.
CheckResult check_solution(const ArcEquation& eq, long n, const ArcFunction& psi);

// Common length of all support arcs; nullopt means mixed. Empty support maps
// to 1 by convention (vacuously "any length").
std::optional<Rat> solution_length(const ArcFunction& psi);

}  // namespace arcstack
