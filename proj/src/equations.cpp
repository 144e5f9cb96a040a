#include "arcstack/equations.hpp"

#include <algorithm>

namespace arcstack {

const FinSuppVec& SampledIntSeq::at(long n) const {
    auto it = values.find(n);
    if (it == values.end()) throw Unsupported("sequence '" + id + "' not sampled at n");
    return it->second;
}

void ArcEquation::validate() const {
    if (sgn(S) <= 0) throw Unsupported("arc equation needs S >= 1");
    if (U.size() != fam.size()) throw Unsupported("U must be defined on all of the family");
    if (!std::is_sorted(A.begin(), A.end())) throw Unsupported("A must be sorted");
    for (auto& f : fam)
        for (long n : A)
            if (!f.at(n).integral())
                throw Unsupported("family member '" + f.id + "' non-integral at a sample");
}

CheckResult check_solution(const ArcEquation& eq, long n, const ArcFunction& psi) {
    if (!std::binary_search(eq.A.begin(), eq.A.end(), n))
        throw Unsupported("check_solution: n not in A");

    if (!refines(scale_arcfn(eq.S, psi), eq.phi))
        return {false, "scaling clause: S*psi does not refine phi"};

    for (std::size_t i = 0; i < eq.fam.size(); ++i) {
        const FinSuppVec& fn = eq.fam[i].at(n);
        if (fn.is_zero()) {
            // empty sum is the zero point; containment means 0 in U_f
            if (!eq.U[i].contains_point(Rat(0)))
                return {false, "sum clause, " + eq.fam[i].id + ": empty support, 0 not in U"};
            continue;
        }
        std::vector<std::pair<Int, Arc>> terms;
        for (auto& [mu, c] : fn.entries()) {
            if (c.get_den() != 1)
                return {false, "sum clause, " + eq.fam[i].id + ": non-integer coefficient"};
            terms.emplace_back(c.get_num(), psi.at(mu));
        }
        if (!lin_comb(terms).subset_of(eq.U[i]))
            return {false, "sum clause, " + eq.fam[i].id};
    }
    return {true, ""};
}

std::optional<Rat> solution_length(const ArcFunction& psi) {
    if (psi.arcs().empty()) return Rat(1);
    Rat len = psi.arcs().begin()->second.length();
    for (auto& [xi, a] : psi.arcs())
        if (a.length() != len) return std::nullopt;
    return len;
}

}  // namespace arcstack
