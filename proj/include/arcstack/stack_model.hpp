#pragma once

#include "arcstack/equations.hpp"
#include "arcstack/matq.hpp"
#include "arcstack/oracle.hpp"
#include "arcstack/seqspec.hpp"
#include "arcstack/sqrtval.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arcstack {

// Sampled sequence used inside stacks. Brick elements additionally remember
// their pre-scaling symbolic law: values(n) = (K_n / T) * core(n); family
// members of A have values(n) = core(n), members of C have core(n) / T.
struct StackSeq {
    std::string id;
    std::map<long, FinSuppVec> values;
    std::optional<SeqSpec> core;   // symbolic form, when built through the DSL
    std::optional<Path> zeta_path; // the coordinate path this element rides

    const FinSuppVec& at(long n) const;
};

// The nonuple <B, nu, zeta, K, A, k0, k1, l, T>.
struct RationalStack {
    Window A;
    unsigned k0 = 0, k1 = 0;
    std::vector<unsigned> l;                       // size k1
    std::vector<Index> nu;                         // size k0
    std::vector<std::map<long, Index>> zeta;       // size k1, sampled on A
    std::map<long, Int> K;                         // on A
    Int T = 1;
    std::vector<std::vector<std::vector<StackSeq>>> bricks;  // [i][j] -> elements

    Index zeta_at(unsigned i, long n) const;
    const Int& K_at(long n) const;
};

// A = G u {chi_nu_i}, C = bricks / K, and the exact integer change-of-basis
// matrices M (A x C) and N (C x A) with M * (N / T^2) = I.
struct StackBasisData {
    std::vector<StackSeq> fam_a;
    std::vector<StackSeq> fam_c;
    MatQ M;  // integral
    MatQ N;  // integral
    Int T = 1;

    Rat sum_abs_m() const;
};

enum class CondStatus { Pass, Fail, Unverified };

struct CondReport {
    std::string name;
    CondStatus status = CondStatus::Pass;
    std::string witness;
};

struct StackReport {
    std::vector<CondReport> conds;
    bool all_pass() const;          // no Fail, no Unverified
    bool no_failures() const;       // Unverified tolerated
    std::string summary() const;
};

// Exact finite-horizon validation of conditions i)-xi) plus the divisibility
// n! T | K_n. Limit conditions (v, vi, vii) are decided symbolically when the
// sequences carry DSL laws and reported UNVERIFIED-AT-HORIZON otherwise.
StackReport validate_stack(const RationalStack& s);

// Exact check of Lemma-level identities (2),(3): f(n) = sum_h M_{f,h} h(n)
// and h(n) = (1/T^2) sum_f N_{h,f} f(n) at every n in A, plus M*(N/T^2) = I.
CheckResult check_basis_identities(const RationalStack& s, const StackBasisData& b);

}  // namespace arcstack
