#include "arcstack/stack_model.hpp"

#include <set>
#include <sstream>

namespace arcstack {

const FinSuppVec& StackSeq::at(long n) const {
    auto it = values.find(n);
    if (it == values.end()) throw Unsupported("StackSeq '" + id + "' unsampled at n");
    return it->second;
}

Index RationalStack::zeta_at(unsigned i, long n) const {
    auto it = zeta.at(i).find(n);
    if (it == zeta.at(i).end()) throw Unsupported("zeta unsampled at n");
    return it->second;
}

const Int& RationalStack::K_at(long n) const {
    auto it = K.find(n);
    if (it == K.end()) throw Unsupported("K unsampled at n");
    return it->second;
}

Rat StackBasisData::sum_abs_m() const {
    Rat s(0);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) s += rat_abs(M.at(i, j));
    return s;
}

bool StackReport::all_pass() const {
    for (auto& c : conds)
        if (c.status != CondStatus::Pass) return false;
    return true;
}

bool StackReport::no_failures() const {
    for (auto& c : conds)
        if (c.status == CondStatus::Fail) return false;
    return true;
}

std::string StackReport::summary() const {
    std::ostringstream os;
    for (auto& c : conds) {
        os << c.name << ": "
           << (c.status == CondStatus::Pass
                   ? "pass"
                   : (c.status == CondStatus::Fail ? "FAIL" : "UNVERIFIED-AT-HORIZON"));
        if (!c.witness.empty()) os << " (" << c.witness << ")";
        os << "\n";
    }
    return os.str();
}

namespace {

std::string at_ij(unsigned i, unsigned j, const std::string& id) {
    std::ostringstream os;
    os << "brick (" << i << "," << j << ") element " << id;
    return os.str();
}

// limit of core(n) along its zeta path, as required by condition v)
CondStatus limit_exists(const StackSeq& h, std::string* why) {
    if (!h.core || !h.zeta_path) {
        *why = "no symbolic law";
        return CondStatus::Unverified;
    }
    auto asym = h.core->asymptotics_on_path(*h.zeta_path);
    if (asym.dominant || asym.eventually_constant()) return CondStatus::Pass;
    *why = "bounded rounding residue, no symbolic limit";
    return CondStatus::Unverified;
}

// lim h/h' along the shared path; nullopt when not symbolically available
std::optional<RatioLimit> core_ratio(const StackSeq& h, const StackSeq& hp) {
    if (!h.core || !hp.core || !h.zeta_path || !hp.zeta_path) return std::nullopt;
    if (!(*h.zeta_path == *hp.zeta_path)) return std::nullopt;
    return ratio_limit(h.core->asymptotics_on_path(*h.zeta_path),
                       hp.core->asymptotics_on_path(*hp.zeta_path));
}

}  // namespace

StackReport validate_stack(const RationalStack& s) {
    StackReport rep;
    auto add = [&](const std::string& name, CondStatus st, const std::string& wit = "") {
        rep.conds.push_back({name, st, wit});
    };

    // structural sanity first; a malformed stack fails fast
    if (s.k1 == 0 || s.k0 > s.k1 || s.l.size() != s.k1 || s.nu.size() != s.k0 ||
        s.zeta.size() != s.k1 || s.bricks.size() != s.k1) {
        add("structure", CondStatus::Fail, "shape of the nonuple is inconsistent");
        return rep;
    }
    for (unsigned i = 0; i < s.k1; ++i) {
        if (s.l[i] == 0 || s.bricks[i].size() != s.l[i]) {
            add("structure", CondStatus::Fail, "l_i and brick layers disagree");
            return rep;
        }
        for (unsigned j = 0; j < s.l[i]; ++j)
            if (s.bricks[i][j].empty()) {
                add("structure", CondStatus::Fail, at_ij(i, j, "<empty>"));
                return rep;
            }
    }
    add("structure", CondStatus::Pass);

    // K: A -> omega \ 2 with n! T | K_n
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (long n : s.A) {
            const Int& kn = s.K_at(n);
            if (kn < 2) {
                st = CondStatus::Fail;
                wit = "K_" + std::to_string(n) + " < 2";
                break;
            }
            if (!divides(factorial(static_cast<unsigned long>(n)) * s.T, kn)) {
                st = CondStatus::Fail;
                wit = "n!T does not divide K_n at n=" + std::to_string(n);
                break;
            }
        }
        add("divisibility n!T | K_n", st, wit);
    }

    // i) zeta_i constant nu_i below k0
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (unsigned i = 0; i < s.k0 && st == CondStatus::Pass; ++i)
            for (long n : s.A)
                if (s.zeta_at(i, n) != s.nu[i]) {
                    st = CondStatus::Fail;
                    wit = "zeta_" + std::to_string(i) + "(" + std::to_string(n) + ") != nu_i";
                    break;
                }
        add("i) zeta_i = nu_i for i < k0", st, wit);
    }

    // ii) pairwise distinct coordinates
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        std::set<Index> seen;
        for (unsigned i = 0; i < s.k0; ++i)
            if (!seen.insert(s.nu[i]).second) {
                st = CondStatus::Fail;
                wit = "nu repeated";
            }
        for (unsigned i = s.k0; i < s.k1 && st == CondStatus::Pass; ++i)
            for (long n : s.A)
                if (!seen.insert(s.zeta_at(i, n)).second) {
                    st = CondStatus::Fail;
                    wit = "zeta_" + std::to_string(i) + "(" + std::to_string(n) + ") collides";
                    break;
                }
        add("ii) nu_i, zeta_j(n) pairwise distinct", st, wit);
    }

    // iii) zeta_i(n) in supp h(n)
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (unsigned i = 0; i < s.k1 && st == CondStatus::Pass; ++i)
            for (unsigned j = 0; j < s.l[i] && st == CondStatus::Pass; ++j)
                for (auto& h : s.bricks[i][j]) {
                    for (long n : s.A)
                        if (!h.at(n).supported(s.zeta_at(i, n))) {
                            st = CondStatus::Fail;
                            wit = at_ij(i, j, h.id) + " misses zeta at n=" + std::to_string(n);
                            break;
                        }
                    if (st == CondStatus::Fail) break;
                }
        add("iii) zeta_i(n) in supp h(n)", st, wit);
    }

    // iv) lower-level paths avoid higher bricks
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (unsigned i = 0; i < s.k1 && st == CondStatus::Pass; ++i)
            for (unsigned istar = i + 1; istar < s.k1 && st == CondStatus::Pass; ++istar)
                for (unsigned j = 0; j < s.l[istar] && st == CondStatus::Pass; ++j)
                    for (auto& h : s.bricks[istar][j]) {
                        for (long n : s.A)
                            if (h.at(n).supported(s.zeta_at(i, n))) {
                                st = CondStatus::Fail;
                                wit = at_ij(istar, j, h.id) + " touches zeta_" +
                                      std::to_string(i) + " at n=" + std::to_string(n);
                                break;
                            }
                        if (st == CondStatus::Fail) break;
                    }
        add("iv) zeta_i(n) not in supp of higher bricks", st, wit);
    }

    // v) h(n)(zeta)/K_n monotone with a limit
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (unsigned i = 0; i < s.k1 && st != CondStatus::Fail; ++i)
            for (unsigned j = 0; j < s.l[i] && st != CondStatus::Fail; ++j)
                for (auto& h : s.bricks[i][j]) {
                    Rat prev;
                    bool have_prev = false;
                    int dir = 0;  // 0 unknown, +1 nondecreasing, -1 nonincreasing
                    for (long n : s.A) {
                        Rat v = h.at(n).at(s.zeta_at(i, n)) / Rat(s.K_at(n));
                        if (have_prev) {
                            int c = v > prev ? 1 : (v < prev ? -1 : 0);
                            if (c != 0 && dir != 0 && c != dir) {
                                st = CondStatus::Fail;
                                wit = at_ij(i, j, h.id) + " not monotone at n=" +
                                      std::to_string(n);
                                break;
                            }
                            if (c != 0) dir = c;
                        }
                        prev = v;
                        have_prev = true;
                    }
                    if (st == CondStatus::Fail) break;
                    std::string why;
                    CondStatus lim = limit_exists(h, &why);
                    if (lim == CondStatus::Unverified && st == CondStatus::Pass) {
                        st = CondStatus::Unverified;
                        wit = at_ij(i, j, h.id) + ": " + why;
                    }
                }
        add("v) h(n)(zeta)/K_n converges monotonically", st, wit);
    }

    // vi) ratio limits against a reference element form an independent tuple
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (unsigned i = 0; i < s.k1 && st != CondStatus::Fail; ++i)
            for (unsigned j = 0; j < s.l[i] && st != CondStatus::Fail; ++j) {
                auto& brick = s.bricks[i][j];
                // reference: magnitude-maximal element (valid by condition x)
                std::size_t ref = 0;
                long n0 = s.A.front();
                for (std::size_t t = 1; t < brick.size(); ++t)
                    if (rat_abs(brick[t].at(n0).at(s.zeta_at(i, n0))) >
                        rat_abs(brick[ref].at(n0).at(s.zeta_at(i, n0))))
                        ref = t;
                std::vector<SqrtVal> theta;
                bool symbolic = true;
                for (auto& h : brick) {
                    auto rl = core_ratio(h, brick[ref]);
                    if (!rl) {
                        symbolic = false;
                        break;
                    }
                    if (rl->kind != LimitKind::Finite) {
                        st = CondStatus::Fail;
                        wit = at_ij(i, j, h.id) + " ratio limit not finite";
                        break;
                    }
                    theta.push_back(rl->value);
                }
                if (st == CondStatus::Fail) break;
                if (!symbolic) {
                    st = CondStatus::Unverified;
                    wit = at_ij(i, j, brick[ref].id) + ": limits not symbolically available";
                    continue;
                }
                if (!rationally_independent(theta)) {
                    st = CondStatus::Fail;
                    wit = at_ij(i, j, brick[ref].id) + " theta tuple dependent";
                }
            }
        add("vi) theta tuple exists and is Q-independent", st, wit);
    }

    // vii) cross-layer ratios decay monotonically to 0
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (unsigned i = 0; i < s.k1 && st != CondStatus::Fail; ++i)
            for (unsigned jp = 0; jp < s.l[i] && st != CondStatus::Fail; ++jp)
                for (unsigned j = jp + 1; j < s.l[i] && st != CondStatus::Fail; ++j)
                    for (auto& h : s.bricks[i][j]) {
                        for (auto& hp : s.bricks[i][jp]) {
                            Rat prev;
                            bool have_prev = false;
                            for (long n : s.A) {
                                Index z = s.zeta_at(i, n);
                                Rat ratio = rat_abs(h.at(n).at(z) / hp.at(n).at(z));
                                if (have_prev && ratio > prev) {
                                    st = CondStatus::Fail;
                                    wit = at_ij(i, j, h.id) + " / " + hp.id +
                                          " |ratio| grows at n=" + std::to_string(n);
                                    break;
                                }
                                prev = ratio;
                                have_prev = true;
                            }
                            if (st == CondStatus::Fail) break;
                            auto rl = core_ratio(h, hp);
                            if (!rl) {
                                if (st == CondStatus::Pass) {
                                    st = CondStatus::Unverified;
                                    wit = at_ij(i, j, h.id) + ": limit not symbolic";
                                }
                            } else if (rl->kind != LimitKind::Zero) {
                                st = CondStatus::Fail;
                                wit = at_ij(i, j, h.id) + " / " + hp.id + " limit not 0";
                                break;
                            }
                        }
                        if (st == CondStatus::Fail) break;
                    }
        add("vii) cross-layer ratios -> 0 monotonically", st, wit);
    }

    // viii) (K/T) chi_nu_i sits in some brick of level i < k0
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (unsigned i = 0; i < s.k0; ++i) {
            bool found = false;
            for (unsigned j = 0; j < s.l[i] && !found; ++j)
                for (auto& h : s.bricks[i][j]) {
                    bool match = true;
                    for (long n : s.A) {
                        FinSuppVec want = FinSuppVec::unit(s.nu[i], Rat(s.K_at(n)) / Rat(s.T));
                        if (!(h.at(n) == want)) {
                            match = false;
                            break;
                        }
                    }
                    if (match) {
                        found = true;
                        break;
                    }
                }
            if (!found) {
                st = CondStatus::Fail;
                wit = "no (K/T)chi brick at level " + std::to_string(i);
                break;
            }
        }
        add("viii) (K/T)chi_nu_i in a level-i brick", st, wit);
    }

    // ix) |h(n)(zeta)| strictly increasing
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (unsigned i = 0; i < s.k1 && st == CondStatus::Pass; ++i)
            for (unsigned j = 0; j < s.l[i] && st == CondStatus::Pass; ++j)
                for (auto& h : s.bricks[i][j]) {
                    Rat prev;
                    bool have_prev = false;
                    for (long n : s.A) {
                        Rat v = rat_abs(h.at(n).at(s.zeta_at(i, n)));
                        if (have_prev && !(v > prev)) {
                            st = CondStatus::Fail;
                            wit = at_ij(i, j, h.id) + " not strictly increasing at n=" +
                                  std::to_string(n);
                            break;
                        }
                        prev = v;
                        have_prev = true;
                    }
                    if (st == CondStatus::Fail) break;
                }
        add("ix) |h(n)(zeta)| strictly increasing", st, wit);
    }

    // x) magnitude trichotomy constant across A
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (unsigned i = 0; i < s.k1 && st == CondStatus::Pass; ++i)
            for (unsigned j = 0; j < s.l[i] && st == CondStatus::Pass; ++j) {
                auto& brick = s.bricks[i][j];
                for (std::size_t x = 0; x < brick.size() && st == CondStatus::Pass; ++x)
                    for (std::size_t y = x + 1; y < brick.size(); ++y) {
                        int rel0 = 2;
                        for (long n : s.A) {
                            Index z = s.zeta_at(i, n);
                            Rat ax = rat_abs(brick[x].at(n).at(z));
                            Rat ay = rat_abs(brick[y].at(n).at(z));
                            int rel = ax > ay ? 1 : (ax < ay ? -1 : 0);
                            if (rel0 == 2)
                                rel0 = rel;
                            else if (rel != rel0) {
                                st = CondStatus::Fail;
                                wit = at_ij(i, j, brick[x].id) + " vs " + brick[y].id +
                                      " trichotomy flips at n=" + std::to_string(n);
                                break;
                            }
                        }
                        if (st == CondStatus::Fail) break;
                    }
            }
        add("x) magnitude trichotomy constant", st, wit);
    }

    // xi) revisited coordinates of upper-level bricks scale like K
    {
        CondStatus st = CondStatus::Pass;
        std::string wit;
        for (unsigned i = s.k0; i < s.k1 && st == CondStatus::Pass; ++i)
            for (unsigned j = 0; j < s.l[i] && st == CondStatus::Pass; ++j)
                for (auto& g : s.bricks[i][j]) {
                    // mu in supp g(n) for all n in A
                    std::set<Index> common;
                    bool first = true;
                    for (long n : s.A) {
                        std::set<Index> cur;
                        for (auto& [mu, v] : g.at(n).entries()) cur.insert(mu);
                        if (first) {
                            common = cur;
                            first = false;
                        } else {
                            std::set<Index> inter;
                            for (Index mu : common)
                                if (cur.count(mu)) inter.insert(mu);
                            common = inter;
                        }
                    }
                    for (Index mu : common) {
                        Rat ref;
                        bool have_ref = false;
                        for (long n : s.A) {
                            Rat v = g.at(n).at(mu) / Rat(s.K_at(n));
                            if (have_ref && v != ref) {
                                st = CondStatus::Fail;
                                wit = at_ij(i, j, g.id) + " g(n)(mu)/K_n varies at mu=" +
                                      std::to_string(mu);
                                break;
                            }
                            ref = v;
                            have_ref = true;
                        }
                        if (st == CondStatus::Fail) break;
                    }
                    if (st == CondStatus::Fail) break;
                }
        add("xi) revisited coordinates constant over K", st, wit);
    }

    return rep;
}

CheckResult check_basis_identities(const RationalStack& s, const StackBasisData& b) {
    if (!b.M.is_integral() || !b.N.is_integral()) return {false, "M or N not integral"};
    if (b.M.rows() != b.fam_a.size() || b.M.cols() != b.fam_c.size())
        return {false, "M shape mismatch"};
    if (b.N.rows() != b.fam_c.size() || b.N.cols() != b.fam_a.size())
        return {false, "N shape mismatch"};

    MatQ prod = b.M * b.N;
    MatQ id = MatQ::identity(b.fam_a.size());
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            prod.at(i, j) /= Rat(b.T * b.T);
    if (!(prod == id)) return {false, "M * (N / T^2) != identity"};

    for (long n : s.A) {
        for (std::size_t fi = 0; fi < b.fam_a.size(); ++fi) {
            FinSuppVec sum;
            for (std::size_t hi = 0; hi < b.fam_c.size(); ++hi)
                sum.add_scaled(b.M.at(fi, hi), b.fam_c[hi].at(n));
            if (!(sum == b.fam_a[fi].at(n)))
                return {false, "identity (2) fails for " + b.fam_a[fi].id + " at n=" +
                                   std::to_string(n)};
        }
        for (std::size_t hi = 0; hi < b.fam_c.size(); ++hi) {
            FinSuppVec sum;
            for (std::size_t fi = 0; fi < b.fam_a.size(); ++fi)
                sum.add_scaled(b.N.at(hi, fi), b.fam_a[fi].at(n));
            sum = sum.scaled(Rat(1) / Rat(b.T * b.T));
            if (!(sum == b.fam_c[hi].at(n)))
                return {false, "identity (3) fails for " + b.fam_c[hi].id + " at n=" +
                                   std::to_string(n)};
        }
    }
    return {true, ""};
}

}  // namespace arcstack
