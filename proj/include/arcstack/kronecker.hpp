#pragma once

#include "arcstack/circle.hpp"
#include "arcstack/sqrtval.hpp"

#include <functional>
#include <vector>

namespace arcstack {

// Q-linearly independent tuple of exact constants; the direction vector of
// the torus line whose density we certify.
struct Theta {
    std::vector<SqrtVal> values;

    static Theta make(std::vector<SqrtVal> vals);  // validates independence
    std::size_t dim() const { return values.size(); }
};

struct DensityCert {
    Int L;
    Rat eps;
    Rat step;        // sample spacing along x (0 in analytic mode)
    Rat mesh;        // grid resolution (0 in analytic mode)
    bool analytic = false;  // r==1 full-wrap shortcut: |theta_0| * L >= 1
};

struct KroneckerConfig {
    Int l_cap = 4096;              // doubling search cap for L
    unsigned long grid_budget = 1 << 21;  // max grid cells in sampled certification
    unsigned long scan_budget = 1 << 22;  // max scan steps in find_subarc
};

// Certified L such that {(theta_k x)_k : x in I} is eps-dense in T^r for any
// interval I of length >= L. Sampled certification: every point of a T^r grid
// of mesh <= eps/2 lies within eps/2 of a sample point of the curve over
// [0, L] (sample step eps / (4 * speed)); a fortiori within the documented
// eps/2 + step*speed/2, and stable under re-verification at finer steps.
DensityCert find_L(const Theta& theta, const Rat& eps, const KroneckerConfig& cfg = {});

// Re-runs the sampled verification of a certificate at `factor` times the
// sampling resolution. Returns true when coverage still holds.
bool verify_density(const Theta& theta, const DensityCert& cert, unsigned factor,
                    const KroneckerConfig& cfg = {});

struct SubarcRequest {
    std::vector<Int> a;       // multipliers, |a0| > ... > |a_{r-1}| strictly
    Arc J;                    // search arc, length >= 3L/|a0|
    std::vector<Rat> center;  // target ball center in T^r
    Rat eps_star;             // < 1/8
    Int L;
    // optional extra pointwise acceptance tests (exact, on candidate x)
    std::function<bool(const Rat&)> extra = nullptr;
};

struct SubarcResult {
    bool found = false;
    Arc K;
    Rat anchor;  // the accepted x (center of K)
    std::string reason;  // set when !found
};

// Leftmost subarc K of J, of length 4*eps*/(sqrt(r)*|a0|) (rounded down),
// whose image tuple stays in the open ball of radius 4*eps* around `center`.
// Acceptance requires the anchor image within 2*eps* (closed), which makes
// every point of K pass with margin; a 16-point exact audit runs before
// returning. Scan failure reports NotFound via `found == false`.
SubarcResult find_subarc(const SubarcRequest& req, const KroneckerConfig& cfg = {});

// Exact audit used by find_subarc and by the acceptance suite: image of
// 16 points of K (center, both endpoints-minus-margin, equispaced interior)
// lies in the open ball of radius 4*eps* around center.
bool audit_subarc(const std::vector<Int>& a, const Arc& K, const std::vector<Rat>& center,
                  const Rat& eps_star);

// Euclidean torus distance^2 between integer-multiplier image of x and a
// rational center tuple.
Rat image_dist2(const std::vector<Int>& a, const Rat& x, const std::vector<Rat>& center);

// Rational upper bound on sqrt(n), within 2^-40.
Rat sqrt_upper(unsigned long n);

}  // namespace arcstack
