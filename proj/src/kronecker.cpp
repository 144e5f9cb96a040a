#include "arcstack/kronecker.hpp"

#include <algorithm>

namespace arcstack {

Theta Theta::make(std::vector<SqrtVal> vals) {
    if (vals.empty()) throw Unsupported("theta tuple must be nonempty");
    if (!rationally_independent(vals))
        throw Unsupported("theta tuple is Q-linearly dependent");
    return Theta{std::move(vals)};
}

Rat sqrt_upper(unsigned long n) { return sqrt_enclosure(n, Rat(1, Int(1) << 40)).second; }

namespace {

Rat torus_dist(const Rat& x, const Rat& y) {
    Rat d = rat_frac(x - y);
    Rat e = Rat(1) - d;
    return d < e ? d : e;
}

// Rational upper bound for the curve speed sqrt(sum theta_k^2).
Rat speed_upper(const Theta& theta) {
    SqrtVal sum2;
    for (auto& t : theta.values) sum2 = sum2 + t * t;
    auto [lo, hi] = sum2.enclosure(Rat(1, 1024));
    // hi >= sum2; return an upper bound on its square root
    Rat r = hi;
    Rat guess = r + 1;  // sqrt(x) <= (x+1)/2 + slack; Newton from above
    for (int i = 0; i < 60; ++i) guess = (guess + r / guess) / 2;
    // one defensive widening keeps it an upper bound after truncation
    return guess + Rat(1, 1024);
}

struct GridCover {
    unsigned long per_dim = 0;
    std::vector<bool> covered;
};

bool sampled_coverage(const Theta& theta, const Int& L, const Rat& eps, const Rat& step,
                      const KroneckerConfig& cfg, bool* budget_ok) {
    const std::size_t r = theta.dim();
    *budget_ok = true;
    Int per_dim_z = rat_ceil(Rat(2) / eps);
    if (per_dim_z > Int(cfg.grid_budget)) {
        *budget_ok = false;
        return false;
    }
    unsigned long per_dim = static_cast<unsigned long>(per_dim_z.get_ui());
    double cells = 1;
    for (std::size_t k = 0; k < r; ++k) cells *= static_cast<double>(per_dim);
    if (cells > static_cast<double>(cfg.grid_budget)) {
        *budget_ok = false;
        return false;
    }
    GridCover grid;
    grid.per_dim = per_dim;
    grid.covered.assign(static_cast<std::size_t>(cells), false);
    const Rat mesh = Rat(1) / Rat(Int(per_dim));
    const Rat radius = eps / 2;
    const Rat r2 = radius * radius;
    const Rat enc_w = eps / 256;

    Int steps = rat_ceil(Rat(L) / step);
    if (steps > Int(cfg.scan_budget)) {
        *budget_ok = false;
        return false;
    }
    unsigned long nsteps = steps.get_ui();
    for (unsigned long i = 0; i <= nsteps; ++i) {
        Rat x = step * Rat(Int(i));
        // rational midpoints of frac(theta_k * x) within enc_w/2
        std::vector<Rat> mid(r);
        for (std::size_t k = 0; k < r; ++k) {
            SqrtVal v = theta.values[k] * SqrtVal(x);
            SqrtVal f = v - SqrtVal(Rat(v.floor()));
            auto [lo, hi] = f.enclosure(enc_w);
            mid[k] = (lo + hi) / 2;
        }
        // mark grid points with conservative distance bound <= radius
        // candidate window: |g_k - mid_k| <= radius + enc_w on the torus
        std::vector<std::vector<unsigned long>> cand(r);
        for (std::size_t k = 0; k < r; ++k) {
            long lo_j = rat_floor((mid[k] - radius - enc_w) * Rat(Int(per_dim))).get_si();
            long hi_j = rat_ceil((mid[k] + radius + enc_w) * Rat(Int(per_dim))).get_si();
            for (long j = lo_j; j <= hi_j; ++j) {
                long jj = ((j % static_cast<long>(per_dim)) + per_dim) % per_dim;
                if (std::find(cand[k].begin(), cand[k].end(), static_cast<unsigned long>(jj)) ==
                    cand[k].end())
                    cand[k].push_back(static_cast<unsigned long>(jj));
            }
        }
        std::vector<std::size_t> pick(r, 0);
        for (;;) {
            Rat d2(0);
            std::size_t flat = 0;
            for (std::size_t k = 0; k < r; ++k) {
                unsigned long j = cand[k][pick[k]];
                Rat g = mesh * Rat(Int(j));
                Rat dk = torus_dist(mid[k], g) + enc_w;  // covers enclosure slack
                d2 += dk * dk;
                flat = flat * per_dim + j;
            }
            if (d2 <= r2) grid.covered[flat] = true;
            std::size_t k = 0;
            while (k < r && ++pick[k] == cand[k].size()) {
                pick[k] = 0;
                ++k;
            }
            if (k == r) break;
        }
    }
    return std::all_of(grid.covered.begin(), grid.covered.end(), [](bool b) { return b; });
}

}  // namespace

DensityCert find_L(const Theta& theta, const Rat& eps, const KroneckerConfig& cfg) {
    if (!(eps > 0 && eps < Rat(1, 2))) throw Unsupported("find_L needs 0 < eps < 1/2");
    if (theta.dim() > 4) throw Unsupported("find_L desk bound: r <= 4");

    if (theta.dim() == 1) {
        // the image of [0, L] is an interval of length |theta_0| L; once that
        // reaches 1 the curve covers T and is eps-dense for every eps
        SqrtVal t = theta.values[0].abs();
        auto [lo, hi] = t.enclosure(Rat(1, 1 << 20));
        if (sgn(lo) <= 0) lo = hi / 2;
        Int L = rat_ceil(Rat(1) / lo);
        DensityCert cert{L, eps, Rat(0), Rat(0), true};
        // populate the sampled record when the grid is affordable
        Rat step = eps / (4 * speed_upper(theta));
        bool budget_ok = true;
        if (sampled_coverage(theta, L, eps, step, cfg, &budget_ok)) {
            cert.step = step;
            cert.mesh = eps / 2;
            cert.analytic = false;
        }
        return cert;
    }

    Rat step = eps / (4 * speed_upper(theta));
    for (Int L = 1; L <= cfg.l_cap; L *= 2) {
        bool budget_ok = true;
        if (sampled_coverage(theta, L, eps, step, cfg, &budget_ok))
            return DensityCert{L, eps, step, eps / 2, false};
        if (!budget_ok) throw CapExceeded("find_L grid budget exceeded");
    }
    throw CapExceeded("find_L: no certified L within cap (theta nearly dependent?)");
}

bool verify_density(const Theta& theta, const DensityCert& cert, unsigned factor,
                    const KroneckerConfig& cfg) {
    Rat step = cert.analytic ? (cert.eps / (4 * speed_upper(theta))) : cert.step;
    step /= static_cast<long>(factor == 0 ? 1 : factor);
    bool budget_ok = true;
    bool ok = sampled_coverage(theta, cert.L, cert.eps, step, cfg, &budget_ok);
    if (!budget_ok) throw CapExceeded("verify_density grid budget exceeded");
    return ok;
}

Rat image_dist2(const std::vector<Int>& a, const Rat& x, const std::vector<Rat>& center) {
    Rat d2(0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        Rat d = torus_dist(Rat(a[k]) * x, center[k]);
        d2 += d * d;
    }
    return d2;
}

bool audit_subarc(const std::vector<Int>& a, const Arc& K, const std::vector<Rat>& center,
                  const Rat& eps_star) {
    const Rat rad2 = (4 * eps_star) * (4 * eps_star);
    const Rat c = K.center();
    const Rat len = K.length();
    // center, both endpoints-minus-margin, and equispaced interior points
    const Rat margin = len / 16;
    std::vector<Rat> pts{c};
    Rat lo = c - len / 2 + margin, hi = c + len / 2 - margin;
    for (int t = 0; t < 15; ++t) pts.push_back(lo + (hi - lo) * Rat(t) / Rat(14));
    for (auto& x : pts)
        if (!(image_dist2(a, x, center) < rad2)) return false;
    return true;
}

SubarcResult find_subarc(const SubarcRequest& req, const KroneckerConfig& cfg) {
    const std::size_t r = req.a.size();
    if (r == 0) throw Unsupported("find_subarc: empty multiplier tuple");
    if (req.center.size() != r) throw Unsupported("find_subarc: center dimension mismatch");
    if (!(req.eps_star > 0 && req.eps_star < Rat(1, 8)))
        throw Unsupported("find_subarc needs 0 < eps* < 1/8");
    for (std::size_t k = 0; k + 1 < r; ++k)
        if (!(int_abs(req.a[k]) > int_abs(req.a[k + 1])))
            throw Unsupported("find_subarc needs strictly decreasing |a_k|");
    if (sgn(req.a.front()) == 0) throw Unsupported("find_subarc: zero multiplier");

    const Int a0_abs = int_abs(req.a[0]);
    if (req.J.length() * Rat(a0_abs) < Rat(3 * req.L))
        throw Unsupported("find_subarc: J shorter than 3L/|a0|");

    const Rat sqrt_r_up = sqrt_upper(static_cast<unsigned long>(r));
    const Rat klen = 4 * req.eps_star / (sqrt_r_up * Rat(a0_abs));
    const Rat deep2 = (2 * req.eps_star) * (2 * req.eps_star);

    const Rat jlo = req.J.is_full() ? Rat(0) : req.J.lo();
    const Rat jhi = req.J.is_full() ? Rat(1) : req.J.hi();

    auto accept = [&](const Rat& x) -> bool {
        if (!(image_dist2(req.a, x, req.center) <= deep2)) return false;
        if (req.extra && !req.extra(x)) return false;
        Arc K = Arc::centered(x, klen);
        if (!K.subset_of(req.J)) return false;
        return audit_subarc(req.a, K, req.center, req.eps_star);
    };

    if (r == 1) {
        // preimages of the ball center: x = (c0 + m)/a0, enumerated in
        // increasing x from the left end of J
        const Rat a0(req.a[0]);
        const Rat c0 = req.center[0];
        // x in [jlo + klen/2, jhi - klen/2] so that K fits in J
        Rat xlo = jlo + klen / 2, xhi = jhi - klen / 2;
        const int dir = sgn(a0) > 0 ? 1 : -1;  // m direction giving increasing x
        Int m = dir > 0 ? rat_ceil(a0 * xlo - c0) : rat_floor(a0 * xlo - c0);
        unsigned long steps = 0;
        for (;; m += dir, ++steps) {
            if (steps > cfg.scan_budget) return {false, Arc::full(), Rat(0), "scan budget"};
            Rat x = (c0 + Rat(m)) / a0;
            if (x > xhi) return {false, Arc::full(), Rat(0), "J exhausted"};
            if (x < xlo) continue;
            if (accept(x)) return {true, Arc::centered(x, klen), x, ""};
        }
    }

    const Rat step = req.eps_star / (2 * sqrt_r_up * Rat(a0_abs));
    Rat x = jlo + klen / 2;
    for (unsigned long i = 0; i <= cfg.scan_budget; ++i) {
        if (x > jhi - klen / 2) return {false, Arc::full(), Rat(0), "J exhausted"};
        if (accept(x)) return {true, Arc::centered(x, klen), x, ""};
        x += step;
    }
    return {false, Arc::full(), Rat(0), "scan budget"};
}

}  // namespace arcstack
