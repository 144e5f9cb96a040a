#include "arcstack/seqspec.hpp"

#include <algorithm>

namespace arcstack {

Rat law_value(const ValueLaw& law, long n) {
    if (auto* poly = std::get_if<PolyLaw>(&law)) {
        Rat acc(0);
        for (std::size_t i = poly->coeffs.size(); i-- > 0;) acc = acc * Rat(n) + poly->coeffs[i];
        return acc;
    }
    auto& r = std::get<RoundLaw>(law);
    if (r.alpha.is_zero() || sgn(r.q) == 0) return Rat(0);
    Rat growth = rat_pow(r.beta, static_cast<unsigned long>(n));
    if (r.k > 0) growth *= rat_pow(Rat(n), r.k);
    check_budget(growth);
    SqrtVal x = r.alpha * SqrtVal(growth);
    // round = floor(x + 1/2)
    Int rounded = (x + SqrtVal(Rat(1, 2))).floor();
    check_budget(rounded);
    return Rat(rounded) * r.q;
}

int compare_scales(const GrowthScale& a, const GrowthScale& b) {
    if (a.beta != b.beta) return a.beta < b.beta ? -1 : 1;
    if (a.k != b.k) return a.k < b.k ? -1 : 1;
    return 0;
}

SeqSpec::SeqSpec(std::string name, std::vector<Track> tracks) : name_(std::move(name)) {
    for (auto& t : tracks) push_merged(std::move(t));
}

SeqSpec SeqSpec::indicator(const std::string& name, Index mu) {
    return SeqSpec(name, {Track{PathConst{mu}, PolyLaw{{Rat(1)}}}});
}

void SeqSpec::push_merged(Track t) {
    if (auto* poly = std::get_if<PolyLaw>(&t.law)) {
        while (!poly->coeffs.empty() && sgn(poly->coeffs.back()) == 0) poly->coeffs.pop_back();
        if (poly->coeffs.empty()) return;
        for (auto& u : tracks_) {
            if (!(u.path == t.path)) continue;
            if (auto* up = std::get_if<PolyLaw>(&u.law)) {
                up->coeffs.resize(std::max(up->coeffs.size(), poly->coeffs.size()), Rat(0));
                for (std::size_t i = 0; i < poly->coeffs.size(); ++i)
                    up->coeffs[i] += poly->coeffs[i];
                while (!up->coeffs.empty() && sgn(up->coeffs.back()) == 0) up->coeffs.pop_back();
                if (up->coeffs.empty())
                    tracks_.erase(tracks_.begin() + (&u - tracks_.data()));
                return;
            }
        }
        tracks_.push_back(std::move(t));
        return;
    }
    auto& r = std::get<RoundLaw>(t.law);
    if (sgn(r.q) == 0 || r.alpha.is_zero()) return;
    if (sgn(r.beta) <= 0) throw Unsupported("RoundLaw beta must be positive");
    for (auto& u : tracks_) {
        if (!(u.path == t.path)) continue;
        if (auto* ur = std::get_if<RoundLaw>(&u.law)) {
            if (ur->alpha == r.alpha && ur->beta == r.beta && ur->k == r.k) {
                ur->q += r.q;
                if (sgn(ur->q) == 0) tracks_.erase(tracks_.begin() + (&u - tracks_.data()));
                return;
            }
        }
    }
    tracks_.push_back(std::move(t));
}

SeqSpec SeqSpec::linear_combination(const std::string& name,
                                    const std::vector<std::pair<Rat, const SeqSpec*>>& parts) {
    SeqSpec out(name);
    for (auto& [c, spec] : parts) {
        if (sgn(c) == 0) continue;
        for (auto t : spec->tracks()) {
            if (auto* poly = std::get_if<PolyLaw>(&t.law)) {
                for (auto& co : poly->coeffs) co *= c;
            } else {
                std::get<RoundLaw>(t.law).q *= c;
            }
            out.push_merged(std::move(t));
        }
    }
    return out;
}

FinSuppVec SeqSpec::eval(long n) const {
    FinSuppVec v;
    for (auto& t : tracks_) {
        Index mu = path_at(t.path, n);
        v.set(mu, v.at(mu) + law_value(t.law, n));
    }
    return v;
}

Rat SeqSpec::value_at(long n, Index mu) const {
    Rat acc(0);
    for (auto& t : tracks_)
        if (path_at(t.path, n) == mu) acc += law_value(t.law, n);
    return acc;
}

std::vector<ValueLaw> SeqSpec::laws_on_path(const Path& path) const {
    std::vector<ValueLaw> laws;
    for (auto& t : tracks_)
        if (t.path == path) laws.push_back(t.law);
    return laws;
}

PathAsymptotics SeqSpec::asymptotics_on_path(const Path& path) const {
    return law_sum_asymptotics(laws_on_path(path));
}

std::vector<Path> SeqSpec::paths() const {
    std::vector<Path> ps;
    for (auto& t : tracks_)
        if (std::find(ps.begin(), ps.end(), t.path) == ps.end()) ps.push_back(t.path);
    return ps;
}

PathAsymptotics law_sum_asymptotics(const std::vector<ValueLaw>& laws) {
    PathAsymptotics out;
    const GrowthScale const_scale{Rat(1), 0};
    std::vector<std::pair<GrowthScale, SqrtVal>> coeffs;
    auto add = [&](const GrowthScale& s, const SqrtVal& c) {
        for (auto& [sc, co] : coeffs) {
            if (compare_scales(sc, s) == 0) {
                co = co + c;
                return;
            }
        }
        coeffs.emplace_back(s, c);
    };
    for (auto& law : laws) {
        if (auto* poly = std::get_if<PolyLaw>(&law)) {
            for (std::size_t i = 0; i < poly->coeffs.size(); ++i) {
                if (sgn(poly->coeffs[i]) == 0) continue;
                if (i == 0)
                    out.exact_constant += poly->coeffs[0];
                else
                    add(GrowthScale{Rat(1), static_cast<unsigned>(i)}, SqrtVal(poly->coeffs[i]));
            }
            continue;
        }
        auto& r = std::get<RoundLaw>(law);
        if (r.alpha.is_zero() || sgn(r.q) == 0) continue;
        if (r.beta < 1) continue;  // round(alpha*beta^n*n^k) is eventually 0
        if (r.beta == 1 && r.k == 0) {
            out.exact_constant += Rat((r.alpha + SqrtVal(Rat(1, 2))).floor()) * r.q;
            continue;
        }
        add(GrowthScale{r.beta, r.k}, r.alpha * SqrtVal(r.q));
        out.bounded_noise = true;  // |round(x) - x| <= 1/2 leaves O(|q|) residue
    }
    for (auto& [sc, co] : coeffs) {
        if (co.is_zero()) continue;
        if (compare_scales(sc, const_scale) <= 0) continue;
        if (!out.dominant || compare_scales(sc, *out.dominant) > 0) {
            out.dominant = sc;
            out.dominant_coeff = co;
        }
    }
    return out;
}

std::optional<RatioLimit> ratio_limit(const PathAsymptotics& num, const PathAsymptotics& den) {
    if (den.dominant) {
        if (!num.dominant) return RatioLimit{LimitKind::Zero, SqrtVal()};
        int c = compare_scales(*num.dominant, *den.dominant);
        if (c < 0) return RatioLimit{LimitKind::Zero, SqrtVal()};
        if (c == 0)
            return RatioLimit{LimitKind::Finite, num.dominant_coeff / den.dominant_coeff};
        int s = num.dominant_coeff.sign() * den.dominant_coeff.sign();
        return RatioLimit{s > 0 ? LimitKind::PlusInf : LimitKind::MinusInf, SqrtVal()};
    }
    if (den.bounded_noise) return std::nullopt;
    if (sgn(den.exact_constant) == 0) return std::nullopt;  // denominator eventually zero
    if (num.dominant) {
        int s = num.dominant_coeff.sign() * sgn(den.exact_constant);
        return RatioLimit{s > 0 ? LimitKind::PlusInf : LimitKind::MinusInf, SqrtVal()};
    }
    if (num.bounded_noise) return std::nullopt;
    SqrtVal v = SqrtVal(num.exact_constant) / SqrtVal(den.exact_constant);
    if (v.is_zero()) return RatioLimit{LimitKind::Zero, SqrtVal()};
    return RatioLimit{LimitKind::Finite, v};
}

}  // namespace arcstack
