#include "arcstack/sqrtval.hpp"

#include <algorithm>
#include <sstream>

namespace arcstack {

std::pair<unsigned long, unsigned long> squarefree_decompose(unsigned long n) {
    if (n == 0) throw Unsupported("radicand must be positive");
    unsigned long k = 1, s = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        unsigned long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned long i = 0; i + 1 < e; i += 2) k *= p;
        if (e % 2 == 1) s *= p;
    }
    s *= n;  // leftover prime
    return {k, s};
}

std::pair<Rat, Rat> sqrt_enclosure(unsigned long s, const Rat& width) {
    if (s == 1) return {Rat(1), Rat(1)};
    Int z(static_cast<unsigned long>(s));
    Int r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    if (r * r == z) return {Rat(r), Rat(r)};
    Rat hi = Rat(r + 1);
    Rat lo = Rat(s) / hi;
    while (hi - lo > width) {
        hi = (hi + Rat(s) / hi) / 2;
        lo = Rat(s) / hi;
    }
    return {lo, hi};
}

SqrtVal SqrtVal::sqrt_of(unsigned long d, const Rat& coeff) {
    auto [k, s] = squarefree_decompose(d);
    SqrtVal v;
    v.set(s, coeff * Rat(Int(k)));
    return v;
}

void SqrtVal::set(unsigned long s, const Rat& c) {
    if (sgn(c) == 0)
        terms_.erase(s);
    else
        terms_[s] = c;
}

bool SqrtVal::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat SqrtVal::rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat SqrtVal::as_rational() const {
    if (!is_rational()) throw Unsupported("SqrtVal is irrational");
    return rational_part();
}

SqrtVal SqrtVal::operator-() const {
    SqrtVal r;
    for (auto& [s, c] : terms_) r.terms_[s] = -c;
    return r;
}

SqrtVal SqrtVal::operator+(const SqrtVal& o) const {
    SqrtVal r = *this;
    for (auto& [s, c] : o.terms_) r.set(s, r.terms_.count(s) ? r.terms_[s] + c : c);
    return r;
}

SqrtVal SqrtVal::operator-(const SqrtVal& o) const { return *this + (-o); }

SqrtVal SqrtVal::operator*(const SqrtVal& o) const {
    SqrtVal r;
    for (auto& [s, c] : terms_) {
        for (auto& [t, d] : o.terms_) {
            // sqrt(s)*sqrt(t) = g*sqrt(s/g * t/g) with g = gcd(s,t)
            unsigned long g = std::__gcd(s, t);
            unsigned long rad = (s / g) * (t / g);
            Rat add = c * d * Rat(Int(static_cast<unsigned long>(g)));
            r.set(rad, (r.terms_.count(rad) ? r.terms_[rad] : Rat(0)) + add);
        }
    }
    return r;
}

SqrtVal SqrtVal::inverse() const {
    if (is_zero()) throw Unsupported("division by zero SqrtVal");
    if (is_rational()) {
        SqrtVal r;
        r.set(1, Rat(1) / rational_part());
        return r;
    }
    // Pick a prime dividing some radicand; conjugating by it strictly reduces
    // the set of primes appearing, so the recursion terminates.
    unsigned long p = 0;
    for (auto& [s, c] : terms_) {
        if (s > 1) {
            for (unsigned long q = 2;; ++q) {
                if (s % q == 0) {
                    p = q;
                    break;
                }
            }
            break;
        }
    }
    SqrtVal conj;
    for (auto& [s, c] : terms_) conj.set(s, (s % p == 0) ? -c : c);
    SqrtVal norm = *this * conj;  // no radicand of norm is divisible by p
    return conj * norm.inverse();
}

SqrtVal SqrtVal::operator/(const SqrtVal& o) const { return *this * o.inverse(); }

std::pair<Rat, Rat> SqrtVal::enclosure(const Rat& width) const {
    if (terms_.empty()) return {Rat(0), Rat(0)};
    Rat w = width / Rat(Int(static_cast<unsigned long>(terms_.size())));
    Rat lo(0), hi(0);
    for (auto& [s, c] : terms_) {
        Rat cw = w / (rat_abs(c) + Rat(1));
        auto [slo, shi] = sqrt_enclosure(s, cw);
        if (sgn(c) >= 0) {
            lo += c * slo;
            hi += c * shi;
        } else {
            lo += c * shi;
            hi += c * slo;
        }
    }
    return {lo, hi};
}

int SqrtVal::sign() const {
    if (terms_.empty()) return 0;
    if (is_rational()) return sgn(rational_part());
    Rat width(1, 4);
    for (;;) {
        auto [lo, hi] = enclosure(width);
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        width /= 16;  // value is irrational, hence nonzero; this terminates
    }
}

Int SqrtVal::floor() const {
    if (is_rational()) return rat_floor(rational_part());
    Rat width(1, 4);
    for (;;) {
        auto [lo, hi] = enclosure(width);
        Int fl = rat_floor(lo), fh = rat_floor(hi);
        if (fl == fh) return fl;
        width /= 16;  // irrational value is never an integer
    }
}

std::string SqrtVal::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [s, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        if (s != 1) os << "*sqrt(" << s << ")";
    }
    return os.str();
}

std::optional<SqrtVal> SqrtVal::parse(const std::string& str) {
    SqrtVal out;
    std::string s = str;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos == 0 ? 1 : pos + 1);
        // careful: '+' inside term only at joins; negative leads are in the coeff
        std::size_t scan = pos + 1;
        while (scan < s.size() && s[scan] != '+') ++scan;
        next = scan;
        std::string term = s.substr(pos, next - pos);
        unsigned long rad = 1;
        std::string coeff = term;
        auto star = term.find("*sqrt(");
        if (star != std::string::npos) {
            coeff = term.substr(0, star);
            auto close = term.find(')', star);
            if (close == std::string::npos) return std::nullopt;
            rad = std::strtoul(term.substr(star + 6, close - star - 6).c_str(), nullptr, 10);
            if (rad == 0) return std::nullopt;
        }
        auto c = rat_parse(coeff);
        if (!c) return std::nullopt;
        out = out + SqrtVal::sqrt_of(rad, *c);
        pos = next + (next < s.size() ? 1 : 0);
    }
    return out;
}

std::size_t rational_rank(const std::vector<SqrtVal>& vals) {
    std::vector<unsigned long> rads;
    for (auto& v : vals)
        for (auto& [s, c] : v.terms())
            if (std::find(rads.begin(), rads.end(), s) == rads.end()) rads.push_back(s);
    std::sort(rads.begin(), rads.end());
    std::vector<std::vector<Rat>> rows;
    for (auto& v : vals) {
        std::vector<Rat> row(rads.size(), Rat(0));
        for (auto& [s, c] : v.terms())
            row[std::lower_bound(rads.begin(), rads.end(), s) - rads.begin()] = c;
        rows.push_back(std::move(row));
    }
    // Gaussian elimination over Q
    std::size_t rank = 0;
    for (std::size_t col = 0; col < rads.size() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && sgn(rows[i][col]) != 0) {
                Rat f = rows[i][col] / rows[rank][col];
                for (std::size_t j = col; j < rads.size(); ++j) rows[i][j] -= f * rows[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

bool rationally_independent(const std::vector<SqrtVal>& vals) {
    for (auto& v : vals)
        if (v.is_zero()) return false;
    return rational_rank(vals) == vals.size();
}

std::optional<std::vector<Rat>> solve_in_span(const std::vector<SqrtVal>& basis,
                                              const SqrtVal& target) {
    std::vector<unsigned long> rads;
    auto note = [&](const SqrtVal& v) {
        for (auto& [s, c] : v.terms())
            if (std::find(rads.begin(), rads.end(), s) == rads.end()) rads.push_back(s);
    };
    for (auto& b : basis) note(b);
    note(target);
    std::sort(rads.begin(), rads.end());
    const std::size_t m = rads.size(), k = basis.size();
    // columns = basis coefficients, augmented with target
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(k + 1, Rat(0)));
    auto fill = [&](const SqrtVal& v, std::size_t col) {
        for (auto& [s, c] : v.terms())
            a[std::lower_bound(rads.begin(), rads.end(), s) - rads.begin()][col] = c;
    };
    for (std::size_t j = 0; j < k; ++j) fill(basis[j], j);
    fill(target, k);

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && sgn(a[piv][col]) == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i != row && sgn(a[i][col]) != 0) {
                Rat f = a[i][col] / a[row][col];
                for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    // inconsistent if a zero-row has nonzero target entry
    for (std::size_t i = row; i < m; ++i)
        if (sgn(a[i][k]) != 0) return std::nullopt;
    std::vector<Rat> x(k, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][k] / a[i][pivot_col[i]];
    return x;
}

}  // namespace arcstack
