#pragma once

#include "arcstack/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace arcstack {

// Exact element of the multi-quadratic field Q(sqrt(d) : d squarefree),
// stored as a finite sum  sum_s c_s * sqrt(s)  over squarefree s >= 1.
// The sqrt(s) for distinct squarefree s are linearly independent over Q,
// so the representation is canonical and zero-testing is coefficient-wise.
class SqrtVal {
public:
    SqrtVal() = default;
    SqrtVal(const Rat& r) { set(1, r); }           // NOLINT(google-explicit-constructor)
    SqrtVal(long r) : SqrtVal(Rat(r)) {}           // NOLINT(google-explicit-constructor)
    static SqrtVal sqrt_of(unsigned long d, const Rat& coeff = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rat rational_part() const;  // coefficient of sqrt(1)
    // exact rational value; requires is_rational()
    Rat as_rational() const;

    const std::map<unsigned long, Rat>& terms() const { return terms_; }

    SqrtVal operator-() const;
    SqrtVal operator+(const SqrtVal& o) const;
    SqrtVal operator-(const SqrtVal& o) const;
    SqrtVal operator*(const SqrtVal& o) const;
    SqrtVal operator/(const SqrtVal& o) const;
    bool operator==(const SqrtVal& o) const { return terms_ == o.terms_; }

    SqrtVal inverse() const;

    // Exact sign via adaptive rational enclosures (terminates: value != 0 has
    // irrational parts only when some non-unit radical coefficient is nonzero).
    int sign() const;
    Int floor() const;

    // Rational enclosure [lo, hi] with hi - lo <= width.
    std::pair<Rat, Rat> enclosure(const Rat& width) const;

    bool operator<(const SqrtVal& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const SqrtVal& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const SqrtVal& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const SqrtVal& o) const { return (*this - o).sign() >= 0; }

    SqrtVal abs() const { return sign() >= 0 ? *this : -*this; }

    std::string str() const;
    static std::optional<SqrtVal> parse(const std::string& s);

private:
    void set(unsigned long s, const Rat& c);
    std::map<unsigned long, Rat> terms_;  // squarefree radicand -> coefficient, no zeros
};

// (lo, hi) rational bounds on sqrt(s), hi - lo <= width, via Newton iteration.
std::pair<Rat, Rat> sqrt_enclosure(unsigned long s, const Rat& width);

// Splits n = k^2 * s with s squarefree; returns {k, s}. Trial division;
// radicands here stay small (scenario-level constants).
std::pair<unsigned long, unsigned long> squarefree_decompose(unsigned long n);

// Rank over Q of the tuple, treating each value as a vector of coefficients
// over the union of radicands. The tuple is Q-linearly independent iff
// rank == size.
std::size_t rational_rank(const std::vector<SqrtVal>& vals);
bool rationally_independent(const std::vector<SqrtVal>& vals);

// Solves target = sum_i coeff_i * basis_i with coeff_i in Q, if possible.
std::optional<std::vector<Rat>> solve_in_span(const std::vector<SqrtVal>& basis,
                                              const SqrtVal& target);

}  // namespace arcstack
