#pragma once

#include "arcstack/rat.hpp"

#include <vector>

namespace arcstack {

// Small dense matrix over Q; just enough exact linear algebra for the
// change-of-basis bookkeeping (invert, multiply, lcm of denominators).
class MatQ {
public:
    MatQ() = default;
    MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    static MatQ identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    MatQ operator*(const MatQ& o) const;
    bool operator==(const MatQ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    // Exact inverse (Gauss-Jordan); nullopt when singular.
    std::optional<MatQ> inverse() const;

    Int denominator_lcm() const;
    bool is_integral() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

}  // namespace arcstack
