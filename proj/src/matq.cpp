#include "arcstack/matq.hpp"

namespace arcstack {

MatQ MatQ::identity(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (cols_ != o.rows_) throw Unsupported("MatQ dimension mismatch");
    MatQ r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (sgn(at(i, k)) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

std::optional<MatQ> MatQ::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    MatQ a = *this;
    MatQ inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a.at(piv, col)) == 0) ++piv;
        if (piv == n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a.at(col, j), a.at(piv, j));
            std::swap(inv.at(col, j), inv.at(piv, j));
        }
        Rat d = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(a.at(i, col)) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Int MatQ::denominator_lcm() const {
    Int l(1);
    for (auto& q : a_) l = int_lcm(l, q.get_den());
    return l;
}

bool MatQ::is_integral() const {
    for (auto& q : a_)
        if (q.get_den() != 1) return false;
    return true;
}

}  // namespace arcstack
