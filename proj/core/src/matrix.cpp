#include "heisenrig/matrix.hpp"

#include <stdexcept>

namespace heisenrig {

CycloMatrix::CycloMatrix(CycloField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

CycloMatrix CycloMatrix::identity(const CycloField& field, std::size_t n) {
    CycloMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

void CycloMatrix::set(std::size_t r, std::size_t c, CycloNum v) {
    if (!(v.field() == field_)) throw std::invalid_argument("entry from a different field");
    entries_[r * cols_ + c] = std::move(v);
}

CycloMatrix CycloMatrix::transpose() const {
    CycloMatrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
}

CycloNum CycloMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
    CycloNum t = field_.zero();
    for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

std::optional<CycloNum> CycloMatrix::scalar_value() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    const CycloNum& d = at(0, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r == c ? !(at(r, c) == d) : !at(r, c).is_zero()) return std::nullopt;
        }
    return d;
}

bool CycloMatrix::is_scalar() const { return scalar_value().has_value(); }

namespace {

void check_shape(const CycloMatrix& a, const CycloMatrix& b, bool product) {
    if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
    if (product ? a.cols() != b.rows() : (a.rows() != b.rows() || a.cols() != b.cols()))
        throw std::invalid_argument("matrix shape mismatch");
}

}  // namespace

CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b) {
    check_shape(a, b, false);
    CycloMatrix out(a.field(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c) + b.at(r, c));
    return out;
}

CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b) {
    check_shape(a, b, false);
    CycloMatrix out(a.field(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c) - b.at(r, c));
    return out;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
    check_shape(a, b, true);
    CycloMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const CycloNum& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                if (b.at(k, c).is_zero()) continue;
                out.set(r, c, out.at(r, c) + ark * b.at(k, c));
            }
        }
    return out;
}

CycloMatrix operator*(const CycloNum& s, const CycloMatrix& a) {
    CycloMatrix out(a.field(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, s * a.at(r, c));
    return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.field() == b.field())) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!(a.at(r, c) == b.at(r, c))) return false;
    return true;
}

CycloMatrix CycloMatrix::pow(std::uint64_t k) const {
    if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
    CycloMatrix result = identity(field_, rows_);
    CycloMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

RrefResult rref(const CycloMatrix& m) {
    CycloMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < a.cols(); ++c) {
                CycloNum tmp = a.at(row, c);
                a.set(row, c, a.at(pivot, c));
                a.set(pivot, c, std::move(tmp));
            }
        CycloNum scale = a.at(row, col).inv();
        for (std::size_t c = col; c < a.cols(); ++c) a.set(row, c, scale * a.at(row, c));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            CycloNum factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.set(r, c, a.at(r, c) - factor * a.at(row, c));
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(a), row, std::move(pivots)};
}

std::size_t rank(const CycloMatrix& m) { return rref(m).rank; }

CycloMatrix kernel_basis(const CycloMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    CycloMatrix basis(m.field(), m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        basis.set(fc, j, m.field().one());
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            basis.set(r.pivot_cols[i], j, -r.matrix.at(i, fc));
    }
    return basis;
}

std::optional<std::vector<CycloNum>> solve(const CycloMatrix& m, const std::vector<CycloNum>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("matrix shape mismatch");
    CycloMatrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
        aug.set(r, m.cols(), b[r]);
    }
    RrefResult rr = rref(aug);
    for (std::size_t p : rr.pivot_cols)
        if (p == m.cols()) return std::nullopt;  // inconsistent system
    std::vector<CycloNum> x(m.cols(), m.field().zero());
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
        x[rr.pivot_cols[i]] = rr.matrix.at(i, m.cols());
    return x;
}

bool det_nonzero(const CycloMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    return rank(m) == m.rows();
}

CycloMatrix inverse(const CycloMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    CycloMatrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
        aug.set(r, n + r, m.field().one());
    }
    RrefResult rr = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= rr.pivot_cols.size() || rr.pivot_cols[i] != i)
            throw std::domain_error("inverse of a singular matrix");
    CycloMatrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, rr.matrix.at(r, n + c));
    return inv;
}

CycloMatrix row_space_basis(const CycloMatrix& m) {
    RrefResult r = rref(m);
    CycloMatrix out(m.field(), r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(i, c, r.matrix.at(i, c));
    return out;
}

CycloMatrix stack_rows(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.cols() != b.cols() || !(a.field() == b.field()))
        throw std::invalid_argument("matrix shape mismatch");
    CycloMatrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b.at(r, c));
    return out;
}

bool subspace_contains(const CycloMatrix& space, const CycloMatrix& sub) {
    if (sub.rows() == 0) return true;
    return rank(stack_rows(space, sub)) == rank(space);
}

bool subspace_contains_vector(const CycloMatrix& space, const std::vector<CycloNum>& v) {
    CycloMatrix row(space.field(), 1, space.cols());
    for (std::size_t c = 0; c < v.size(); ++c) row.set(0, c, v[c]);
    return subspace_contains(space, row);
}

}  // namespace heisenrig
