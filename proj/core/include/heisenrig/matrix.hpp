#pragma once

#include "heisenrig/cyclo.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace heisenrig {

/// Dense rectangular matrix over one cyclotomic field. Row-major.
class CycloMatrix {
public:
    CycloMatrix(CycloField field, std::size_t rows, std::size_t cols);
    static CycloMatrix identity(const CycloField& field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CycloField& field() const { return field_; }

    const CycloNum& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, CycloNum v);

    CycloMatrix transpose() const;
    CycloNum trace() const;
    bool is_scalar() const;
    /// If the matrix is c * I, returns c.
    std::optional<CycloNum> scalar_value() const;

    friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b);
    friend CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b);
    friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
    friend CycloMatrix operator*(const CycloNum& s, const CycloMatrix& a);
    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
    friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

    CycloMatrix pow(std::uint64_t k) const;

private:
    CycloField field_;
    std::size_t rows_, cols_;
    std::vector<CycloNum> entries_;
};

struct RrefResult {
    CycloMatrix matrix;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form via exact Gauss-Jordan elimination.
RrefResult rref(const CycloMatrix& m);

std::size_t rank(const CycloMatrix& m);

/// Basis of {x : M x = 0}, one matrix column per basis vector.
CycloMatrix kernel_basis(const CycloMatrix& m);

/// Solves M x = b for a single right-hand side; empty if inconsistent.
std::optional<std::vector<CycloNum>> solve(const CycloMatrix& m, const std::vector<CycloNum>& b);

bool det_nonzero(const CycloMatrix& m);

/// Inverse of a square full-rank matrix. Throws std::domain_error if singular.
CycloMatrix inverse(const CycloMatrix& m);

/// -- Row-space (subspace) helpers --------------------------------------------
/// Subspaces are represented as matrices whose rows form an rref basis.

/// rref basis of the row space of `m`.
CycloMatrix row_space_basis(const CycloMatrix& m);

/// Row space of `sub` contained in row space of `space`?
bool subspace_contains(const CycloMatrix& space, const CycloMatrix& sub);

/// Is the vector in the row space?
bool subspace_contains_vector(const CycloMatrix& space, const std::vector<CycloNum>& v);

/// Stacks rows of a on top of rows of b.
CycloMatrix stack_rows(const CycloMatrix& a, const CycloMatrix& b);

}  // namespace heisenrig
