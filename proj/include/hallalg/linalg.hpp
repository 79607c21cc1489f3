#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hallalg/errors.hpp"

namespace hallalg::exact {

// Prime field F_p for a small prime p <= 97.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % std::int64_t(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

  private:
    std::uint32_t p_;
};

// Dense row-major matrix over F_p.  Zero rows or columns are legal and stand
// for maps to or from the zero space.
class MatrixFp {
  public:
    MatrixFp(std::size_t rows, std::size_t cols, PrimeField field);
    MatrixFp(std::size_t rows, std::size_t cols, PrimeField field,
             std::vector<std::uint32_t> entries);

    static MatrixFp identity(std::size_t n, PrimeField field);
    static MatrixFp zero(std::size_t rows, std::size_t cols, PrimeField field) {
        return MatrixFp(rows, cols, field);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { entries_[r * cols_ + c] = v % field_.p(); }
    const std::vector<std::uint32_t>& entries() const { return entries_; }

    MatrixFp transpose() const;
    friend MatrixFp operator*(const MatrixFp& a, const MatrixFp& b);
    friend MatrixFp operator+(const MatrixFp& a, const MatrixFp& b);
    friend bool operator==(const MatrixFp& a, const MatrixFp& b);
    friend bool operator!=(const MatrixFp& a, const MatrixFp& b) { return !(a == b); }

    bool is_invertible() const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    PrimeField field_;
    std::vector<std::uint32_t> entries_;
};

// Rank over F_p by Gaussian elimination.  Deterministic: pivots are chosen
// as the first nonzero entry scanning down each column left to right.
std::size_t rank(const MatrixFp& m);

// Reduced row echelon form (zero rows dropped).
MatrixFp rref(const MatrixFp& m);

// Basis of the solution space of m x = 0, one basis vector per row.
MatrixFp nullspace(const MatrixFp& m);

// Unique solution X of a X = b when a has full column rank; the columns of b
// must lie in the column span of a (checked).
MatrixFp solve_exact(const MatrixFp& a, const MatrixFp& b);

// True when every row of `vectors` lies in the row span of the RREF matrix
// `basis` (basis must be in reduced row echelon form).
bool rows_in_rref_span(const MatrixFp& basis, const MatrixFp& vectors);

// Visit every sub_dim-dimensional subspace of F_p^{ambient_dim} exactly once,
// presented as its unique RREF basis matrix (sub_dim x ambient_dim, rows are
// basis vectors).  Order: lexicographic on the pivot-column set, then
// lexicographic on free entries scanned row-major.
void for_each_subspace(std::size_t ambient_dim, std::size_t sub_dim, PrimeField field,
                       const std::function<void(const MatrixFp&)>& visit);

// Materialized variant of for_each_subspace.
std::vector<MatrixFp> enumerate_subspaces(std::size_t ambient_dim, std::size_t sub_dim,
                                          PrimeField field);

}  // namespace hallalg::exact
