#pragma once

// Exact dense linear algebra over prime fields GF(p), p < 2^31.
//
// All echelon conventions are deterministic: the leftmost column with a
// nonzero entry becomes the next pivot and the first row holding a nonzero
// entry in that column is swapped up. Every higher-level basis choice in the
// library (kernels, complements, quotient coordinates) is derived from these
// conventions, so identical inputs give bit-identical outputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monocat/error.hpp"

namespace monocat {

using FpVector = std::vector<std::uint32_t>;

/// Arithmetic in GF(p). Primality is checked once, on construction.
class Field {
public:
    explicit Field(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return std::uint32_t(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p_ - b);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return std::uint32_t((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t reduce(std::int64_t v) const;

    static bool is_prime(std::uint64_t p);

private:
    std::uint32_t p_;
};

/// Dense row-major matrix over GF(p).
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FpMatrix identity(std::size_t n, std::uint32_t p);
    static FpMatrix zero(std::size_t rows, std::size_t cols, std::uint32_t p) {
        return FpMatrix(rows, cols, p);
    }
    /// Builds from integer rows, reducing every entry mod p.
    static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows,
                              std::size_t cols_if_empty = 0);
    /// Column matrix holding `v`.
    static FpMatrix column(std::uint32_t p, const FpVector& v);
    /// Matrix whose columns are `cols` (each of length `rows`).
    static FpMatrix from_columns(std::uint32_t p, std::size_t rows, const std::vector<FpVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t v);

    std::span<const std::uint32_t> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<std::uint32_t> row_mut(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    const std::vector<std::uint32_t>& entries() const { return data_; }

    FpVector col(std::size_t j) const;
    FpMatrix transpose() const;
    FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    FpMatrix select_rows(std::span<const std::size_t> idx) const;
    FpMatrix select_cols(std::span<const std::size_t> idx) const;
    void set_block(std::size_t r0, std::size_t c0, const FpMatrix& b);

    FpMatrix operator*(const FpMatrix& b) const;
    FpVector operator*(const FpVector& v) const;
    FpMatrix operator+(const FpMatrix& b) const;
    FpMatrix operator-(const FpMatrix& b) const;
    FpMatrix scaled(std::uint32_t c) const;
    FpMatrix negated() const { return scaled(p_ - 1 == 0 ? 0 : p_ - 1); }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const FpMatrix& o) const = default;

    /// Row-major flattening; the inverse is `unvec`.
    FpVector vec() const { return data_; }
    static FpMatrix unvec(std::uint32_t p, std::size_t rows, std::size_t cols, std::span<const std::uint32_t> v);

    std::vector<std::vector<std::int64_t>> to_rows() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> data_;
};

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b);
FpMatrix power(const FpMatrix& a, unsigned e);
/// Kronecker product: (A⊗B)[i*rB+k][j*cB+l] = A[i][j]*B[k][l].
FpMatrix kron(const FpMatrix& a, const FpMatrix& b);

struct Rref {
    FpMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

Rref rref(const FpMatrix& a);
std::size_t rank(const FpMatrix& a);
std::optional<FpMatrix> inverse(const FpMatrix& a);

/// A subspace of k^ambient held by a basis in reduced column-echelon form:
/// the basis transposed is in reduced row-echelon form, so each basis column
/// has a pivot row where it is 1 and all other basis columns are 0.
class Subspace {
public:
    Subspace() = default;
    /// The span of the columns of `generators`, canonicalized.
    static Subspace span(const FpMatrix& generators);
    static Subspace zero(std::size_t ambient, std::uint32_t p);
    static Subspace full(std::size_t ambient, std::uint32_t p);

    std::size_t ambient_dim() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    std::uint32_t modulus() const { return basis_.modulus(); }
    const FpMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

    /// Coordinates of `v` in the basis, or nullopt if v is not in the span.
    std::optional<FpVector> coordinates(const FpVector& v) const;
    /// Coordinates of every column of `m`; throws InternalError if any column is outside.
    FpMatrix coordinates_of(const FpMatrix& m) const;
    bool contains(const FpVector& v) const { return coordinates(v).has_value(); }
    bool contains(const Subspace& other) const;

    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

private:
    FpMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Basis of {v : A v = 0}.
Subspace kernel_basis(const FpMatrix& a);
/// Columns spanning the image of `a`.
Subspace image(const FpMatrix& a);

/// Particular solution of A x = b with free variables set to 0.
std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b);
/// Solves A X = B column by column; nullopt if any column is inconsistent.
std::optional<FpMatrix> solve_matrix(const FpMatrix& a, const FpMatrix& b);

/// Quotient coordinates of target/im(A).
///   proj:    (rows(A) - rank) x rows(A), surjective, proj * A = 0
///   section: rows(A) x (rows(A) - rank), proj * section = I
/// The coordinates are the non-pivot rows of the column-echelon form of A.
struct Cokernel {
    FpMatrix proj;
    FpMatrix section;
    std::size_t dim() const { return proj.rows(); }
};
Cokernel cokernel(const FpMatrix& a);

/// Extends a basis of `sub` to a basis of `whole` (sub ⊆ whole) and returns
/// only the added vectors, as columns. Candidates are the basis columns of
/// `whole` in order, so the result is deterministic.
FpMatrix complement_in(const Subspace& sub, const Subspace& whole);

/// Kernel of the stacked system [C_1; C_2; ...] computed incrementally, which
/// keeps intermediate matrices no wider than the current kernel.
class KernelAccumulator {
public:
    KernelAccumulator(std::size_t unknowns, std::uint32_t p);
    void add_constraints(const FpMatrix& c);
    const FpMatrix& basis() const { return basis_; }
    std::size_t dim() const { return basis_.cols(); }

private:
    FpMatrix basis_;
};

} // namespace monocat
