#include "monocat/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace monocat {

namespace {

void require_same_modulus(const FpMatrix& a, const FpMatrix& b, const char* op) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch(std::string(op) + ": moduli " + std::to_string(a.modulus()) + " and " +
                              std::to_string(b.modulus()));
}

// Reduce rows of `m` in place to reduced row-echelon form. Returns pivot columns.
std::vector<std::size_t> eliminate(FpMatrix& m, std::size_t col_limit) {
    const std::uint32_t p = m.modulus();
    const Field field(p);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t c = 0; c < col_limit && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, c) != 0) {
                sel = i;
                break;
            }
        }
        if (sel == rows)
            continue;
        if (sel != r) {
            auto a = m.row_mut(sel);
            auto b = m.row_mut(r);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto pr = m.row_mut(r);
        const std::uint32_t iv = field.inv(pr[c]);
        if (iv != 1)
            for (std::size_t j = c; j < cols; ++j)
                pr[j] = field.mul(pr[j], iv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            auto row = m.row_mut(i);
            const std::uint32_t factor = row[c];
            if (factor == 0)
                continue;
            const std::uint64_t nf = p - factor;
            for (std::size_t j = c; j < cols; ++j) {
                if (pr[j] != 0)
                    row[j] = std::uint32_t((row[j] + nf * pr[j]) % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

// ---------------------------------------------------------------- Field

Field::Field(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw InvalidArgument("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

bool Field::is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a % p_ == 0)
        throw InvalidArgument("inverse of zero in GF(" + std::to_string(p_) + ")");
    // extended Euclid on (a, p)
    std::int64_t r0 = p_, r1 = a % p_;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    return reduce(t0);
}

std::uint32_t Field::reduce(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0)
        r += p_;
    return std::uint32_t(r);
}

// ---------------------------------------------------------------- FpMatrix

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1 % p;
    return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols_if_empty) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? cols_if_empty : rows.front().size();
    FpMatrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

FpMatrix FpMatrix::column(std::uint32_t p, const FpVector& v) {
    FpMatrix m(v.size(), 1, p);
    for (std::size_t i = 0; i < v.size(); ++i)
        m.at(i, 0) = v[i] % p;
    return m;
}

FpMatrix FpMatrix::from_columns(std::uint32_t p, std::size_t rows, const std::vector<FpVector>& cols) {
    FpMatrix m(rows, cols.size(), p);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw DimensionMismatch("column length differs from row count");
        for (std::size_t i = 0; i < rows; ++i)
            m.at(i, j) = cols[j][i] % p;
    }
    return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, std::int64_t v) {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0)
        r += p_;
    data_[i * cols_ + j] = std::uint32_t(r);
}

FpVector FpMatrix::col(std::size_t j) const {
    FpVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = (*this)(i, j);
    return t;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DimensionMismatch("block out of range");
    FpMatrix b(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            b.at(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> idx) const {
    FpMatrix b(idx.size(), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            b.at(i, j) = (*this)(idx[i], j);
    return b;
}

FpMatrix FpMatrix::select_cols(std::span<const std::size_t> idx) const {
    FpMatrix b(rows_, idx.size(), p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            b.at(i, j) = (*this)(i, idx[j]);
    return b;
}

void FpMatrix::set_block(std::size_t r0, std::size_t c0, const FpMatrix& b) {
    require_same_modulus(*this, b, "set_block");
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw DimensionMismatch("set_block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            at(r0 + i, c0 + j) = b(i, j);
}

FpMatrix FpMatrix::operator*(const FpMatrix& b) const {
    require_same_modulus(*this, b, "multiply");
    if (cols_ != b.rows_)
        throw DimensionMismatch("multiply: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                                std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    FpMatrix c(rows_, b.cols_, p_);
    if (b.cols_ == 0)
        return c;
    std::vector<std::uint64_t> acc(b.cols_);
    // Entries are < 2^31, so a product is < 2^62 and one product plus a
    // reduced accumulator never overflows 64 bits.
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = (*this)(i, k);
            if (a == 0)
                continue;
            const std::uint32_t* brow = b.data_.data() + k * b.cols_;
            for (std::size_t j = 0; j < b.cols_; ++j)
                acc[j] = (acc[j] + a * brow[j]) % p_;
        }
        for (std::size_t j = 0; j < b.cols_; ++j)
            c.at(i, j) = std::uint32_t(acc[j]);
    }
    return c;
}

FpVector FpMatrix::operator*(const FpVector& v) const {
    if (v.size() != cols_)
        throw DimensionMismatch("matrix-vector size mismatch");
    FpVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < cols_; ++k)
            acc = (acc + std::uint64_t((*this)(i, k)) * v[k]) % p_;
        out[i] = std::uint32_t(acc);
    }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& b) const {
    require_same_modulus(*this, b, "add");
    if (rows_ != b.rows_ || cols_ != b.cols_)
        throw DimensionMismatch("add: shape mismatch");
    FpMatrix c(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        const std::uint64_t s = std::uint64_t(data_[i]) + b.data_[i];
        c.data_[i] = std::uint32_t(s >= p_ ? s - p_ : s);
    }
    return c;
}

FpMatrix FpMatrix::operator-(const FpMatrix& b) const {
    require_same_modulus(*this, b, "subtract");
    if (rows_ != b.rows_ || cols_ != b.cols_)
        throw DimensionMismatch("subtract: shape mismatch");
    FpMatrix c(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        c.data_[i] = data_[i] >= b.data_[i] ? data_[i] - b.data_[i] : data_[i] + p_ - b.data_[i];
    return c;
}

FpMatrix FpMatrix::scaled(std::uint32_t c) const {
    FpMatrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = std::uint32_t((std::uint64_t(data_[i]) * (c % p_)) % p_);
    return r;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FpMatrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u))
                return false;
    return true;
}

FpMatrix FpMatrix::unvec(std::uint32_t p, std::size_t rows, std::size_t cols, std::span<const std::uint32_t> v) {
    if (v.size() != rows * cols)
        throw DimensionMismatch("unvec: length mismatch");
    FpMatrix m(rows, cols, p);
    std::copy(v.begin(), v.end(), m.data_.begin());
    return m;
}

std::vector<std::vector<std::int64_t>> FpMatrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i][j] = (*this)(i, j);
    return out;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "] mod " << p_;
    return os.str();
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b, "hstack");
    if (a.rows() != b.rows())
        throw DimensionMismatch("hstack: row counts differ");
    FpMatrix c(a.rows(), a.cols() + b.cols(), a.modulus());
    c.set_block(0, 0, a);
    c.set_block(0, a.cols(), b);
    return c;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b, "vstack");
    if (a.cols() != b.cols())
        throw DimensionMismatch("vstack: column counts differ");
    FpMatrix c(a.rows() + b.rows(), a.cols(), a.modulus());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), 0, b);
    return c;
}

FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b, "block_diag");
    FpMatrix c(a.rows() + b.rows(), a.cols() + b.cols(), a.modulus());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), a.cols(), b);
    return c;
}

FpMatrix power(const FpMatrix& a, unsigned e) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("power of non-square matrix");
    FpMatrix r = FpMatrix::identity(a.rows(), a.modulus());
    FpMatrix base = a;
    while (e) {
        if (e & 1u)
            r = r * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return r;
}

FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b, "kron");
    const std::uint32_t p = a.modulus();
    FpMatrix c(a.rows() * b.rows(), a.cols() * b.cols(), p);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const std::uint64_t s = a(i, j);
            if (s == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c.at(i * b.rows() + k, j * b.cols() + l) = std::uint32_t((s * b(k, l)) % p);
        }
    return c;
}

// ---------------------------------------------------------------- echelon

Rref rref(const FpMatrix& a) {
    Rref out;
    out.reduced = a;
    out.pivots = eliminate(out.reduced, a.cols());
    out.rank = out.pivots.size();
    return out;
}

std::size_t rank(const FpMatrix& a) {
    FpMatrix m = a.rows() > a.cols() ? a.transpose() : a;
    return eliminate(m, m.cols()).size();
}

std::optional<FpMatrix> inverse(const FpMatrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = a.rows();
    FpMatrix aug = hstack(a, FpMatrix::identity(n, a.modulus()));
    const auto piv = eliminate(aug, n);
    if (piv.size() != n)
        return std::nullopt;
    return aug.block(0, n, n, n);
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(const FpMatrix& generators) {
    FpMatrix t = generators.transpose();
    const auto piv = eliminate(t, t.cols());
    Subspace s;
    s.basis_ = t.block(0, 0, piv.size(), t.cols()).transpose();
    s.pivots_ = piv;
    return s;
}

Subspace Subspace::zero(std::size_t ambient, std::uint32_t p) {
    Subspace s;
    s.basis_ = FpMatrix(ambient, 0, p);
    return s;
}

Subspace Subspace::full(std::size_t ambient, std::uint32_t p) {
    return span(FpMatrix::identity(ambient, p));
}

std::optional<FpVector> Subspace::coordinates(const FpVector& v) const {
    if (v.size() != ambient_dim())
        throw DimensionMismatch("coordinates: vector length differs from ambient dimension");
    FpVector c(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        c[i] = v[pivots_[i]];
    // reconstruct and compare
    const FpVector back = basis_ * c;
    if (back != v)
        return std::nullopt;
    return c;
}

FpMatrix Subspace::coordinates_of(const FpMatrix& m) const {
    if (m.rows() != ambient_dim())
        throw DimensionMismatch("coordinates_of: row count differs from ambient dimension");
    FpMatrix c = m.select_rows(pivots_);
    if (!(basis_ * c == m))
        throw InternalError("coordinates_of: vector outside subspace");
    return c;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim())
        return false;
    for (std::size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_.col(j)))
            return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim())
        throw DimensionMismatch("subspace sum: ambient dimensions differ");
    return span(hstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim())
        throw DimensionMismatch("subspace intersection: ambient dimensions differ");
    // [B1 | -B2] (a; b) = 0  =>  B1 a lies in both
    const FpMatrix sys = hstack(basis_, other.basis_.negated());
    const Subspace k = kernel_basis(sys);
    const FpMatrix a = k.basis().block(0, 0, dim(), k.dim());
    return span(basis_ * a);
}

Subspace kernel_basis(const FpMatrix& a) {
    const Rref r = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivots)
        is_pivot[c] = true;
    const Field field(a.modulus());
    std::vector<FpVector> gens;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j])
            continue;
        FpVector v(n, 0);
        v[j] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = field.neg(r.reduced(i, j));
        gens.push_back(std::move(v));
    }
    return Subspace::span(FpMatrix::from_columns(a.modulus(), n, gens));
}

Subspace image(const FpMatrix& a) { return Subspace::span(a); }

std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b) {
    if (b.size() != a.rows())
        throw DimensionMismatch("solve: rows(A)=" + std::to_string(a.rows()) + " but length(b)=" +
                                std::to_string(b.size()));
    auto x = solve_matrix(a, FpMatrix::column(a.modulus(), b));
    if (!x)
        return std::nullopt;
    return x->col(0);
}

std::optional<FpMatrix> solve_matrix(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b, "solve");
    if (b.rows() != a.rows())
        throw DimensionMismatch("solve: right-hand side has wrong row count");
    const std::size_t n = a.cols();
    FpMatrix aug = hstack(a, b);
    const auto piv = eliminate(aug, n);
    // inconsistent iff some zero row of the A part has a nonzero rhs
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        for (std::size_t j = n; j < aug.cols(); ++j)
            if (aug(i, j) != 0)
                return std::nullopt;
    FpMatrix x(n, b.cols(), a.modulus());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(piv[i], j) = aug(i, n + j);
    return x;
}

Cokernel cokernel(const FpMatrix& a) {
    const std::size_t d = a.rows();
    const std::uint32_t p = a.modulus();
    const Subspace im = Subspace::span(a);
    const auto& piv = im.pivot_rows();
    std::vector<bool> is_pivot(d, false);
    for (auto r : piv)
        is_pivot[r] = true;
    std::vector<std::size_t> free_rows;
    for (std::size_t r = 0; r < d; ++r)
        if (!is_pivot[r])
            free_rows.push_back(r);
    const Field field(p);
    Cokernel c{FpMatrix(free_rows.size(), d, p), FpMatrix(d, free_rows.size(), p)};
    // y  ->  y - sum_i y[piv_i] * basis_i, read at the free rows
    for (std::size_t k = 0; k < free_rows.size(); ++k) {
        const std::size_t q = free_rows[k];
        c.proj.at(k, q) = 1 % p;
        for (std::size_t i = 0; i < piv.size(); ++i)
            c.proj.at(k, piv[i]) = field.neg(im.basis()(q, i));
        c.section.at(q, k) = 1 % p;
    }
    return c;
}

FpMatrix complement_in(const Subspace& sub, const Subspace& whole) {
    // Pivot columns of [sub | whole] beyond the sub block are exactly the
    // greedy choice of whole-basis vectors independent of what came before.
    const Rref r = rref(hstack(sub.basis(), whole.basis()));
    std::vector<std::size_t> picked;
    for (auto c : r.pivots)
        if (c >= sub.dim())
            picked.push_back(c - sub.dim());
    return whole.basis().select_cols(picked);
}

// ---------------------------------------------------------------- KernelAccumulator

KernelAccumulator::KernelAccumulator(std::size_t unknowns, std::uint32_t p)
    : basis_(FpMatrix::identity(unknowns, p)) {}

void KernelAccumulator::add_constraints(const FpMatrix& c) {
    if (c.cols() != basis_.rows())
        throw DimensionMismatch("KernelAccumulator: constraint width differs from unknown count");
    if (basis_.cols() == 0 || c.rows() == 0)
        return;
    const Subspace k = kernel_basis(c * basis_);
    basis_ = basis_ * k.basis();
}

} // namespace monocat
