#pragma once

// Dense exact linear algebra over a prime field F_p.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "derhed/error.hpp"

namespace derhed {

using Elem = std::uint32_t;
using Vector = std::vector<Elem>;

class PrimeField {
public:
    static constexpr std::uint32_t default_characteristic = 32003;

    explicit PrimeField(std::uint32_t p = default_characteristic) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p)) {
            throw Error(ErrorKind::InvalidField,
                        "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
        }
    }

    /// Reads DERHED_FIELD_CHAR, falling back to the default prime.
    static PrimeField from_environment() {
        const char* raw = std::getenv("DERHED_FIELD_CHAR");
        if (raw == nullptr || *raw == '\0') return PrimeField{};
        char* end = nullptr;
        const unsigned long long value = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || value >= (1ull << 31)) {
            throw Error(ErrorKind::InvalidField, std::string("DERHED_FIELD_CHAR is not a valid prime: ") + raw);
        }
        return PrimeField(static_cast<std::uint32_t>(value));
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

    std::uint32_t characteristic() const noexcept { return p_; }

    Elem reduce(std::int64_t v) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        std::int64_t r = v % p;
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const noexcept {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : static_cast<Elem>(std::uint64_t{a} + p_ - b); }
    Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>(std::uint64_t{a} * b % p_); }

    Elem pow(Elem base, std::uint64_t e) const noexcept {
        Elem result = 1;
        while (e > 0) {
            if (e & 1u) result = mul(result, base);
            base = mul(base, base);
            e >>= 1u;
        }
        return result;
    }

    // a must be nonzero.
    Elem inv(Elem a) const noexcept { return pow(a, p_ - 2); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(PrimeField field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Builds from signed integer rows, reducing mod p.
    static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = field.reduce(rows[i][j]);
        }
        return m;
    }

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const {
        for (Elem e : data_) {
            if (e != 0) return false;
        }
        return true;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw Error(ErrorKind::InvalidInput, "matrix shape mismatch in product");
        Matrix out(field_, rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    out(i, j) = field_.add(out(i, j), field_.mul(a, rhs(k, j)));
                }
            }
        }
        return out;
    }

    Vector apply(std::span<const Elem> v) const {
        if (v.size() != cols_) throw Error(ErrorKind::InvalidInput, "vector length mismatch");
        Vector out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
            }
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    PrimeField field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// Reduced row echelon form of a matrix together with its pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

inline Echelon row_reduce(Matrix m) {
    const PrimeField& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead_row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
        }
        const Elem scale = f.inv(m(lead_row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) = f.mul(m(lead_row, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead_row) continue;
            const Elem factor = m(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j) {
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(lead_row, j)));
            }
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

/// Basis of {v : m v = 0}, one vector per free column of the echelon form.
inline std::vector<Vector> nullspace(const Matrix& m) {
    const auto [reduced, pivots] = row_reduce(m);
    const PrimeField& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(reduced(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, std::span<const Elem> b) {
    if (b.size() != m.rows()) throw Error(ErrorKind::InvalidInput, "right-hand side length mismatch");
    Matrix augmented(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) augmented(i, j) = m(i, j);
        augmented(i, m.cols()) = b[i];
    }
    const auto [reduced, pivots] = row_reduce(std::move(augmented));
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, m.cols());
    return x;
}

/// Matrix whose columns are the given vectors (all of length `length`).
inline Matrix from_columns(PrimeField field, std::size_t length, std::span<const Vector> columns) {
    Matrix m(field, length, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (std::size_t i = 0; i < length; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

} // namespace derhed
