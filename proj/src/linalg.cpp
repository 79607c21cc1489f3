#include "hallalg/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace hallalg::exact {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p > 97) throw precondition_error("field modulus must be a prime in [2, 97]");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw precondition_error("field modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw precondition_error("inverse of zero in F_p");
    // Fermat: a^(p-2)
    std::uint32_t r = 1, base = a % p_, e = p_ - 2;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, 0) {}

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, PrimeField field,
                   std::vector<std::uint32_t> entries)
    : rows_(rows), cols_(cols), field_(field), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw precondition_error("matrix entry count does not match its shape");
    for (auto& e : entries_) e %= field_.p();
}

MatrixFp MatrixFp::identity(std::size_t n, PrimeField field) {
    MatrixFp m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatrixFp MatrixFp::transpose() const {
    MatrixFp t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

MatrixFp operator*(const MatrixFp& a, const MatrixFp& b) {
    if (a.cols_ != b.rows_ || a.field_ != b.field_)
        throw precondition_error("matrix product shape/field mismatch");
    MatrixFp r(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            std::uint32_t aik = a.at(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.set(i, j, a.field_.add(r.at(i, j), a.field_.mul(aik, b.at(k, j))));
        }
    return r;
}

MatrixFp operator+(const MatrixFp& a, const MatrixFp& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_)
        throw precondition_error("matrix sum shape/field mismatch");
    MatrixFp r(a.rows_, a.cols_, a.field_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        r.entries_[i] = a.field_.add(a.entries_[i], b.entries_[i]);
    return r;
}

bool operator==(const MatrixFp& a, const MatrixFp& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
           a.entries_ == b.entries_;
}

bool MatrixFp::is_invertible() const { return rows_ == cols_ && rank(*this) == rows_; }

std::string MatrixFp::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << at(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// In-place forward elimination; returns pivot columns.  When `reduced` is
// set, also clears above pivots and scales pivots to 1 (RREF).
std::vector<std::size_t> eliminate(MatrixFp& m, bool reduced) {
    const PrimeField& F = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                auto t = m.at(row, c);
                m.set(row, c, m.at(sel, c));
                m.set(sel, c, t);
            }
        std::uint32_t piv_inv = F.inv(m.at(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m.set(row, c, F.mul(m.at(row, c), piv_inv));
        std::size_t lo = reduced ? 0 : row + 1;
        for (std::size_t r = lo; r < m.rows(); ++r) {
            if (r == row) continue;
            std::uint32_t f = m.at(r, col);
            if (!f) continue;
            for (std::size_t c = col; c < m.cols(); ++c)
                m.set(r, c, F.sub(m.at(r, c), F.mul(f, m.at(row, c))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const MatrixFp& m) {
    MatrixFp w = m;
    return eliminate(w, false).size();
}

MatrixFp rref(const MatrixFp& m) {
    MatrixFp w = m;
    auto pivots = eliminate(w, true);
    MatrixFp out(pivots.size(), m.cols(), m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, w.at(r, c));
    return out;
}

MatrixFp nullspace(const MatrixFp& m) {
    const PrimeField& F = m.field();
    MatrixFp r = rref(m);
    std::vector<std::size_t> pivots(r.rows());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = 0;
        while (r.at(i, c) == 0) ++c;
        pivots[i] = c;
        is_pivot[c] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    MatrixFp basis(free_cols.size(), m.cols(), F);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        basis.set(i, free_cols[i], 1);
        for (std::size_t j = 0; j < pivots.size(); ++j)
            basis.set(i, pivots[j], F.neg(r.at(j, free_cols[i])));
    }
    return basis;
}

MatrixFp solve_exact(const MatrixFp& a, const MatrixFp& b) {
    if (a.rows() != b.rows() || a.field() != b.field())
        throw precondition_error("solve: shape/field mismatch");
    MatrixFp aug(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) aug.set(r, a.cols() + c, b.at(r, c));
    }
    auto pivots = eliminate(aug, true);
    for (auto p : pivots)
        if (p >= a.cols()) throw precondition_error("solve: right-hand side outside column span");
    if (pivots.size() != a.cols()) throw precondition_error("solve: matrix lacks full column rank");
    MatrixFp x(a.cols(), b.cols(), a.field());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < b.cols(); ++c) x.set(pivots[i], c, aug.at(i, a.cols() + c));
    return x;
}

bool rows_in_rref_span(const MatrixFp& basis, const MatrixFp& vectors) {
    if (basis.cols() != vectors.cols() || basis.field() != vectors.field())
        throw precondition_error("span test: shape/field mismatch");
    const PrimeField& F = basis.field();
    std::vector<std::size_t> pivots(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t c = 0;
        while (c < basis.cols() && basis.at(i, c) == 0) ++c;
        pivots[i] = c;
    }
    for (std::size_t vr = 0; vr < vectors.rows(); ++vr) {
        std::vector<std::uint32_t> v(vectors.cols());
        for (std::size_t c = 0; c < vectors.cols(); ++c) v[c] = vectors.at(vr, c);
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            std::uint32_t f = v[pivots[i]];
            if (!f) continue;
            for (std::size_t c = 0; c < vectors.cols(); ++c)
                v[c] = F.sub(v[c], F.mul(f, basis.at(i, c)));
        }
        for (auto e : v)
            if (e) return false;
    }
    return true;
}

void for_each_subspace(std::size_t ambient_dim, std::size_t sub_dim, PrimeField field,
                       const std::function<void(const MatrixFp&)>& visit) {
    if (sub_dim > ambient_dim)
        throw precondition_error("subspace dimension exceeds ambient dimension");
    const std::uint32_t p = field.p();
    std::vector<std::size_t> pivot(sub_dim);
    for (std::size_t i = 0; i < sub_dim; ++i) pivot[i] = i;

    auto emit_for_pivots = [&]() {
        // Free positions: (row i, col c) with c > pivot[i], c not a pivot col.
        std::vector<bool> is_pivot(ambient_dim, false);
        for (auto pc : pivot) is_pivot[pc] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < sub_dim; ++i)
            for (std::size_t c = pivot[i] + 1; c < ambient_dim; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(i, c);
        std::vector<std::uint32_t> assign(free_pos.size(), 0);
        MatrixFp m(sub_dim, ambient_dim, field);
        for (std::size_t i = 0; i < sub_dim; ++i) m.set(i, pivot[i], 1);
        for (;;) {
            for (std::size_t k = 0; k < free_pos.size(); ++k)
                m.set(free_pos[k].first, free_pos[k].second, assign[k]);
            visit(m);
            // next assignment, last position fastest
            std::size_t k = free_pos.size();
            while (k > 0) {
                --k;
                if (++assign[k] < p) break;
                assign[k] = 0;
                if (k == 0) return;
            }
            if (free_pos.empty()) return;
        }
    };

    if (sub_dim == 0) {
        visit(MatrixFp(0, ambient_dim, field));
        return;
    }
    // pivot column sets in lexicographic order
    for (;;) {
        emit_for_pivots();
        std::size_t i = sub_dim;
        while (i > 0) {
            --i;
            std::size_t limit = ambient_dim - (sub_dim - i);
            if (pivot[i] < limit) {
                ++pivot[i];
                for (std::size_t j = i + 1; j < sub_dim; ++j) pivot[j] = pivot[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

std::vector<MatrixFp> enumerate_subspaces(std::size_t ambient_dim, std::size_t sub_dim,
                                          PrimeField field) {
    std::vector<MatrixFp> out;
    for_each_subspace(ambient_dim, sub_dim, field, [&](const MatrixFp& m) { out.push_back(m); });
    return out;
}

}  // namespace hallalg::exact
