#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include "tautilt/fields.hpp"

namespace tautilt {

// Dense matrix over a field context. Sizes in this project are tiny (at most
// a few dozen rows), so everything is plain Gaussian elimination; the one
// concession to speed is a bit-packed elimination path for F_2, which the
// module-enumeration scan leans on heavily.
template <class K>
struct Mat {
    using E = typename K::Elem;

    K f;
    int r = 0, c = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(K field, int rows, int cols)
        : f(field), r(rows), c(cols), a(static_cast<size_t>(rows) * cols, field.zero()) {}

    E& at(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
    const E& at(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }

    static Mat identity(K field, int n) {
        Mat m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!f.is_zero(x)) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(f, c, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        engine_check(x.c == y.r, "matrix product shape mismatch");
        Mat z(x.f, x.r, y.c);
        for (int i = 0; i < x.r; ++i)
            for (int k = 0; k < x.c; ++k) {
                const auto& xik = x.at(i, k);
                if (x.f.is_zero(xik)) continue;
                for (int j = 0; j < y.c; ++j)
                    z.at(i, j) = x.f.add(z.at(i, j), x.f.mul(xik, y.at(k, j)));
            }
        return z;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        engine_check(x.r == y.r && x.c == y.c, "matrix sum shape mismatch");
        Mat z = x;
        for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.f.add(x.a[i], y.a[i]);
        return z;
    }

    friend Mat operator-(const Mat& x, const Mat& y) {
        engine_check(x.r == y.r && x.c == y.c, "matrix difference shape mismatch");
        Mat z = x;
        for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.f.sub(x.a[i], y.a[i]);
        return z;
    }

    Mat scaled(const E& s) const {
        Mat z = *this;
        for (auto& x : z.a) x = f.mul(x, s);
        return z;
    }

    bool operator==(const Mat& o) const {
        if (r != o.r || c != o.c) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!f.eq(a[i], o.a[i])) return false;
        return true;
    }

    // Horizontal concatenation [this | o].
    Mat hstack(const Mat& o) const {
        engine_check(r == o.r, "hstack row mismatch");
        Mat z(f, r, c + o.c);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < c; ++j) z.at(i, j) = at(i, j);
            for (int j = 0; j < o.c; ++j) z.at(i, c + j) = o.at(i, j);
        }
        return z;
    }

    Mat vstack(const Mat& o) const {
        engine_check(c == o.c, "vstack column mismatch");
        Mat z(f, r + o.r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) z.at(i, j) = at(i, j);
        for (int i = 0; i < o.r; ++i)
            for (int j = 0; j < c; ++j) z.at(r + i, j) = o.at(i, j);
        return z;
    }

    std::vector<E> mul_vec(const std::vector<E>& v) const {
        engine_check(static_cast<int>(v.size()) == c, "mat*vec shape mismatch");
        std::vector<E> out(r, f.zero());
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (!f.is_zero(at(i, j))) out[i] = f.add(out[i], f.mul(at(i, j), v[j]));
        return out;
    }
};

namespace detail {

// Bit-packed RREF over F_2. Rows are arrays of 64-bit words.
inline std::vector<int> rref_f2(Mat<PrimeField>& m) {
    const int words = (m.c + 63) / 64;
    std::vector<uint64_t> rows(static_cast<size_t>(m.r) * words, 0);
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j)
            if (m.at(i, j)) rows[static_cast<size_t>(i) * words + (j >> 6)] |= 1ull << (j & 63);

    auto bit = [&](int i, int j) {
        return (rows[static_cast<size_t>(i) * words + (j >> 6)] >> (j & 63)) & 1u;
    };

    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.c && row < m.r; ++col) {
        int p = -1;
        for (int i = row; i < m.r; ++i)
            if (bit(i, col)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int w = 0; w < words; ++w)
                std::swap(rows[static_cast<size_t>(p) * words + w],
                          rows[static_cast<size_t>(row) * words + w]);
        for (int i = 0; i < m.r; ++i) {
            if (i == row || !bit(i, col)) continue;
            for (int w = 0; w < words; ++w)
                rows[static_cast<size_t>(i) * words + w] ^=
                    rows[static_cast<size_t>(row) * words + w];
        }
        pivots.push_back(col);
        ++row;
    }
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j) m.at(i, j) = static_cast<uint32_t>(bit(i, j));
    return pivots;
}

}  // namespace detail

// In-place reduced row echelon form; returns the pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& m) {
    if constexpr (std::is_same_v<K, PrimeField>) {
        if (m.f.p == 2) return detail::rref_f2(m);
    }
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.c && row < m.r; ++col) {
        int p = -1;
        for (int i = row; i < m.r; ++i)
            if (!m.f.is_zero(m.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.c; ++j) std::swap(m.at(p, j), m.at(row, j));
        auto piv_inv = m.f.inv(m.at(row, col));
        for (int j = col; j < m.c; ++j) m.at(row, j) = m.f.mul(m.at(row, j), piv_inv);
        for (int i = 0; i < m.r; ++i) {
            if (i == row || m.f.is_zero(m.at(i, col))) continue;
            auto s = m.at(i, col);
            for (int j = col; j < m.c; ++j)
                m.at(i, j) = m.f.sub(m.at(i, j), m.f.mul(s, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m) {
    return static_cast<int>(rref(m).size());
}

// Columns of the result span ker(m).
template <class K>
Mat<K> nullspace(const Mat<K>& m) {
    Mat<K> w = m;
    auto pivots = rref(w);
    std::vector<bool> is_pivot(m.c, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.c; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Mat<K> basis(m.f, m.c, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = m.f.one();
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            basis.at(pivots[pi], static_cast<int>(k)) =
                m.f.neg(w.at(static_cast<int>(pi), fc));
    }
    return basis;
}

// One solution of A x = b, if any.
template <class K>
std::optional<std::vector<typename K::Elem>> solve(const Mat<K>& A,
                                                   const std::vector<typename K::Elem>& b) {
    engine_check(static_cast<int>(b.size()) == A.r, "solve: rhs size mismatch");
    Mat<K> aug(A.f, A.r, A.c + 1);
    for (int i = 0; i < A.r; ++i) {
        for (int j = 0; j < A.c; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.c) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.c) return std::nullopt;  // inconsistent
    std::vector<typename K::Elem> x(A.c, A.f.zero());
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(static_cast<int>(pi), A.c);
    return x;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& A) {
    engine_check(A.r == A.c, "inverse of non-square matrix");
    Mat<K> aug = A.hstack(Mat<K>::identity(A.f, A.r));
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < A.r) return std::nullopt;
    Mat<K> inv(A.f, A.r, A.r);
    for (int i = 0; i < A.r; ++i)
        for (int j = 0; j < A.r; ++j) inv.at(i, j) = aug.at(i, A.c + j);
    return inv;
}

template <class K>
typename K::Elem det(Mat<K> m) {
    engine_check(m.r == m.c, "det of non-square matrix");
    auto d = m.f.one();
    int row = 0;
    for (int col = 0; col < m.c; ++col) {
        int p = -1;
        for (int i = row; i < m.r; ++i)
            if (!m.f.is_zero(m.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) return m.f.zero();
        if (p != row) {
            for (int j = 0; j < m.c; ++j) std::swap(m.at(p, j), m.at(row, j));
            d = m.f.neg(d);
        }
        d = m.f.mul(d, m.at(row, col));
        auto piv_inv = m.f.inv(m.at(row, col));
        for (int i = row + 1; i < m.r; ++i) {
            if (m.f.is_zero(m.at(i, col))) continue;
            auto s = m.f.mul(m.at(i, col), piv_inv);
            for (int j = col; j < m.c; ++j)
                m.at(i, j) = m.f.sub(m.at(i, j), m.f.mul(s, m.at(row, j)));
        }
        ++row;
    }
    return d;
}

// Incremental row-space reducer: keeps a row basis in echelon form and
// reports whether an inserted vector enlarged the span. Canonical form is the
// fully reduced echelon basis, usable as a dedup key.
template <class K>
class RowSpan {
public:
    RowSpan(K field, int width) : f_(field), width_(width) {}

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Returns true if v was independent of the current span.
    bool insert(std::vector<typename K::Elem> v) {
        reduce(v);
        int lead = leading(v);
        if (lead < 0) return false;
        auto s = f_.inv(v[lead]);
        for (auto& x : v) x = f_.mul(x, s);
        // back-eliminate the new leading column from existing rows
        for (auto& row : rows_) {
            if (f_.is_zero(row[lead])) continue;
            auto t = row[lead];
            for (int j = 0; j < width_; ++j) row[j] = f_.sub(row[j], f_.mul(t, v[j]));
        }
        auto it = rows_.begin();
        while (it != rows_.end() && leading(*it) < lead) ++it;
        rows_.insert(it, std::move(v));
        return true;
    }

    bool contains(std::vector<typename K::Elem> v) const {
        reduce(v);
        return leading(v) < 0;
    }

    const std::vector<std::vector<typename K::Elem>>& rows() const { return rows_; }

    bool operator==(const RowSpan& o) const {
        if (width_ != o.width_ || rows_.size() != o.rows_.size()) return false;
        for (size_t i = 0; i < rows_.size(); ++i)
            for (int j = 0; j < width_; ++j)
                if (!f_.eq(rows_[i][j], o.rows_[i][j])) return false;
        return true;
    }

private:
    int leading(const std::vector<typename K::Elem>& v) const {
        for (int j = 0; j < width_; ++j)
            if (!f_.is_zero(v[j])) return j;
        return -1;
    }

    void reduce(std::vector<typename K::Elem>& v) const {
        for (const auto& row : rows_) {
            int lead = leading(row);
            if (f_.is_zero(v[lead])) continue;
            auto t = v[lead];
            for (int j = 0; j < width_; ++j) v[j] = f_.sub(v[j], f_.mul(t, row[j]));
        }
    }

    K f_;
    int width_;
    std::vector<std::vector<typename K::Elem>> rows_;  // echelon, sorted by leading col
};

}  // namespace tautilt
