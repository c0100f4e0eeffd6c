#include "alex3/homology/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "alex3/errors.hpp"

namespace alex3 {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows())
        throw DomainError("matrix product shape mismatch: " + std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()));
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

mpz_class determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols())
        throw DomainError("determinant of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0)
        return 1;

    IntegerMatrix w = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && w.at(pivot, k) == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            for (std::size_t j = k; j < n; ++j)
                std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    mpz_class det = w.at(n - 1, n - 1);
    if (sign < 0)
        det = -det;
    return det;
}

bool is_unimodular(const IntegerMatrix& a) {
    if (a.rows() != a.cols())
        return false;
    mpz_class d = determinant(a);
    return d == 1 || d == -1;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

// row dst += c * row src
void row_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, const mpz_class& c) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(dst, j) += c * m.at(src, j);
}

// col dst += c * col src
void col_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, const mpz_class& c) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.at(i, dst) += c * m.at(i, src);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(r, j) = -m.at(r, j);
}

using Pivot = std::pair<std::size_t, std::size_t>;

std::optional<Pivot> min_abs_pivot(const IntegerMatrix& s, std::size_t from) {
    std::optional<Pivot> best;
    mpz_class best_abs;
    for (std::size_t i = from; i < s.rows(); ++i)
        for (std::size_t j = from; j < s.cols(); ++j) {
            if (s.at(i, j) == 0)
                continue;
            mpz_class mag = abs(s.at(i, j));
            if (!best || mag < best_abs) {
                best = Pivot{i, j};
                best_abs = mag;
            }
        }
    return best;
}

} // namespace

SNFResult smith_normal_form(const IntegerMatrix& a) {
    SNFResult res{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols())};
    IntegerMatrix& u = res.u;
    IntegerMatrix& s = res.s;
    IntegerMatrix& v = res.v;

    std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t t = 0; t < n; ++t) {
        std::optional<Pivot> pivot = min_abs_pivot(s, t);
        if (!pivot)
            break;

        while (true) {
            swap_rows(s, t, pivot->first);
            swap_rows(u, t, pivot->first);
            swap_cols(s, t, pivot->second);
            swap_cols(v, t, pivot->second);

            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0)
                    continue;
                mpz_class q = s.at(i, t) / s.at(t, t);
                row_axpy(s, i, t, -q);
                row_axpy(u, i, t, -q);
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0)
                    continue;
                mpz_class q = s.at(t, j) / s.at(t, t);
                col_axpy(s, j, t, -q);
                col_axpy(v, j, t, -q);
            }

            bool clear = true;
            for (std::size_t i = t + 1; clear && i < s.rows(); ++i)
                clear = s.at(i, t) == 0;
            for (std::size_t j = t + 1; clear && j < s.cols(); ++j)
                clear = s.at(t, j) == 0;
            if (!clear) {
                // a division left a remainder smaller than the pivot
                pivot = min_abs_pivot(s, t);
                continue;
            }

            // the pivot must divide everything below-right of it
            bool stuffed = false;
            for (std::size_t i = t + 1; !stuffed && i < s.rows(); ++i)
                for (std::size_t j = t + 1; !stuffed && j < s.cols(); ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        row_axpy(s, t, i, 1);
                        row_axpy(u, t, i, 1);
                        stuffed = true;
                    }
            if (!stuffed)
                break;
            pivot = min_abs_pivot(s, t);
        }

        if (s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    }
    return res;
}

std::size_t snf_rank(const SNFResult& r) {
    std::size_t n = std::min(r.s.rows(), r.s.cols());
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (r.s.at(i, i) != 0)
            ++rank;
    return rank;
}

std::vector<mpz_class> torsion_factors(const SNFResult& r) {
    std::vector<mpz_class> out;
    std::size_t n = std::min(r.s.rows(), r.s.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (r.s.at(i, i) >= 2)
            out.push_back(r.s.at(i, i));
    return out;
}

} // namespace alex3
