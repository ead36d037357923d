#include "forms/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace forms {

LMat to_int_laurent(const ZMat& m) {
    return m.map([](const Int& x) { return Laurent(x); });
}

std::optional<LMat> to_lambda(const QMat& m) {
    LMat out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).in_lambda()) return std::nullopt;
            out(i, j) = m(i, j).as_laurent();
        }
    return out;
}

std::optional<ZMat> to_integer(const LMat& m) {
    ZMat out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const Laurent& x = m(i, j);
            if (x.is_zero()) continue;
            if (x.lo() != 0 || x.hi() != 0) return std::nullopt;
            out(i, j) = x.coeff(0);
        }
    return out;
}

namespace {

/* fraction-free elimination; div must perform exact division */
template <typename T, typename Div>
T bareiss_det(Mat<T> m, Div div) {
    if (m.rows() != m.cols()) throw dimension_mismatch("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return T(1);
    int sign = 1;
    T prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t p = k;
        while (p < n && m(p, k) == T()) ++p;
        if (p == n) return T();
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = T();
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

} // namespace

Laurent det_laurent(const LMat& m) {
    return bareiss_det(m, [](const Laurent& a, const Laurent& b) {
        auto q = divide_exact(a, b);
        if (!q) throw invariant_violation("fraction-free elimination produced inexact division");
        return *q;
    });
}

Int det_integer(const ZMat& m) {
    return bareiss_det(m, [](const Int& a, const Int& b) {
        Int q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    });
}

RatFunc det_rat(const QMat& m) {
    return bareiss_det(m, [](const RatFunc& a, const RatFunc& b) { return a / b; });
}

namespace {

struct Echelon {
    QMat m;                         /* reduced row echelon form */
    std::vector<size_t> pivot_cols; /* one entry per pivot row */
};

Echelon rref(QMat m) {
    Echelon e{std::move(m), {}};
    size_t pr = 0;
    for (size_t c = 0; c < e.m.cols() && pr < e.m.rows(); ++c) {
        size_t p = pr;
        while (p < e.m.rows() && e.m(p, c).is_zero()) ++p;
        if (p == e.m.rows()) continue;
        if (p != pr)
            for (size_t j = 0; j < e.m.cols(); ++j) std::swap(e.m(p, j), e.m(pr, j));
        const RatFunc inv = RatFunc(1) / e.m(pr, c);
        for (size_t j = c; j < e.m.cols(); ++j) e.m(pr, j) = e.m(pr, j) * inv;
        for (size_t i = 0; i < e.m.rows(); ++i) {
            if (i == pr || e.m(i, c).is_zero()) continue;
            const RatFunc f = e.m(i, c);
            for (size_t j = c; j < e.m.cols(); ++j)
                e.m(i, j) = e.m(i, j) - f * e.m(pr, j);
        }
        e.pivot_cols.push_back(c);
        ++pr;
    }
    return e;
}

} // namespace

size_t rank(const QMat& m) { return rref(m).pivot_cols.size(); }

std::optional<QMat> solve(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows()) throw dimension_mismatch("solve shape mismatch");
    Echelon e = rref(hconcat(a, b));
    /* a pivot inside the right block means the system is inconsistent */
    for (size_t c : e.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    QMat x(a.cols(), b.cols());
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
        for (size_t j = 0; j < b.cols(); ++j)
            x(e.pivot_cols[r], j) = e.m(r, a.cols() + j);
    return x;
}

std::optional<QMat> inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("inverse of non-square matrix");
    Echelon e = rref(hconcat(m, to_rat(LMat::identity(m.rows()))));
    if (e.pivot_cols.size() != m.rows() || (!e.pivot_cols.empty() && e.pivot_cols.back() >= m.cols()))
        return std::nullopt;
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
        if (e.pivot_cols[r] != r) return std::nullopt;
    return e.m.block(0, m.cols(), m.rows(), m.cols());
}

QMat kernel(const QMat& m) {
    Echelon e = rref(m);
    std::vector<size_t> free_cols;
    {
        size_t r = 0;
        for (size_t c = 0; c < m.cols(); ++c) {
            if (r < e.pivot_cols.size() && e.pivot_cols[r] == c)
                ++r;
            else
                free_cols.push_back(c);
        }
    }
    QMat k(m.cols(), free_cols.size());
    for (size_t j = 0; j < free_cols.size(); ++j) {
        const size_t f = free_cols[j];
        k(f, j) = RatFunc(1);
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            k(e.pivot_cols[r], j) = -e.m(r, f);
    }
    return k;
}

LMat saturate_columns(const QMat& m) {
    LMat out(m.rows(), m.cols());
    for (size_t j = 0; j < m.cols(); ++j) {
        Laurent l(1);
        for (size_t i = 0; i < m.rows(); ++i) {
            const Laurent& d = m(i, j).den();
            const Laurent g = laurent_gcd(l, d);
            l = *divide_exact(l * d, g);
        }
        std::vector<Laurent> col(m.rows());
        Laurent content;
        for (size_t i = 0; i < m.rows(); ++i) {
            const RatFunc& x = m(i, j);
            col[i] = x.num() * *divide_exact(l, x.den());
            content = laurent_gcd(content, col[i]);
        }
        if (content.is_zero()) continue;
        for (size_t i = 0; i < m.rows(); ++i)
            out(i, j) = *divide_exact(col[i], content);
    }
    return out;
}

std::optional<ZMat> integer_right_inverse(const ZMat& m) {
    const size_t g = m.rows(), n = m.cols();
    if (g > n) return std::nullopt;
    ZMat w = m;
    ZMat u = ZMat::identity(n);
    auto swap_cols = [&](ZMat& a, size_t x, size_t y) {
        for (size_t i = 0; i < a.rows(); ++i) std::swap(a(i, x), a(i, y));
    };
    auto addmul_col = [&](ZMat& a, size_t dst, size_t src, const Int& f) {
        for (size_t i = 0; i < a.rows(); ++i) a(i, dst) += f * a(i, src);
    };
    for (size_t r = 0; r < g; ++r) {
        for (;;) {
            size_t best = n;
            for (size_t j = r; j < n; ++j) {
                if (w(r, j) == 0) continue;
                if (best == n || cmp(abs(w(r, j)), abs(w(r, best))) < 0) best = j;
            }
            if (best == n) return std::nullopt; /* row rank too small */
            if (best != r) {
                swap_cols(w, best, r);
                swap_cols(u, best, r);
            }
            bool clean = true;
            for (size_t j = r + 1; j < n; ++j) {
                if (w(r, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w(r, j).get_mpz_t(), w(r, r).get_mpz_t());
                addmul_col(w, j, r, -q);
                addmul_col(u, j, r, -q);
                if (w(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
    }
    /* w restricted to the first g columns is lower triangular; back-solve
     * h y = e_c over the integers for each unit vector */
    ZMat y(g, g);
    for (size_t c = 0; c < g; ++c)
        for (size_t r = 0; r < g; ++r) {
            Int rhs = (r == c) ? Int(1) : Int(0);
            for (size_t k = 0; k < r; ++k) rhs -= w(r, k) * y(k, c);
            if (rhs % w(r, r) != 0) return std::nullopt;
            y(r, c) = rhs / w(r, r);
        }
    ZMat x(n, g);
    x.set_block(0, 0, y);
    x = u * x;
    if (m * x != ZMat::identity(g))
        throw invariant_violation("integer right inverse verification failed");
    return x;
}

std::string to_string(const LMat& m) {
    std::string s;
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i) s += "; ";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += to_string(m(i, j));
        }
    }
    return s;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t p = s.find(sep, start);
        parts.push_back(s.substr(start, p == std::string::npos ? p : p - start));
        if (p == std::string::npos) break;
        start = p + 1;
    }
    return parts;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

LMat parse_laurent_matrix(const std::string& s) {
    std::vector<std::vector<Laurent>> rows;
    for (const std::string& row : split(s, ';')) {
        std::vector<Laurent> entries;
        for (const std::string& cell : split(row, ',')) {
            const std::string c = strip(cell);
            if (c.empty()) throw parse_error("empty matrix entry");
            entries.push_back(parse_laurent(c));
        }
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw parse_error("empty matrix");
    const size_t cols = rows[0].size();
    for (auto& r : rows)
        if (r.size() != cols) throw parse_error("ragged matrix rows");
    LMat m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace forms
