#include "ei/snf.hpp"

#include <algorithm>
#include <sstream>

namespace ei {

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << (*this)(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

namespace {

struct SnfWork {
    IntMatrix s, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s(a, j), s(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s(i, a), s(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
    }
    void row_sub(std::size_t i, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) -= q * s(t, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) -= q * u(t, j);
    }
    void col_sub(std::size_t j, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < s.rows(); ++i) s(i, j) -= q * s(i, t);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) -= q * v(i, t);
    }
    void col_add(std::size_t j, std::size_t t) { col_sub(j, t, Int(-1)); }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) = -s(i, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = -u(i, j);
    }

    // Smallest-nonzero-|entry| pivot in the trailing submatrix; keeps growth down.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < s.rows(); ++i)
            for (std::size_t j = t; j < s.cols(); ++j) {
                const Int& e = s(i, j);
                if (e == 0) continue;
                Int a = abs_int(e);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void diagonalize(std::size_t t_start) {
        std::size_t n = std::min(s.rows(), s.cols());
        for (std::size_t t = t_start; t < n; ++t) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool clean = true;
                for (std::size_t i = 0; i < s.rows(); ++i) {
                    if (i == t || s(i, t) == 0) continue;
                    row_sub(i, t, round_div(s(i, t), s(t, t)));
                    if (s(i, t) != 0) {
                        // remainder strictly smaller in |.| than the pivot
                        swap_rows(t, i);
                        clean = false;
                        break;
                    }
                }
                if (!clean) continue;
                for (std::size_t j = 0; j < s.cols(); ++j) {
                    if (j == t || s(t, j) == 0) continue;
                    col_sub(j, t, round_div(s(t, j), s(t, t)));
                    if (s(t, j) != 0) {
                        swap_cols(t, j);
                        clean = false;
                        break;
                    }
                }
                if (clean) break;
            }
        }
    }

    void normalize_signs() {
        std::size_t n = std::min(s.rows(), s.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (s(i, i) < 0) negate_row(i);
    }
};

}  // namespace

SnfResult snf(const IntMatrix& m) {
    SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    w.diagonalize(0);
    w.normalize_signs();
    std::size_t n = std::min(m.rows(), m.cols());
    // Enforce d_i | d_j: fold the offending entry back in and re-reduce. Each
    // pass replaces (d_i, d_j) by (gcd, lcm), so the loop terminates.
    for (;;) {
        std::size_t bi = n, bj = n;
        for (std::size_t i = 0; i + 1 < n && bi == n; ++i) {
            if (w.s(i, i) == 0) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (w.s(j, j) % w.s(i, i) != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        }
        if (bi == n) break;
        w.col_add(bi, bj);  // puts d_j into position (j, i)
        w.diagonalize(bi);
        w.normalize_signs();
    }
    return SnfResult{std::move(w.u), std::move(w.s), std::move(w.v)};
}

AbGroupStructure present_quotient(std::size_t num_generators, const IntMatrix& relations) {
    if (relations.rows() > 0 && relations.cols() != num_generators)
        throw std::invalid_argument("relations must have num_generators columns");
    IntMatrix rel = relations;
    if (rel.cols() != num_generators) rel = IntMatrix(0, num_generators);
    SnfResult r = snf(rel);

    AbGroupStructure g;
    g.num_generators = num_generators;
    g.projection = std::move(r.v);
    std::size_t n = std::min(rel.rows(), rel.cols());
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = r.s(i, i);
        if (d == 0) break;
        ++rank;
        if (d >= 2) {
            g.torsion.push_back(d);
            g.torsion_cols.push_back(i);
        }
    }
    for (std::size_t i = rank; i < num_generators; ++i) g.free_cols.push_back(i);
    g.free_rank = num_generators - rank;
    return g;
}

GroupElementClass reduce_element(const AbGroupStructure& g, const std::vector<Int>& coords) {
    if (coords.size() != g.num_generators)
        throw std::invalid_argument("coordinate vector length does not match presentation");
    std::vector<Int> y = g.projection.apply_left(coords);
    GroupElementClass cls;
    cls.torsion_part.reserve(g.torsion.size());
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        Int m = y[g.torsion_cols[i]] % g.torsion[i];
        if (m < 0) m += g.torsion[i];
        cls.torsion_part.push_back(m);
    }
    cls.free_part.reserve(g.free_cols.size());
    for (std::size_t c : g.free_cols) cls.free_part.push_back(y[c]);
    return cls;
}

bool GroupElementClass::is_zero() const {
    for (const Int& a : free_part)
        if (a != 0) return false;
    for (const Int& a : torsion_part)
        if (a != 0) return false;
    return true;
}

std::string GroupElementClass::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "free(";
    for (std::size_t i = 0; i < free_part.size(); ++i) os << (i ? "," : "") << free_part[i].str();
    os << ") torsion(";
    for (std::size_t i = 0; i < torsion_part.size(); ++i)
        os << (i ? "," : "") << torsion_part[i].str();
    os << ")";
    return os.str();
}

std::string AbGroupStructure::structure_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " \xE2\x8A\x95 ";  // " ⊕ "
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank >= 2) {
        sep();
        os << "Z^" << free_rank;
    }
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        sep();
        if (j - i == 1)
            os << "Z/" << torsion[i].str();
        else
            os << "(Z/" << torsion[i].str() << ")^" << (j - i);
        i = j;
    }
    return os.str();
}

}  // namespace ei
