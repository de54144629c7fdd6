#include "clasper/smith.hpp"

#include <algorithm>
#include <cassert>

namespace clasper {

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> small, large;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            small.push_back(i);
            if (i * i != n) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::string to_string(const Int& x) { return x.str(); }

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& other) const {
    assert(cols_ == other.rows_);
    Mat out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

void Mat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Mat::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void Mat::add_row(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void Mat::add_col(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void Mat::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void Mat::negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) = -at(k, i);
}

std::vector<Int> Mat::apply(const std::vector<Int>& v) const {
    assert(v.size() == cols_);
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

Mat Mat::transposed() const {
    Mat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

namespace {

// Locates the entry of smallest nonzero absolute value in the submatrix
// starting at (s, s), scanning row-major so ties resolve deterministically.
bool find_pivot(const Mat& d, std::size_t s, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = s; i < d.rows(); ++i)
        for (std::size_t j = s; j < d.cols(); ++j) {
            const Int& x = d.at(i, j);
            if (x == 0) continue;
            Int a = boost::multiprecision::abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

bool row_col_clear(const Mat& d, std::size_t s) {
    for (std::size_t i = s + 1; i < d.rows(); ++i)
        if (d.at(i, s) != 0) return false;
    for (std::size_t j = s + 1; j < d.cols(); ++j)
        if (d.at(s, j) != 0) return false;
    return true;
}

}  // namespace

SmithResult smith(const Mat& a) {
    SmithResult res;
    const std::size_t m = a.rows(), n = a.cols();
    res.d = a;
    res.u = Mat::identity(m);
    res.uinv = Mat::identity(m);
    res.v = Mat::identity(n);
    res.vinv = Mat::identity(n);
    Mat& d = res.d;

    const std::size_t nmin = std::min(m, n);
    for (std::size_t s = 0; s < nmin; ++s) {
        std::size_t pr = s, pc = s;
        if (!find_pivot(d, s, pr, pc)) break;  // submatrix all zero
        for (;;) {
            d.swap_rows(s, pr);
            res.u.swap_rows(s, pr);
            res.uinv.swap_cols(s, pr);
            d.swap_cols(s, pc);
            res.v.swap_cols(s, pc);
            res.vinv.swap_rows(s, pc);

            // clear below and to the right of the pivot
            for (std::size_t i = s + 1; i < m; ++i) {
                if (d.at(i, s) == 0) continue;
                Int q = d.at(i, s) / d.at(s, s);
                if (q != 0) {
                    d.add_row(i, s, -q);
                    res.u.add_row(i, s, -q);
                    res.uinv.add_col(s, i, q);
                }
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (d.at(s, j) == 0) continue;
                Int q = d.at(s, j) / d.at(s, s);
                if (q != 0) {
                    d.add_col(j, s, -q);
                    res.v.add_col(j, s, -q);
                    res.vinv.add_row(s, j, q);
                }
            }
            if (!row_col_clear(d, s)) {
                // remainders survived; pick a fresh pivot and repeat
                find_pivot(d, s, pr, pc);
                continue;
            }
            // divisibility fix-up: every remaining entry must be a multiple
            // of the pivot before moving on
            bool divides_all = true;
            for (std::size_t i = s + 1; i < m && divides_all; ++i)
                for (std::size_t j = s + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        d.add_row(s, i, 1);
                        res.u.add_row(s, i, 1);
                        res.uinv.add_col(i, s, -1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
            find_pivot(d, s, pr, pc);
        }
        if (d.at(s, s) < 0) {
            d.negate_row(s);
            res.u.negate_row(s);
            res.uinv.negate_col(s);
        }
    }

    res.diag.resize(nmin);
    for (std::size_t i = 0; i < nmin; ++i) {
        res.diag[i] = d.at(i, i);
        if (res.diag[i] != 0) res.rank = i + 1;
    }
    return res;
}

std::optional<std::vector<Int>> solve_linear(const Mat& a, const std::vector<Int>& b) {
    assert(b.size() == a.rows());
    SmithResult s = smith(a);
    std::vector<Int> c = s.u.apply(b);
    std::vector<Int> z(a.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < s.diag.size() && s.diag[i] != 0) {
            if (c[i] % s.diag[i] != 0) return std::nullopt;
            z[i] = c[i] / s.diag[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(z);
}

std::vector<std::vector<Int>> kernel_lattice(const Mat& a) {
    SmithResult s = smith(a);
    std::vector<std::vector<Int>> out;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool in_kernel = j >= s.diag.size() || s.diag[j] == 0;
        if (!in_kernel) continue;
        std::vector<Int> col(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) col[i] = s.v.at(i, j);
        out.push_back(std::move(col));
    }
    return out;
}

std::vector<std::vector<Int>> lattice_basis(const std::vector<std::vector<Int>>& gens,
                                            std::size_t dim) {
    Mat g(dim, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        assert(gens[j].size() == dim);
        for (std::size_t i = 0; i < dim; ++i) g.at(i, j) = gens[j][i];
    }
    SmithResult s = smith(g);
    // image of G equals the lattice spanned by d_j * (column j of U^{-1})
    std::vector<std::vector<Int>> out;
    for (std::size_t j = 0; j < s.rank; ++j) {
        std::vector<Int> col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = s.diag[j] * s.uinv.at(i, j);
        out.push_back(std::move(col));
    }
    return out;
}

}  // namespace clasper
