#include "tcl/simplex.hpp"

namespace tcl {

namespace {

// Column j of [A | I].
Rational column_entry(const LinearProgram<Rational>& lp, std::size_t i, std::size_t j) {
    if (j < lp.cols) return lp.at(i, j);
    return Rational(j - lp.cols == i ? 1 : 0);
}

// Solves M z = rhs for square M by Gauss-Jordan elimination; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(m[piv][col]) == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const Rational p = m[col][col];
        for (std::size_t j = col; j < n; ++j) m[col][j] /= p;
        rhs[col] /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(m[i][col]) == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace

std::optional<LpSolution<Rational>> certify_basis(const LinearProgram<Rational>& lp,
                                                  const std::vector<std::size_t>& basis) {
    const std::size_t r = lp.rows;
    if (basis.size() != r) return std::nullopt;

    // B x_B = b
    std::vector<std::vector<Rational>> bmat(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) bmat[i][k] = column_entry(lp, i, basis[k]);
    }
    auto xb = solve_square(bmat, lp.b);
    if (!xb) return std::nullopt;
    for (const auto& x : *xb) {
        if (sgn(x) < 0) return std::nullopt;
    }

    // y^T B = c_B, i.e. B^T y = c_B
    std::vector<std::vector<Rational>> bt(r, std::vector<Rational>(r));
    std::vector<Rational> cb(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) bt[k][i] = bmat[i][k];
        cb[i] = basis[i] < lp.cols ? lp.objective[basis[i]] : Rational(0);
    }
    auto y = solve_square(bt, cb);
    if (!y) return std::nullopt;
    for (const auto& yi : *y) {
        if (sgn(yi) < 0) return std::nullopt;
    }
    for (std::size_t j = 0; j < lp.cols; ++j) {
        Rational dot = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (sgn(lp.at(i, j)) != 0) dot += (*y)[i] * lp.at(i, j);
        }
        if (dot < lp.objective[j]) return std::nullopt;
    }

    LpSolution<Rational> sol;
    sol.basis = basis;
    sol.primal.assign(lp.cols, Rational(0));
    sol.value = 0;
    for (std::size_t k = 0; k < r; ++k) {
        if (basis[k] < lp.cols) {
            sol.primal[basis[k]] = (*xb)[k];
            sol.value += lp.objective[basis[k]] * (*xb)[k];
        }
    }
    sol.dual = std::move(*y);
    return sol;
}

}  // namespace tcl
