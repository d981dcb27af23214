#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "tcl/errors.hpp"
#include "tcl/rational.hpp"

namespace tcl {

// Comparison policy for the tableau scalar: exact for Rational, absolute
// tolerance for double.
template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static bool positive(const Rational& x) { return sgn(x) > 0; }
    static bool negative(const Rational& x) { return sgn(x) < 0; }
    static bool zero(const Rational& x) { return sgn(x) == 0; }
    static constexpr bool largest_coefficient = false;
};

template <>
struct ScalarTraits<double> {
    static constexpr double eps = 1e-9;
    static bool positive(double x) { return x > eps; }
    static bool negative(double x) { return x < -eps; }
    static bool zero(double x) { return std::abs(x) <= eps; }
    // Fewer pivots means less accumulated rounding error.
    static constexpr bool largest_coefficient = true;
};

// maximize c·x subject to A x <= b, x >= 0, with b >= 0 so the slack basis is
// feasible from the start. A is dense row-major.
template <typename Scalar>
struct LinearProgram {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> a;          // rows * cols
    std::vector<Scalar> b;          // rows
    std::vector<Scalar> objective;  // cols

    Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

enum class LpStatus { Optimal, Unbounded };

template <typename Scalar>
struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Scalar value{};
    std::vector<Scalar> primal;   // cols
    std::vector<Scalar> dual;     // rows; optimal dual prices, >= 0
    std::vector<std::size_t> basis;  // per row: basic column in [0, cols + rows)
    std::size_t pivots = 0;
};

// Tableau simplex with Bland's rule (smallest improving column enters, ties in
// the ratio test go to the smallest basic column), which cannot cycle. Floating
// solves start with the largest-coefficient rule and fall back to Bland's rule
// after 10 (rows + cols) pivots.
template <typename Scalar>
LpSolution<Scalar> solve_lp(const LinearProgram<Scalar>& lp) {
    using T = ScalarTraits<Scalar>;
    const std::size_t r = lp.rows;
    const std::size_t c = lp.cols;
    const std::size_t width = c + r + 1;
    for (const auto& bi : lp.b) {
        if (T::negative(bi)) throw InvalidArgument("solve_lp needs b >= 0");
    }

    std::vector<Scalar> t((r + 1) * width, Scalar(0));
    auto cell = [&](std::size_t i, std::size_t j) -> Scalar& { return t[i * width + j]; };
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) cell(i, j) = lp.at(i, j);
        cell(i, c + i) = Scalar(1);
        cell(i, width - 1) = lp.b[i];
    }
    for (std::size_t j = 0; j < c; ++j) cell(r, j) = -lp.objective[j];

    LpSolution<Scalar> sol;
    sol.basis.resize(r);
    for (std::size_t i = 0; i < r; ++i) sol.basis[i] = c + i;

    std::vector<std::size_t> nonzero;
    while (true) {
        std::size_t enter = width;
        if (T::largest_coefficient && sol.pivots < 10 * (r + c)) {
            for (std::size_t j = 0; j + 1 < width; ++j) {
                if (T::negative(cell(r, j)) && (enter == width || cell(r, j) < cell(r, enter))) enter = j;
            }
        } else {
            for (std::size_t j = 0; j + 1 < width; ++j) {
                if (T::negative(cell(r, j))) {
                    enter = j;
                    break;
                }
            }
        }
        if (enter == width) break;

        std::size_t leave = r;
        Scalar best_ratio{};
        for (std::size_t i = 0; i < r; ++i) {
            if (!T::positive(cell(i, enter))) continue;
            Scalar ratio = cell(i, width - 1) / cell(i, enter);
            if (leave == r || T::negative(ratio - best_ratio) ||
                (T::zero(ratio - best_ratio) && sol.basis[i] < sol.basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == r) {
            sol.status = LpStatus::Unbounded;
            return sol;
        }

        const Scalar pivot = cell(leave, enter);
        nonzero.clear();
        for (std::size_t j = 0; j < width; ++j) {
            if (!T::zero(cell(leave, j))) {
                cell(leave, j) /= pivot;
                nonzero.push_back(j);
            } else {
                cell(leave, j) = Scalar(0);
            }
        }
        for (std::size_t i = 0; i <= r; ++i) {
            if (i == leave || T::zero(cell(i, enter))) continue;
            const Scalar factor = cell(i, enter);
            for (auto j : nonzero) cell(i, j) -= factor * cell(leave, j);
            cell(i, enter) = Scalar(0);
            // Keeps floating solves primal feasible; exact zeros are unaffected.
            if (i < r && !T::positive(cell(i, width - 1))) cell(i, width - 1) = Scalar(0);
        }
        sol.basis[leave] = enter;
        ++sol.pivots;
    }

    sol.value = cell(r, width - 1);
    sol.primal.assign(c, Scalar(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (sol.basis[i] < c) sol.primal[sol.basis[i]] = cell(i, width - 1);
    }
    sol.dual.resize(r);
    for (std::size_t i = 0; i < r; ++i) sol.dual[i] = cell(r, c + i);
    return sol;
}

// Recomputes the basic solution of `basis` in exact arithmetic and accepts it
// only if it is primal feasible and dual feasible (hence optimal). Used to
// certify a floating-point solve.
std::optional<LpSolution<Rational>> certify_basis(const LinearProgram<Rational>& lp,
                                                  const std::vector<std::size_t>& basis);

}  // namespace tcl
