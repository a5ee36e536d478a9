#include "ihfan/linalg.hpp"

#include <cassert>

namespace ihfan {

Rref rref(const MatQ& m) {
    Rref out;
    out.mat = m;
    MatQ& a = out.mat;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (a(i, c) != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        if (piv != r) a.row(piv).swap(a.row(r));
        const Rational inv = Rational(1) / a(r, c);
        a.row(r) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i != r && a(i, c) != 0) {
                const Rational factor = a(i, c);
                a.row(i) -= factor * a.row(r);
            }
        }
        out.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    out.rank = static_cast<int>(r);
    return out;
}

int rank(const MatQ& m) {
    if (m.size() == 0) return 0;
    return rref(m).rank;
}

MatQ kernel_basis(const MatQ& m) {
    const Eigen::Index cols = m.cols();
    Rref r = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<int> free_cols;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(static_cast<int>(c));

    MatQ basis = MatQ::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        basis(fc, static_cast<Eigen::Index>(k)) = 1;
        for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
            basis(r.pivot_cols[i], static_cast<Eigen::Index>(k)) =
                -r.mat(static_cast<Eigen::Index>(i), fc);
        }
    }
    return basis;
}

std::optional<VecQ> solve(const MatQ& a, const VecQ& b) {
    auto res = solve_many(a, b);
    if (!res) return std::nullopt;
    return VecQ(res->col(0));
}

std::optional<MatQ> solve_many(const MatQ& a, const MatQ& b) {
    assert(a.rows() == b.rows());
    MatQ aug = hcat(a, b);
    Rref r = rref(aug);
    // inconsistency: a pivot column inside the b-block
    for (int c : r.pivot_cols)
        if (c >= a.cols()) return std::nullopt;

    MatQ x = MatQ::Zero(a.cols(), b.cols());
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            x(r.pivot_cols[i], j) = r.mat(static_cast<Eigen::Index>(i), a.cols() + j);
    }
    return x;
}

bool in_span(const MatQ& basis, const VecQ& v) {
    if (basis.cols() == 0) return v.isZero();
    return solve(basis, v).has_value();
}

std::vector<int> complement_indices(const MatQ& sub, const MatQ& candidates) {
    std::vector<int> picked;
    MatQ cur = sub;
    int cur_rank = rank(cur);
    for (Eigen::Index j = 0; j < candidates.cols(); ++j) {
        MatQ trial = hcat(cur, candidates.col(j));
        int r = rank(trial);
        if (r > cur_rank) {
            picked.push_back(static_cast<int>(j));
            cur = trial;
            cur_rank = r;
        }
    }
    return picked;
}

MatQ hcat(const MatQ& a, const MatQ& b) {
    if (a.size() == 0 && a.rows() == 0) {
        return b;
    }
    if (b.size() == 0 && b.rows() == 0) return a;
    assert(a.rows() == b.rows());
    MatQ out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

MatQ vcat(const MatQ& a, const MatQ& b) {
    if (a.size() == 0 && a.cols() == 0) return b;
    if (b.size() == 0 && b.cols() == 0) return a;
    assert(a.cols() == b.cols());
    MatQ out(a.rows() + b.rows(), a.cols());
    out.topRows(a.rows()) = a;
    out.bottomRows(b.rows()) = b;
    return out;
}

// Phase-I simplex.  Solves feasibility of {x >= 0 : a x = b} by minimizing
// the sum of artificial variables; Bland's rule guarantees termination.
bool nonneg_solution_exists(MatQ a, VecQ b) {
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    for (Eigen::Index i = 0; i < m; ++i) {
        if (b(i) < 0) { a.row(i) = -a.row(i); b(i) = -b(i); }
    }
    // tableau: [a | I | b], basis = artificial variables
    MatQ t(m, n + m + 1);
    t.setZero();
    t.block(0, 0, m, n) = a;
    for (Eigen::Index i = 0; i < m; ++i) t(i, n + i) = 1;
    t.col(n + m) = b;
    std::vector<Eigen::Index> basis(static_cast<size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = n + i;

    // objective row: minimize sum of artificials ->
    // reduced costs z_j = sum over rows of t(i,j) for artificial basis rows.
    auto reduced_cost = [&](Eigen::Index j) {
        Rational z = 0;
        for (Eigen::Index i = 0; i < m; ++i)
            if (basis[static_cast<size_t>(i)] >= n) z += t(i, j);
        return z;
    };
    auto objective = [&]() {
        Rational z = 0;
        for (Eigen::Index i = 0; i < m; ++i)
            if (basis[static_cast<size_t>(i)] >= n) z += t(i, n + m);
        return z;
    };

    while (true) {
        if (objective() == 0) return true;
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < n; ++j) {          // Bland: first improving
            bool in_basis = false;
            for (auto bidx : basis) if (bidx == j) { in_basis = true; break; }
            if (in_basis) continue;
            if (reduced_cost(j) > 0) { enter = j; break; }
        }
        if (enter < 0) return objective() == 0;
        // ratio test, Bland tie-break on leaving basic variable index
        Eigen::Index leave = -1;
        Rational best;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (t(i, enter) <= 0) continue;
            Rational ratio = t(i, n + m) / t(i, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[static_cast<size_t>(i)] <
                                      basis[static_cast<size_t>(leave)])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) return false; // unbounded improving direction: cannot happen in phase I
        const Rational piv = t(leave, enter);
        t.row(leave) /= piv;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (i != leave && t(i, enter) != 0) {
                const Rational factor = t(i, enter);
                t.row(i) -= factor * t.row(leave);
            }
        }
        basis[static_cast<size_t>(leave)] = enter;
    }
}

} // namespace ihfan
