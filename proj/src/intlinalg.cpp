#include "genusbound/intlinalg.hpp"

#include <algorithm>

namespace genusbound {

namespace {

// Shared core: unimodular column reduction of m (copied), tracking the
// column operations in u (ncols x ncols). On return the first `rank`
// columns of the reduced matrix carry the pivots and the remaining columns
// are zero; those columns of u span the integer kernel.
int column_reduce(IntMatrix work, int ncols, IntMatrix& u) {
    const int nrows = static_cast<int>(work.size());
    u.assign(ncols, IntVec(ncols, 0));
    for (int j = 0; j < ncols; ++j) u[j][j] = 1;

    auto add_col = [&](int dst, int src, const Int& f) {
        if (f == 0) return;
        for (int r = 0; r < nrows; ++r) work[r][dst] += f * work[r][src];
        for (int r = 0; r < ncols; ++r) u[r][dst] += f * u[r][src];
    };
    auto swap_col = [&](int a, int b) {
        if (a == b) return;
        for (int r = 0; r < nrows; ++r) std::swap(work[r][a], work[r][b]);
        for (int r = 0; r < ncols; ++r) std::swap(u[r][a], u[r][b]);
    };

    int pivots = 0;
    for (int row = 0; row < nrows && pivots < ncols; ++row) {
        while (true) {
            int best = -1;
            for (int j = pivots; j < ncols; ++j) {
                if (work[row][j] == 0) continue;
                if (best < 0 || abs_int(work[row][j]) < abs_int(work[row][best])) best = j;
            }
            if (best < 0) break;  // row already clear beyond the pivots
            bool others = false;
            for (int j = pivots; j < ncols; ++j) {
                if (j == best || work[row][j] == 0) continue;
                Int q = floor_div(work[row][j], work[row][best]);
                add_col(j, best, -q);
                if (work[row][j] != 0) others = true;
            }
            if (!others) {
                swap_col(pivots, best);
                ++pivots;
                break;
            }
        }
    }
    return pivots;
}

}  // namespace

std::vector<IntVec> int_kernel(const IntMatrix& m, int ncols) {
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != ncols) {
            throw InputError("int_kernel: ragged matrix");
        }
    }
    IntMatrix u;
    const int rank = column_reduce(m, ncols, u);
    std::vector<IntVec> kernel;
    kernel.reserve(ncols - rank);
    for (int j = rank; j < ncols; ++j) {
        IntVec v(ncols);
        for (int r = 0; r < ncols; ++r) v[r] = u[r][j];
        for (auto& x : v) {
            if (x != 0) {
                if (x < 0) {
                    for (auto& y : v) y = -y;
                }
                break;
            }
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

int int_rank(const IntMatrix& m, int ncols) {
    IntMatrix u;
    return column_reduce(m, ncols, u);
}

IntMatrix clear_row_denominators(const RatMatrix& m) {
    IntMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Int l = 1;
        for (const auto& q : row) {
            Int d = q.get_den();
            l = l / gcd_int(l, d) * d;
        }
        IntVec irow;
        irow.reserve(row.size());
        for (const auto& q : row) {
            irow.push_back(Int(q.get_num()) * (l / q.get_den()));
        }
        out.push_back(std::move(irow));
    }
    return out;
}

std::vector<IntVec> saturate_span(const std::vector<IntVec>& vecs, int n) {
    if (vecs.empty()) return {};
    IntMatrix rows;
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != n) {
            throw InputError("saturate_span: wrong vector length");
        }
        rows.push_back(v);
    }
    const auto complement = int_kernel(rows, n);
    IntMatrix comp_rows(complement.begin(), complement.end());
    auto sat = int_kernel(comp_rows, n);
    if (sat.size() + complement.size() != static_cast<std::size_t>(n)) {
        throw InternalError("saturate_span: rank bookkeeping failed");
    }
    return sat;
}

Int bareiss_det(IntMatrix m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) throw InputError("bareiss_det: not square");
    }
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Int make_primitive(IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd_int(g, x);
    if (g > 1) {
        for (auto& x : v) x /= g;
    }
    return g;
}

}  // namespace genusbound
