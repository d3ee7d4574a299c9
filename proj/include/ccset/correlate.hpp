#pragma once

#include <cmath>
#include <cstdlib>

#include "core.hpp"

namespace ccset {

namespace detail {

// Correlation sums are binned as integer multiplicities per phase
// difference and evaluated once at the end. Binary and quaternary
// alphabets therefore come out in exact integer arithmetic, and the
// rounding error for any alphabet is bounded by the root order rather
// than the number of terms.
class PhaseSum {
  public:
    explicit PhaseSum(int root_order) : alphabet_{root_order}, counts_(static_cast<std::size_t>(root_order), 0) {}

    void add(int phase) { ++counts_[static_cast<std::size_t>(phase)]; }

    std::complex<double> value() const {
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k < alphabet_.root_order; ++k)
            if (counts_[static_cast<std::size_t>(k)] != 0)
                acc += static_cast<double>(counts_[static_cast<std::size_t>(k)]) * alphabet_.unit(k);
        return acc;
    }

  private:
    PhaseAlphabet alphabet_;
    std::vector<long long> counts_;
};

// Two codes over different alphabets correlate over the lcm alphabet.
struct CommonAlphabet {
    int root_order;
    int scale_a;
    int scale_b;
};

inline CommonAlphabet common_alphabet(int qa, int qb) {
    const int q = std::lcm(qa, qb);
    return {q, q / qa, q / qb};
}

// [b_1*C_1 || ... || b_P*C_P] with every block rotated by its sequence
// entry, realized as exact phase addition on the lcm alphabet.
inline Code concatenate_scaled(const std::vector<Code>& codes, const Sequence& b) {
    if (codes.empty()) throw std::invalid_argument("concatenation needs at least one code");
    if (static_cast<int>(codes.size()) != b.length())
        throw std::invalid_argument("sequence length must match the number of codes");
    const int m = codes[0].rows();
    const int n = codes[0].cols();
    int q = b.root_order();
    for (const Code& c : codes) {
        if (c.rows() != m || c.cols() != n)
            throw std::invalid_argument("concatenated codes must share dimensions");
        q = std::lcm(q, c.root_order());
    }
    const int p = static_cast<int>(codes.size());
    std::vector<int> phases(static_cast<std::size_t>(m) * n * p);
    for (int alpha = 0; alpha < p; ++alpha) {
        const Code& c = codes[static_cast<std::size_t>(alpha)];
        const int code_scale = q / c.root_order();
        const long long rot = static_cast<long long>(b.phase(alpha)) * (q / b.root_order());
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                phases[static_cast<std::size_t>(i) * n * p + alpha * n + j] =
                    pos_mod(static_cast<long long>(c.phase(i, j)) * code_scale + rot, q);
    }
    return Code(m, n * p, PhaseAlphabet{q}, std::move(phases));
}

}  // namespace detail

// The full 2D periodic autocorrelation, indexed by (tau1 mod M, tau2 mod N).
struct PacfGrid {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> values;

    const std::complex<double>& at(int tau1, int tau2) const {
        return values[static_cast<std::size_t>(pos_mod(tau1, rows)) * cols + pos_mod(tau2, cols)];
    }
};

// Correlates a code against its cyclic 2D shifts, exhaustively over all
// M*N shift classes. Both subscript additions wrap.
inline PacfGrid pacf2d(const Code& c) {
    const int m = c.rows();
    const int n = c.cols();
    const int q = c.root_order();
    PacfGrid grid{m, n, std::vector<std::complex<double>>(static_cast<std::size_t>(m) * n)};
    for (int t1 = 0; t1 < m; ++t1)
        for (int t2 = 0; t2 < n; ++t2) {
            detail::PhaseSum sum(q);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    sum.add(pos_mod(c.phase(i, j) - c.phase((i + t1) % m, (j + t2) % n), q));
            grid.values[static_cast<std::size_t>(t1) * n + t2] = sum.value();
        }
    return grid;
}

// Aperiodic cross-correlation at column shift tau; rows never wrap. The
// negative branch overlaps the trailing columns of `a` with the leading
// columns of `b`, so accf(a, b, -tau) == conj(accf(b, a, tau)).
inline std::complex<double> accf(const Code& a, const Code& b, int tau) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("accf: dimension mismatch");
    const int n = a.cols();
    if (tau <= -n || tau >= n) throw std::invalid_argument("accf: |tau| must be < N");
    const auto [q, scale_a, scale_b] = detail::common_alphabet(a.root_order(), b.root_order());
    const int shift = std::abs(tau);
    detail::PhaseSum sum(q);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j + shift < n; ++j) {
            const int pa = tau >= 0 ? a.phase(i, j) : a.phase(i, j + shift);
            const int pb = tau >= 0 ? b.phase(i, j + shift) : b.phase(i, j);
            sum.add(pos_mod(static_cast<long long>(pa) * scale_a - static_cast<long long>(pb) * scale_b, q));
        }
    return sum.value();
}

// Cross-correlation values for every shift tau in (-N, N).
struct AccfVector {
    int width = 0;  // N
    std::vector<std::complex<double>> values;

    const std::complex<double>& at(int tau) const {
        return values[static_cast<std::size_t>(tau + width - 1)];
    }
};

inline AccfVector accf_vector(const Code& a, const Code& b) {
    const int n = a.cols();
    AccfVector out{n, {}};
    out.values.reserve(2 * static_cast<std::size_t>(n) - 1);
    for (int tau = -(n - 1); tau <= n - 1; ++tau) out.values.push_back(accf(a, b, tau));
    return out;
}

inline AccfVector aacf(const Code& a) { return accf_vector(a, a); }

namespace detail {

// Correlation against a shift past either end has no overlap.
inline std::complex<double> accf_or_zero(const Code& a, const Code& b, int tau) {
    if (tau <= -a.cols() || tau >= a.cols()) return {0.0, 0.0};
    return accf(a, b, tau);
}

}  // namespace detail

// Checks that the correlation of two block concatenations splits into the
// two-term block decomposition: for every shift u*N+v with u in [-P, P)
// and v in [0, N),
//
//   accf([b1_1*A_1||...||b1_P*A_P], [b2_1*B_1||...||b2_P*B_P])(u*N+v)
//     == sum_alpha b1_alpha * conj(b2_{alpha+u})   * accf(A_alpha, B_{alpha+u})(v)
//      + sum_alpha b1_alpha * conj(b2_{alpha+u+1}) * accf(A_alpha, B_{alpha+u+1})(v-N),
//
// where out-of-range blocks contribute nothing. Both sides are computed
// independently and compared within the zero tolerance.
inline bool accf_decomposition_check(const std::vector<Code>& codes_a, const std::vector<Code>& codes_b,
                                     const Sequence& b1, const Sequence& b2) {
    if (codes_a.size() != codes_b.size())
        throw std::invalid_argument("decomposition check needs equally many codes on both sides");
    const int p = static_cast<int>(codes_a.size());
    if (b1.length() != p || b2.length() != p)
        throw std::invalid_argument("sequence lengths must match the number of codes");
    const Code lhs_a = detail::concatenate_scaled(codes_a, b1);
    const Code lhs_b = detail::concatenate_scaled(codes_b, b2);
    const int m = lhs_a.rows();
    const int n = codes_a[0].cols();
    if (codes_b[0].rows() != m || codes_b[0].cols() != n)
        throw std::invalid_argument("decomposition check needs codes of equal dimensions");
    const double tol = zero_tolerance(static_cast<long long>(m) * n * p);
    for (int u = -p; u < p; ++u)
        for (int v = 0; v < n; ++v) {
            const std::complex<double> lhs = detail::accf_or_zero(lhs_a, lhs_b, u * n + v);
            std::complex<double> rhs{0.0, 0.0};
            for (int alpha = 0; alpha < p; ++alpha) {
                if (alpha + u >= 0 && alpha + u < p)
                    rhs += b1.entry(alpha) * std::conj(b2.entry(alpha + u)) *
                           detail::accf_or_zero(codes_a[static_cast<std::size_t>(alpha)],
                                                codes_b[static_cast<std::size_t>(alpha + u)], v);
                if (alpha + u + 1 >= 0 && alpha + u + 1 < p)
                    rhs += b1.entry(alpha) * std::conj(b2.entry(alpha + u + 1)) *
                           detail::accf_or_zero(codes_a[static_cast<std::size_t>(alpha)],
                                                codes_b[static_cast<std::size_t>(alpha + u + 1)], v - n);
            }
            if (std::abs(lhs - rhs) > tol) return false;
        }
    return true;
}

}  // namespace ccset
