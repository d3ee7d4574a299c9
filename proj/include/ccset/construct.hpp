#pragma once

#include <sstream>

#include "verify.hpp"

namespace ccset {

struct MultMatrixParams {
    int m = 2;        // matrix order and root order
    long long s = 1;  // subscript-product factor, coprime to m
    long long x = 0;  // constant phase offset
};

// M x M code over the M-th roots of unity with phase x + s*i*j at row i,
// column j (zero-based). With gcd(M,s) = 1 every off-origin periodic
// correlation collapses to a full root-of-unity sum and vanishes; for
// gcd(M,s) = g > 1 the shift class (0, M/g) keeps the full energy, so such
// parameters are rejected.
inline Code multiplication_matrix(const MultMatrixParams& params) {
    if (params.m < 2) throw std::invalid_argument("multiplication_matrix: M must be >= 2");
    const long long g = std::gcd(static_cast<long long>(params.m), params.s);
    if (g != 1) {
        std::ostringstream msg;
        msg << "multiplication_matrix: gcd(M=" << params.m << ", s=" << params.s << ") = " << g
            << " != 1, which keeps PACF nonzero on the shift class (0, " << params.m / g << ")";
        throw std::invalid_argument(msg.str());
    }
    const int m = params.m;
    std::vector<int> phases(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            phases[static_cast<std::size_t>(i) * m + j] =
                pos_mod(params.x + params.s * i * j, m);
    return Code(m, m, PhaseAlphabet{m}, std::move(phases));
}

// Output row i is input row (i+u) mod M; u = 0 is the identity.
inline Code cyclic_row_shift(const Code& code, int u) {
    if (u < 0 || u >= code.rows()) throw std::invalid_argument("cyclic_row_shift: u out of range");
    const int m = code.rows();
    const int n = code.cols();
    std::vector<int> phases(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            phases[static_cast<std::size_t>(i) * n + j] = code.phase((i + u) % m, j);
    return Code(m, n, code.alphabet(), std::move(phases));
}

// The M cyclic row shifts of the multiplication matrix form an (M,M)-CCC.
inline CodeSet mult_matrix_ccc(const MultMatrixParams& params) {
    const Code base = multiplication_matrix(params);
    std::vector<Code> codes;
    codes.reserve(static_cast<std::size_t>(params.m));
    for (int u = 0; u < params.m; ++u) codes.push_back(cyclic_row_shift(base, u));
    return CodeSet(std::move(codes));
}

// Rows of the order-P character table: sequence j has entries
// exp(2*pi*i*(j*alpha)/P), pairwise orthogonal for any P.
inline MosFamily mos_dft(int p) {
    if (p < 1) throw std::invalid_argument("mos_dft: P must be >= 1");
    std::vector<Sequence> rows;
    rows.reserve(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) {
        std::vector<int> phases(static_cast<std::size_t>(p));
        for (int alpha = 0; alpha < p; ++alpha)
            phases[static_cast<std::size_t>(alpha)] = pos_mod(static_cast<long long>(j) * alpha, p);
        rows.emplace_back(PhaseAlphabet{p}, std::move(phases));
    }
    return MosFamily(std::move(rows));
}

// Rows of the Sylvester +-1 matrix of order P (P a power of two): entry
// (r, c) has sign parity popcount(r & c).
inline MosFamily mos_hadamard(int p) {
    if (p < 1 || (p & (p - 1)) != 0) throw std::invalid_argument("mos_hadamard: P must be a power of 2");
    std::vector<Sequence> rows;
    rows.reserve(static_cast<std::size_t>(p));
    for (int r = 0; r < p; ++r) {
        std::vector<int> phases(static_cast<std::size_t>(p));
        for (int c = 0; c < p; ++c)
            phases[static_cast<std::size_t>(c)] =
                __builtin_popcount(static_cast<unsigned>(r) & static_cast<unsigned>(c)) & 1;
        rows.emplace_back(PhaseAlphabet{2}, std::move(phases));
    }
    return MosFamily(std::move(rows));
}

// The cyclic-shift family pi_k(x) = (x+k) mod M for k = 0..P-1. Two members
// collide on a same-position column only if (i1-i2)*P = k2-k1 (mod M), which
// has no solution for 0 < |k2-k1| < P, so the family is always admissible.
inline PermutationFamily default_permutation_family(int m, int p) {
    if (m < 1 || p < 1 || m % p != 0)
        throw std::invalid_argument("default_permutation_family: P must divide M");
    std::vector<std::vector<int>> perms(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) {
        perms[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(m));
        for (int x = 0; x < m; ++x) perms[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)] = (x + k) % m;
    }
    return PermutationFamily(std::move(perms));
}

// Block concatenation [b_1*C_1 || ... || b_P*C_P]; block alpha is C_alpha
// with every entry rotated by b_alpha, as exact phase addition.
inline Code r_concat(const std::vector<Code>& codes, const Sequence& b) {
    return detail::concatenate_scaled(codes, b);
}

namespace detail {

inline void check_extension_inputs(const CodeSet& seed, int p, const MosFamily& mos) {
    if (p < 1 || seed.size() % p != 0)
        throw std::invalid_argument("extension block width P must divide the seed set size M");
    if (mos.size() != p)
        throw std::invalid_argument("extension needs a family of P sequences of length P");
    const Verdict seed_verdict = verify_ccc(seed);
    if (!seed_verdict.passed) {
        std::ostringstream msg;
        msg << "seed fails CCC verification (" << seed_verdict.violations.size() << " violation(s)";
        const Violation& first = seed_verdict.violations.front();
        if (first.codes.size() == 2 && first.shift.size() == 1)
            msg << "; first at codes (" << first.codes[0] << "," << first.codes[1] << ") shift "
                << first.shift[0] << " with |value| = " << first.magnitude;
        msg << ")";
        throw verification_error(msg.str());
    }
    if (const auto bad = first_mos_violation(mos)) {
        std::ostringstream msg;
        msg << "sequences are not mutually orthogonal: rows (" << bad->j1 << "," << bad->j2
            << ") have inner product of magnitude " << std::abs(bad->value);
        throw verification_error(msg.str());
    }
}

inline std::vector<Code> extend_with_perm(const CodeSet& seed, int p, const MosFamily& mos,
                                          const std::vector<int>& perm) {
    const int m = seed.size();
    const int s = m / p;
    std::vector<Code> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < p; ++j) {
            std::vector<Code> block;
            block.reserve(static_cast<std::size_t>(p));
            for (int alpha = 0; alpha < p; ++alpha)
                block.push_back(seed[perm[static_cast<std::size_t>(i * p + alpha)]]);
            out.push_back(concatenate_scaled(block, mos.row(j)));
        }
    return out;
}

}  // namespace detail

// Stretches an (M,N)-CCC into an (M, N*P)-CCC: the seed codes are grouped
// into S = M/P blocks through the permutation, and each block is
// concatenated under each of the P mutually orthogonal sequences.
inline CodeSet extend_ccc(const CodeSet& seed, int p, const MosFamily& mos,
                          const std::vector<int>& perm) {
    const int m = seed.size();
    if (p < 2 || p > m) throw std::invalid_argument("extend_ccc: P must satisfy 1 < P <= M");
    if (static_cast<int>(perm.size()) != m)
        throw std::invalid_argument("extend_ccc: permutation degree must equal the seed set size");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : perm) {
        if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("extend_ccc: not a bijection on {0..M-1}");
        seen[static_cast<std::size_t>(v)] = true;
    }
    detail::check_extension_inputs(seed, p, mos);
    return CodeSet(detail::extend_with_perm(seed, p, mos, perm));
}

// P code sets of M codes each, all M x (P*N): the k-th set extends the seed
// through the k-th permutation. Carries the symmetric zone Z = N-1 achieved
// over the extended width P*N, plus the ingredients used to build it.
struct SzccsBundle {
    std::vector<CodeSet> sets;
    ZoneSpec zone;
    MosFamily mos;
    PermutationFamily perms;
    std::string seed_label;

    // Set-major concatenation of all member codes.
    CodeSet flattened() const {
        std::vector<Code> all;
        for (const CodeSet& s : sets) all.insert(all.end(), s.codes().begin(), s.codes().end());
        return CodeSet(std::move(all));
    }
};

// Extends one seed CCC through P column-disjoint permutations into P
// (M, P*N)-CCCs whose union is an optimal symmetrical (PM, M, PN, N-1)-ZCCS;
// codes from different sets can correlate only at shifts that are nonzero
// multiples of N. P = 1 degenerates to the seed itself.
inline SzccsBundle build_mccc_szccs(const CodeSet& seed, int p, const MosFamily& mos,
                                    const PermutationFamily& perms) {
    const int m = seed.size();
    const int n = seed.cols();
    if (p < 1 || p > m) throw std::invalid_argument("build_mccc_szccs: P must satisfy 1 <= P <= M");
    if (perms.size() != p)
        throw std::invalid_argument("build_mccc_szccs: need exactly P permutations");
    if (perms.degree() != m)
        throw std::invalid_argument("build_mccc_szccs: permutation degree must equal the seed set size");
    detail::check_extension_inputs(seed, p, mos);
    if (p == 1) return SzccsBundle{{seed}, ZoneSpec(n - 1, n), mos, perms, {}};
    if (const auto col = first_perm_collision(perms)) {
        std::ostringstream msg;
        msg << "permutation family violates column-disjointness at (k1,k2,i1,i2,j) = (" << col->k1
            << "," << col->k2 << "," << col->i1 << "," << col->i2 << "," << col->j
            << "): both map onto " << col->image;
        throw verification_error(msg.str());
    }
    std::vector<CodeSet> sets;
    sets.reserve(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k)
        sets.emplace_back(detail::extend_with_perm(seed, p, mos, perms.perm(k)));
    return SzccsBundle{std::move(sets), ZoneSpec(n - 1, n * p), mos, perms, {}};
}

}  // namespace ccset
