#pragma once

#include <map>

#include "correlate.hpp"

namespace ccset {

enum class Property { PerfectArray, GCS, CCC, SZCCS, MCCC, MOS, PermFamily };

inline std::string_view property_name(Property p) {
    switch (p) {
        case Property::PerfectArray: return "perfect_array";
        case Property::GCS: return "gcs";
        case Property::CCC: return "ccc";
        case Property::SZCCS: return "szccs";
        case Property::MCCC: return "mccc";
        case Property::MOS: return "mos";
        case Property::PermFamily: return "perm_family";
    }
    return "unknown";
}

// One offending measurement. `codes` identifies the code (or pair, or
// set/code pairs for multi-set checks), `shift` the offending shift tuple.
// Constraint violations that are not correlation values carry a note.
struct Violation {
    std::vector<int> codes;
    std::vector<int> shift;
    std::complex<double> value{};
    double magnitude = 0.0;
    std::string note;
};

struct Verdict {
    bool passed = true;
    Property property = Property::CCC;
    std::vector<Violation> violations;
    std::map<std::string, long long> params;
};

namespace detail {

inline void expect_zero(Verdict& verdict, std::vector<int> codes, std::vector<int> shift,
                        const std::complex<double>& value, double tol) {
    const double mag = std::abs(value);
    if (mag > tol) verdict.violations.push_back({std::move(codes), std::move(shift), value, mag, {}});
}

}  // namespace detail

// A perfect array concentrates its whole periodic autocorrelation energy
// at the zero shift.
inline Verdict verify_perfect_array(const Code& c) {
    Verdict verdict;
    verdict.property = Property::PerfectArray;
    verdict.params = {{"m", c.rows()}, {"n", c.cols()}};
    const PacfGrid grid = pacf2d(c);
    const double energy = static_cast<double>(c.rows()) * c.cols();
    const double tol = zero_tolerance(static_cast<long long>(c.rows()) * c.cols());
    for (int t1 = 0; t1 < c.rows(); ++t1)
        for (int t2 = 0; t2 < c.cols(); ++t2) {
            const std::complex<double> v = grid.at(t1, t2);
            if (t1 == 0 && t2 == 0) {
                const double dev = std::abs(v - energy);
                if (dev > tol) verdict.violations.push_back({{}, {0, 0}, v, dev, "peak energy mismatch"});
            } else {
                detail::expect_zero(verdict, {}, {t1, t2}, v, tol);
            }
        }
    verdict.passed = verdict.violations.empty();
    return verdict;
}

// Golay complementary set: the aperiodic autocorrelation vanishes at every
// nonzero shift (negative shifts are conjugate mirrors, so positives suffice).
inline Verdict verify_gcs(const Code& c) {
    Verdict verdict;
    verdict.property = Property::GCS;
    verdict.params = {{"m", c.rows()}, {"n", c.cols()}};
    const double tol = zero_tolerance(static_cast<long long>(c.rows()) * c.cols());
    for (int tau = 1; tau < c.cols(); ++tau)
        detail::expect_zero(verdict, {0}, {tau}, accf(c, c, tau), tol);
    verdict.passed = verdict.violations.empty();
    return verdict;
}

// Complete complementary code: M codes whose every auto- and cross-
// correlation vanishes except the zero-shift self term, which carries the
// full energy M*N. Requires set size K equal to flock size M.
inline Verdict verify_ccc(const CodeSet& set) {
    Verdict verdict;
    verdict.property = Property::CCC;
    const int k = set.size();
    const int m = set.rows();
    const int n = set.cols();
    verdict.params = {{"k", k}, {"m", m}, {"n", n}};
    if (k != m)
        verdict.violations.push_back({{}, {}, {static_cast<double>(k - m), 0.0},
                                      std::abs(static_cast<double>(k - m)),
                                      "set size K must equal flock size M"});
    const double energy = static_cast<double>(m) * n;
    const double tol = zero_tolerance(static_cast<long long>(m) * n);
    for (int k1 = 0; k1 < k; ++k1)
        for (int k2 = k1; k2 < k; ++k2)
            for (int tau = -(n - 1); tau <= n - 1; ++tau) {
                if (k1 == k2 && tau < 0) continue;  // conjugate mirror
                const std::complex<double> v = accf(set[k1], set[k2], tau);
                if (k1 == k2 && tau == 0) {
                    const double dev = std::abs(v - energy);
                    if (dev > tol)
                        verdict.violations.push_back({{k1, k2}, {0}, v, dev, "peak energy mismatch"});
                } else {
                    detail::expect_zero(verdict, {k1, k2}, {tau}, v, tol);
                }
            }
    verdict.passed = verdict.violations.empty();
    return verdict;
}

// Symmetrical Z-complementary code set: autocorrelations vanish on the
// front and tail shift zones, cross-correlations additionally at shift 0.
// The verdict also reports whether the set size meets floor(MN/(Z+1)).
inline Verdict verify_szccs(const CodeSet& set, int z) {
    const int n = set.cols();
    const ZoneSpec zone(z, n);  // rejects Z outside [0, N)
    Verdict verdict;
    verdict.property = Property::SZCCS;
    const int k = set.size();
    const int m = set.rows();
    verdict.params = {{"k", k}, {"m", m}, {"n", n}, {"z", z}};
    const double tol = zero_tolerance(static_cast<long long>(m) * n);
    for (int k1 = 0; k1 < k; ++k1)
        for (int k2 = k1; k2 < k; ++k2)
            for (int tau = -(n - 1); tau <= n - 1; ++tau) {
                if (k1 == k2) {
                    if (tau <= 0 || !zone.contains(tau)) continue;  // mirrors and out-of-zone
                } else {
                    if (tau != 0 && !zone.contains(std::abs(tau))) continue;
                }
                detail::expect_zero(verdict, {k1, k2}, {tau}, accf(set[k1], set[k2], tau), tol);
            }
    verdict.params["optimal"] =
        static_cast<long long>(k) == static_cast<long long>(m) * n / (z + 1) ? 1 : 0;
    verdict.passed = verdict.violations.empty();
    return verdict;
}

// Multiple CCC: every member set is a CCC on its own and codes drawn from
// two different sets have zero cross-correlation for all |tau| < Z.
// Violations carry (set1, code1, set2, code2) in `codes`.
inline Verdict verify_mccc(const std::vector<CodeSet>& sets, int z) {
    if (sets.size() < 2) throw std::invalid_argument("multiple-CCC verification needs at least two sets");
    const int m = sets[0].rows();
    const int n = sets[0].cols();
    for (const CodeSet& s : sets)
        if (s.rows() != m || s.cols() != n || s.size() != sets[0].size())
            throw std::invalid_argument("multiple-CCC verification needs homogeneous sets");
    if (z < 0) throw std::invalid_argument("zone width must be nonnegative");
    Verdict verdict;
    verdict.property = Property::MCCC;
    verdict.params = {{"sets", static_cast<long long>(sets.size())},
                      {"k", sets[0].size()},
                      {"m", m},
                      {"n", n},
                      {"z", z}};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        Verdict sub = verify_ccc(sets[i]);
        for (Violation& v : sub.violations) {
            if (v.codes.size() == 2)
                v.codes = {static_cast<int>(i), v.codes[0], static_cast<int>(i), v.codes[1]};
            verdict.violations.push_back(std::move(v));
        }
    }
    const double tol = zero_tolerance(static_cast<long long>(m) * n);
    const int reach = std::min(z - 1, n - 1);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            for (int a = 0; a < sets[i].size(); ++a)
                for (int b = 0; b < sets[j].size(); ++b)
                    for (int tau = -reach; tau <= reach; ++tau)
                        detail::expect_zero(verdict,
                                            {static_cast<int>(i), a, static_cast<int>(j), b}, {tau},
                                            accf(sets[i][a], sets[j][b], tau), tol);
    verdict.passed = verdict.violations.empty();
    return verdict;
}

inline Verdict verify_mos(const MosFamily& fam) {
    Verdict verdict;
    verdict.property = Property::MOS;
    verdict.params = {{"p", fam.size()}};
    const double tol = zero_tolerance(fam.size());
    for (int j1 = 0; j1 < fam.size(); ++j1)
        for (int j2 = j1 + 1; j2 < fam.size(); ++j2)
            detail::expect_zero(verdict, {j1, j2}, {}, inner_product(fam.row(j1), fam.row(j2)), tol);
    verdict.passed = verdict.violations.empty();
    return verdict;
}

inline Verdict verify_perm_family(const PermutationFamily& fam) {
    Verdict verdict;
    verdict.property = Property::PermFamily;
    verdict.params = {{"p", fam.size()}, {"m", fam.degree()}, {"s", fam.block_count()}};
    const int p = fam.block_width();
    const int s = fam.block_count();
    for (int k1 = 0; k1 < fam.size(); ++k1)
        for (int k2 = k1 + 1; k2 < fam.size(); ++k2)
            for (int i1 = 0; i1 < s; ++i1)
                for (int i2 = 0; i2 < s; ++i2)
                    for (int j = 0; j < p; ++j) {
                        const int a = fam.perm(k1)[static_cast<std::size_t>(i1 * p + j)];
                        const int b = fam.perm(k2)[static_cast<std::size_t>(i2 * p + j)];
                        if (a == b)
                            verdict.violations.push_back({{k1, k2},
                                                          {i1, i2, j},
                                                          {static_cast<double>(a), 0.0},
                                                          1.0,
                                                          "same-column collision"});
                    }
    verdict.passed = verdict.violations.empty();
    return verdict;
}

// Largest Z in [0, N-1] for which the set verifies as a symmetrical ZCCS;
// -1 when even the zero-shift cross-correlation of some pair is nonzero.
// Growing Z only widens the zones, so feasibility is monotone.
inline int measure_symmetric_zone(const CodeSet& set) {
    if (!verify_szccs(set, 0).passed) return -1;
    int best = 0;
    for (int z = 1; z < set.cols(); ++z) {
        if (!verify_szccs(set, z).passed) break;
        best = z;
    }
    return best;
}

}  // namespace ccset
