#pragma once

#include <algorithm>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccset {

// Thrown when construction inputs are well-formed but fail a required
// correlation property (seed not a CCC, sequences not orthogonal, ...).
// Malformed arguments throw std::invalid_argument instead.
class verification_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// value mod m, reduced into [0, m).
constexpr int pos_mod(long long value, int m) {
    const long long r = value % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Magnitudes at or below this count as zero; `terms` is the number of
// unit-magnitude summands behind the value.
constexpr double zero_tolerance(long long terms) { return 1e-9 * static_cast<double>(terms); }

// The q-th complex roots of unity. Phase k stands for exp(2*pi*i*k/q);
// any integer evaluates like its residue mod q.
struct PhaseAlphabet {
    int root_order = 1;

    std::complex<double> unit(long long phase) const {
        const int q = root_order;
        const int k = pos_mod(phase, q);
        if (2 * k > q) {  // mirror phases stay exact conjugates of each other
            const std::complex<double> m = unit(q - k);
            return {m.real(), -m.imag()};
        }
        if ((4LL * k) % q == 0) {  // axis values come out exact
            switch (static_cast<int>(4LL * k / q)) {
                case 0: return {1.0, 0.0};
                case 1: return {0.0, 1.0};
                default: return {-1.0, 0.0};
            }
        }
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q));
    }

    friend bool operator==(const PhaseAlphabet&, const PhaseAlphabet&) = default;
};

// An M x N array of unit-magnitude entries, stored as integer phases over
// a root-of-unity alphabet. Phases are reduced into [0, q) on construction
// and the object is immutable afterwards.
class Code {
  public:
    Code(int rows, int cols, PhaseAlphabet alphabet, std::vector<int> phases)
        : rows_(rows), cols_(cols), alphabet_(alphabet), phases_(std::move(phases)) {
        if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("code dimensions must be positive");
        if (alphabet_.root_order < 1) throw std::invalid_argument("root order must be >= 1");
        if (phases_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
            throw std::invalid_argument("phase array does not match code dimensions");
        for (int& p : phases_) p = pos_mod(p, alphabet_.root_order);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PhaseAlphabet& alphabet() const { return alphabet_; }
    int root_order() const { return alphabet_.root_order; }
    int phase(int i, int j) const { return phases_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<int>& phases() const { return phases_; }
    std::complex<double> entry(int i, int j) const { return alphabet_.unit(phase(i, j)); }

    friend bool operator==(const Code&, const Code&) = default;

  private:
    int rows_;
    int cols_;
    PhaseAlphabet alphabet_;
    std::vector<int> phases_;
};

// Row-major complex evaluation of every entry; all magnitudes are 1.
inline std::vector<std::complex<double>> evaluate(const Code& c) {
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(c.rows()) * static_cast<std::size_t>(c.cols()));
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) out.push_back(c.entry(i, j));
    return out;
}

// '+' -> phase 0 and '-' -> phase 1 over the binary alphabet. Rows are
// newline-separated; spaces and tabs inside a row are ignored.
inline Code code_from_signs(std::string_view text) {
    std::vector<std::vector<int>> rows;
    bool gap_seen = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::vector<int> row;
        for (std::size_t p = pos; p < eol; ++p) {
            const char ch = text[p];
            if (ch == ' ' || ch == '\t' || ch == '\r') continue;
            if (ch == '+')
                row.push_back(0);
            else if (ch == '-')
                row.push_back(1);
            else
                throw std::invalid_argument(std::string("sign grid holds a foreign character: '") + ch + "'");
        }
        if (row.empty()) {
            if (!rows.empty()) gap_seen = true;
        } else {
            if (gap_seen) throw std::invalid_argument("blank line inside a sign grid");
            rows.push_back(std::move(row));
        }
        pos = eol + 1;
    }
    if (rows.empty()) throw std::invalid_argument("sign grid is empty");
    const std::size_t width = rows[0].size();
    std::vector<int> phases;
    phases.reserve(rows.size() * width);
    for (const auto& row : rows) {
        if (row.size() != width) throw std::invalid_argument("sign grid has ragged rows");
        phases.insert(phases.end(), row.begin(), row.end());
    }
    return Code(static_cast<int>(rows.size()), static_cast<int>(width), PhaseAlphabet{2}, std::move(phases));
}

// Inverse of code_from_signs; defined for binary codes only.
inline std::string sign_text(const Code& c) {
    if (c.root_order() != 2) throw std::invalid_argument("sign text is defined for binary codes only");
    std::string out;
    out.reserve(static_cast<std::size_t>(c.rows()) * (c.cols() + 1));
    for (int i = 0; i < c.rows(); ++i) {
        for (int j = 0; j < c.cols(); ++j) out += c.phase(i, j) == 0 ? '+' : '-';
        out += '\n';
    }
    return out;
}

// An ordered collection of codes sharing dimensions and alphabet.
class CodeSet {
  public:
    explicit CodeSet(std::vector<Code> codes) : codes_(std::move(codes)) {
        if (codes_.empty()) throw std::invalid_argument("code set must hold at least one code");
        for (const Code& c : codes_)
            if (c.rows() != codes_[0].rows() || c.cols() != codes_[0].cols() ||
                !(c.alphabet() == codes_[0].alphabet()))
                throw std::invalid_argument("code set members must share dimensions and alphabet");
    }

    int size() const { return static_cast<int>(codes_.size()); }
    int rows() const { return codes_[0].rows(); }
    int cols() const { return codes_[0].cols(); }
    int root_order() const { return codes_[0].root_order(); }
    const Code& operator[](int k) const { return codes_[static_cast<std::size_t>(k)]; }
    const std::vector<Code>& codes() const { return codes_; }

    friend bool operator==(const CodeSet&, const CodeSet&) = default;

  private:
    std::vector<Code> codes_;
};

// A unit-magnitude sequence stored as integer phases, same conventions as Code.
class Sequence {
  public:
    Sequence(PhaseAlphabet alphabet, std::vector<int> phases)
        : alphabet_(alphabet), phases_(std::move(phases)) {
        if (alphabet_.root_order < 1) throw std::invalid_argument("root order must be >= 1");
        if (phases_.empty()) throw std::invalid_argument("sequence must not be empty");
        for (int& p : phases_) p = pos_mod(p, alphabet_.root_order);
    }

    int length() const { return static_cast<int>(phases_.size()); }
    const PhaseAlphabet& alphabet() const { return alphabet_; }
    int root_order() const { return alphabet_.root_order; }
    int phase(int i) const { return phases_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& phases() const { return phases_; }
    std::complex<double> entry(int i) const { return alphabet_.unit(phase(i)); }

    friend bool operator==(const Sequence&, const Sequence&) = default;

  private:
    PhaseAlphabet alphabet_;
    std::vector<int> phases_;
};

inline std::complex<double> inner_product(const Sequence& a, const Sequence& b) {
    if (a.length() != b.length()) throw std::invalid_argument("inner product needs equal lengths");
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < a.length(); ++i) acc += a.entry(i) * std::conj(b.entry(i));
    return acc;
}

// P sequences of length P intended to be mutually orthogonal. The shape is
// validated here; orthogonality is re-checked wherever a family is consumed.
class MosFamily {
  public:
    explicit MosFamily(std::vector<Sequence> sequences) : sequences_(std::move(sequences)) {
        if (sequences_.empty()) throw std::invalid_argument("orthogonal family must not be empty");
        const int p = static_cast<int>(sequences_.size());
        for (const Sequence& s : sequences_) {
            if (s.length() != p)
                throw std::invalid_argument("orthogonal family needs P sequences of length P");
            if (!(s.alphabet() == sequences_[0].alphabet()))
                throw std::invalid_argument("orthogonal family members must share an alphabet");
        }
    }

    int size() const { return static_cast<int>(sequences_.size()); }
    const Sequence& row(int j) const { return sequences_[static_cast<std::size_t>(j)]; }
    const std::vector<Sequence>& rows() const { return sequences_; }

  private:
    std::vector<Sequence> sequences_;
};

struct MosViolation {
    int j1 = 0;
    int j2 = 0;
    std::complex<double> value{};
};

inline std::optional<MosViolation> first_mos_violation(const MosFamily& fam) {
    const double tol = zero_tolerance(fam.size());
    for (int j1 = 0; j1 < fam.size(); ++j1)
        for (int j2 = j1 + 1; j2 < fam.size(); ++j2) {
            const std::complex<double> v = inner_product(fam.row(j1), fam.row(j2));
            if (std::abs(v) > tol) return MosViolation{j1, j2, v};
        }
    return std::nullopt;
}

// P permutations of {0..M-1} with block width P, so M splits into S = M/P
// blocks. Bijectivity is enforced here; the cross-member column constraint
// is checked at use sites (see first_perm_collision).
class PermutationFamily {
  public:
    explicit PermutationFamily(std::vector<std::vector<int>> perms) : perms_(std::move(perms)) {
        if (perms_.empty()) throw std::invalid_argument("permutation family must not be empty");
        const int m = static_cast<int>(perms_[0].size());
        if (m < 1) throw std::invalid_argument("permutations must not be empty");
        const int p = static_cast<int>(perms_.size());
        if (m % p != 0)
            throw std::invalid_argument("number of permutations must divide the permutation degree");
        for (const auto& perm : perms_) {
            if (static_cast<int>(perm.size()) != m)
                throw std::invalid_argument("permutation family members must share a degree");
            std::vector<bool> seen(static_cast<std::size_t>(m), false);
            for (int v : perm) {
                if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("permutation is not a bijection on {0..M-1}");
                seen[static_cast<std::size_t>(v)] = true;
            }
        }
    }

    int size() const { return static_cast<int>(perms_.size()); }  // P
    int degree() const { return static_cast<int>(perms_[0].size()); }  // M
    int block_width() const { return size(); }
    int block_count() const { return degree() / size(); }  // S
    const std::vector<int>& perm(int k) const { return perms_[static_cast<std::size_t>(k)]; }

  private:
    std::vector<std::vector<int>> perms_;
};

struct PermCollision {
    int k1 = 0, k2 = 0;  // family members
    int i1 = 0, i2 = 0;  // block indices
    int j = 0;           // position within the block
    int image = 0;       // the shared target index
};

// Scans every (k1,k2,i1,i2,j) tuple for two members mapping same-position
// slots of any two blocks onto the same index.
inline std::optional<PermCollision> first_perm_collision(const PermutationFamily& fam) {
    const int p = fam.block_width();
    const int s = fam.block_count();
    for (int k1 = 0; k1 < fam.size(); ++k1)
        for (int k2 = k1 + 1; k2 < fam.size(); ++k2)
            for (int i1 = 0; i1 < s; ++i1)
                for (int i2 = 0; i2 < s; ++i2)
                    for (int j = 0; j < p; ++j) {
                        const int a = fam.perm(k1)[static_cast<std::size_t>(i1 * p + j)];
                        const int b = fam.perm(k2)[static_cast<std::size_t>(i2 * p + j)];
                        if (a == b) return PermCollision{k1, k2, i1, i2, j, a};
                    }
    return std::nullopt;
}

// Symmetric zero-zone index sets over the shifts of a width-N code:
// front zone {1..Z} and tail zone {N-Z..N-1}.
struct ZoneSpec {
    int z = 0;
    int n = 1;

    ZoneSpec(int z_, int n_) : z(z_), n(n_) {
        if (n < 1 || z < 0 || z >= n) throw std::invalid_argument("zone width must satisfy 0 <= Z < N");
    }

    bool contains(int abs_tau) const {
        return (abs_tau >= 1 && abs_tau <= z) || (abs_tau >= n - z && abs_tau <= n - 1);
    }
};

// Sum of zeta^(s*i) for i = 1..M where zeta is the primitive M-th root of
// unity: equals M when M | s and zero otherwise.
inline std::complex<double> root_of_unity_sum(int m, long long s) {
    if (m < 2) throw std::invalid_argument("root_of_unity_sum requires M >= 2");
    const PhaseAlphabet alph{m};
    std::complex<double> acc{0.0, 0.0};
    for (int i = 1; i <= m; ++i) acc += alph.unit(s * i);
    return acc;
}

}  // namespace ccset
