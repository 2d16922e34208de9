#include "deltakit/fmatrix.hpp"

#include <algorithm>

namespace dmk {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint32_t prime) : p(prime) {
    if (p < 2 || p >= (1u << 16) || !is_prime(p))
        throw ParameterError("field modulus must be a prime in [2, 2^16)");
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    if (a == 0) throw ParameterError("zero has no inverse");
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

FMatrix::FMatrix(FieldSpec field, GroundSet labels, std::vector<std::uint32_t> entries)
    : field_(field), labels_(std::move(labels)), entries_(std::move(entries)) {
    const std::size_t n = static_cast<std::size_t>(labels_.size());
    if (entries_.size() != n * n) throw ParameterError("matrix entries are not n x n");
    for (std::uint32_t v : entries_)
        if (v >= field_.p) throw ParameterError("matrix entry out of field range");
}

FMatrix FMatrix::zero(FieldSpec field, GroundSet labels) {
    const std::size_t n = static_cast<std::size_t>(labels.size());
    return FMatrix(field, std::move(labels), std::vector<std::uint32_t>(n * n, 0));
}

bool is_symmetric(const FMatrix& a) {
    for (int r = 0; r < a.size(); ++r)
        for (int c = r + 1; c < a.size(); ++c)
            if (a.at(r, c) != a.at(c, r)) return false;
    return true;
}

bool is_skew_symmetric(const FMatrix& a) {
    for (int r = 0; r < a.size(); ++r) {
        for (int c = r; c < a.size(); ++c) {
            if (a.at(r, c) != a.field().neg(a.at(c, r))) return false;
        }
    }
    if (a.field().p == 2) {
        for (int r = 0; r < a.size(); ++r)
            if (a.at(r, r) != 0) return false;
    }
    return true;
}

namespace detail {

int gf_rank(std::vector<std::uint32_t> m, int rows, int cols, const FieldSpec& f) {
    auto at = [&](int r, int c) -> std::uint32_t& {
        return m[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(c)];
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (at(r, c) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (int k = c; k < cols; ++k) std::swap(at(piv, k), at(rank, k));
        const std::uint32_t inv = f.inv(at(rank, c));
        for (int r = rank + 1; r < rows; ++r) {
            if (at(r, c) == 0) continue;
            const std::uint32_t factor = f.mul(at(r, c), inv);
            for (int k = c; k < cols; ++k) at(r, k) = f.sub(at(r, k), f.mul(factor, at(rank, k)));
        }
        ++rank;
    }
    return rank;
}

bool nonsingular_principal(const FMatrix& a, Mask x) {
    const int k = card(x);
    if (k == 0) return true;  // empty matrix is nonsingular by convention
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < a.size(); ++i)
        if ((x >> i) & 1u) idx.push_back(i);
    std::vector<std::uint32_t> sub(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            sub[static_cast<std::size_t>(r) * static_cast<std::size_t>(k) +
                static_cast<std::size_t>(c)] = a.at(idx[static_cast<std::size_t>(r)],
                                                    idx[static_cast<std::size_t>(c)]);
    return gf_rank(std::move(sub), k, k, a.field()) == k;
}

// Reduced row echelon form in place; returns pivot columns.
static std::vector<int> rref(std::vector<std::uint32_t>& m, int rows, int cols,
                             const FieldSpec& f) {
    auto at = [&](int r, int c) -> std::uint32_t& {
        return m[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(c)];
    };
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int piv = -1;
        for (int r = row; r < rows; ++r) {
            if (at(r, c) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int k = 0; k < cols; ++k) std::swap(at(piv, k), at(row, k));
        const std::uint32_t inv = f.inv(at(row, c));
        for (int k = 0; k < cols; ++k) at(row, k) = f.mul(at(row, k), inv);
        for (int r = 0; r < rows; ++r) {
            if (r == row || at(r, c) == 0) continue;
            const std::uint32_t factor = at(r, c);
            for (int k = 0; k < cols; ++k) at(r, k) = f.sub(at(r, k), f.mul(factor, at(row, k)));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace detail

RankNullityKernel rank_nullity_kernel(const FMatrix& a) {
    const int n = a.size();
    std::vector<std::uint32_t> work = a.entries();
    const std::vector<int> pivots = detail::rref(work, n, n, a.field());
    RankNullityKernel out;
    out.rank = static_cast<int>(pivots.size());
    out.nullity = n - out.rank;
    out.kernel.field = a.field();

    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const std::uint32_t coeff =
                work[r * static_cast<std::size_t>(n) + static_cast<std::size_t>(free)];
            v[static_cast<std::size_t>(pivots[r])] = a.field().neg(coeff);
        }
        out.kernel.vectors.push_back(std::move(v));
    }
    return out;
}

FMatrix principal_submatrix(const FMatrix& a, const Subset& x) {
    if (a.labels() != x.ground()) throw GroundMismatch("subset is over different labels");
    std::vector<int> idx;
    for (int i = 0; i < a.size(); ++i)
        if ((x.bits() >> i) & 1u) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    std::vector<std::uint32_t> sub(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            sub[static_cast<std::size_t>(r) * static_cast<std::size_t>(k) +
                static_cast<std::size_t>(c)] =
                a.at(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
    return FMatrix(a.field(), GroundSet(x.names()), std::move(sub));
}

SetSystem support_deltamatroid(const FMatrix& a, MatrixShape require, Exec exec) {
    if (require == MatrixShape::Symmetric && !is_symmetric(a))
        throw ShapeViolation("matrix is not symmetric");
    if (require == MatrixShape::Skew && !is_skew_symmetric(a))
        throw ShapeViolation("matrix is not skew-symmetric");
    const std::int64_t total = std::int64_t{1} << a.size();
    const auto good = transform_indexed<char>(total, exec, [&](std::int64_t x) {
        return static_cast<char>(detail::nonsingular_principal(a, static_cast<Mask>(x)));
    });
    std::vector<Mask> fam;
    for (std::int64_t x = 0; x < total; ++x)
        if (good[static_cast<std::size_t>(x)]) fam.push_back(static_cast<Mask>(x));
    return SetSystem(a.labels(), std::move(fam));
}

namespace {

// Dense inverse via Gauss-Jordan; precondition: square nonsingular.
std::vector<std::uint32_t> gf_inverse(std::vector<std::uint32_t> m, int n, const FieldSpec& f) {
    std::vector<std::uint32_t> aug(static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * n), 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            aug[static_cast<std::size_t>(r) * static_cast<std::size_t>(2 * n) +
                static_cast<std::size_t>(c)] =
                m[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(c)];
        aug[static_cast<std::size_t>(r) * static_cast<std::size_t>(2 * n) +
            static_cast<std::size_t>(n + r)] = 1;
    }
    const auto pivots = detail::rref(aug, n, 2 * n, f);
    if (static_cast<int>(pivots.size()) != n)
        throw SingularPivotBlock("principal submatrix is singular");
    std::vector<std::uint32_t> inv(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            inv[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(c)] =
                aug[static_cast<std::size_t>(r) * static_cast<std::size_t>(2 * n) +
                    static_cast<std::size_t>(n + c)];
    return inv;
}

struct PptBlocks {
    std::vector<int> in, out;              // index positions inside / outside X
    std::vector<std::uint32_t> p_inv;      // |in| x |in|
    std::vector<std::uint32_t> p_inv_q;    // |in| x |out|
    std::vector<std::uint32_t> neg_rp;     // |out| x |in|
    std::vector<std::uint32_t> schur;      // |out| x |out|
};

PptBlocks ppt_blocks(const FMatrix& a, Mask x) {
    PptBlocks b;
    for (int i = 0; i < a.size(); ++i) ((x >> i) & 1u ? b.in : b.out).push_back(i);
    const int k = static_cast<int>(b.in.size());
    const int m = static_cast<int>(b.out.size());
    const FieldSpec& f = a.field();

    std::vector<std::uint32_t> p(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            p[static_cast<std::size_t>(r) * static_cast<std::size_t>(k) +
              static_cast<std::size_t>(c)] = a.at(b.in[static_cast<std::size_t>(r)],
                                                  b.in[static_cast<std::size_t>(c)]);
    b.p_inv = k == 0 ? std::vector<std::uint32_t>{} : gf_inverse(std::move(p), k, f);

    auto q = [&](int r, int c) { return a.at(b.in[static_cast<std::size_t>(r)], b.out[static_cast<std::size_t>(c)]); };
    auto rr = [&](int r, int c) { return a.at(b.out[static_cast<std::size_t>(r)], b.in[static_cast<std::size_t>(c)]); };
    auto pinv = [&](int r, int c) {
        return b.p_inv[static_cast<std::size_t>(r) * static_cast<std::size_t>(k) +
                       static_cast<std::size_t>(c)];
    };

    b.p_inv_q.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(m), 0);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < m; ++c) {
            std::uint32_t acc = 0;
            for (int t = 0; t < k; ++t) acc = f.add(acc, f.mul(pinv(r, t), q(t, c)));
            b.p_inv_q[static_cast<std::size_t>(r) * static_cast<std::size_t>(m) +
                      static_cast<std::size_t>(c)] = acc;
        }

    b.neg_rp.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(k), 0);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < k; ++c) {
            std::uint32_t acc = 0;
            for (int t = 0; t < k; ++t) acc = f.add(acc, f.mul(rr(r, t), pinv(t, c)));
            b.neg_rp[static_cast<std::size_t>(r) * static_cast<std::size_t>(k) +
                     static_cast<std::size_t>(c)] = f.neg(acc);
        }

    b.schur.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            std::uint32_t acc = 0;
            for (int t = 0; t < k; ++t)
                acc = f.add(acc, f.mul(rr(r, t),
                                       b.p_inv_q[static_cast<std::size_t>(t) *
                                                     static_cast<std::size_t>(m) +
                                                 static_cast<std::size_t>(c)]));
            b.schur[static_cast<std::size_t>(r) * static_cast<std::size_t>(m) +
                    static_cast<std::size_t>(c)] =
                f.sub(a.at(b.out[static_cast<std::size_t>(r)], b.out[static_cast<std::size_t>(c)]), acc);
        }
    return b;
}

}  // namespace

FMatrix ppt(const FMatrix& a, const Subset& x) {
    if (a.labels() != x.ground()) throw GroundMismatch("subset is over different labels");
    const PptBlocks b = ppt_blocks(a, x.bits());
    const int n = a.size();
    const int k = static_cast<int>(b.in.size());
    const int m = static_cast<int>(b.out.size());
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto put = [&](int r, int c, std::uint32_t v) {
        out[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(c)] = v;
    };
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            put(b.in[static_cast<std::size_t>(r)], b.in[static_cast<std::size_t>(c)],
                b.p_inv[static_cast<std::size_t>(r) * static_cast<std::size_t>(k) +
                        static_cast<std::size_t>(c)]);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < m; ++c)
            put(b.in[static_cast<std::size_t>(r)], b.out[static_cast<std::size_t>(c)],
                b.p_inv_q[static_cast<std::size_t>(r) * static_cast<std::size_t>(m) +
                          static_cast<std::size_t>(c)]);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < k; ++c)
            put(b.out[static_cast<std::size_t>(r)], b.in[static_cast<std::size_t>(c)],
                b.neg_rp[static_cast<std::size_t>(r) * static_cast<std::size_t>(k) +
                         static_cast<std::size_t>(c)]);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            put(b.out[static_cast<std::size_t>(r)], b.out[static_cast<std::size_t>(c)],
                b.schur[static_cast<std::size_t>(r) * static_cast<std::size_t>(m) +
                        static_cast<std::size_t>(c)]);
    return FMatrix(a.field(), a.labels(), std::move(out));
}

FMatrix schur_complement(const FMatrix& a, const Subset& x) {
    if (a.labels() != x.ground()) throw GroundMismatch("subset is over different labels");
    const PptBlocks b = ppt_blocks(a, x.bits());
    return FMatrix(a.field(), GroundSet(x.complement().names()), b.schur);
}

SetSystem column_matroid(const FMatrix& a) {
    const int n = a.size();
    const int rank =
        detail::gf_rank(a.entries(), n, n, a.field());
    std::vector<Mask> fam;
    const std::int64_t total = std::int64_t{1} << n;
    for (std::int64_t xi = 0; xi < total; ++xi) {
        const Mask x = static_cast<Mask>(xi);
        if (card(x) != rank) continue;
        std::vector<int> cols;
        for (int i = 0; i < n; ++i)
            if ((x >> i) & 1u) cols.push_back(i);
        std::vector<std::uint32_t> sub(static_cast<std::size_t>(n) * cols.size());
        for (int r = 0; r < n; ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                sub[static_cast<std::size_t>(r) * cols.size() + c] =
                    a.at(r, cols[c]);
        if (detail::gf_rank(std::move(sub), n, static_cast<int>(cols.size()), a.field()) == rank)
            fam.push_back(x);
    }
    return SetSystem(a.labels(), std::move(fam));
}

}  // namespace dmk
