#pragma once

#include <cstdint>
#include <vector>

#include "deltakit/parallel.hpp"
#include "deltakit/setsys.hpp"

namespace dmk {

// Prime modulus, 2 <= p < 2^16.
struct FieldSpec {
    std::uint32_t p = 2;

    FieldSpec() = default;
    explicit FieldSpec(std::uint32_t prime);

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t inv(std::uint32_t a) const;  // throws ParameterError on 0

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p == b.p; }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.p != b.p; }
};

bool is_prime(std::uint32_t p);

// Square matrix over GF(p) with rows and columns indexed by a ground set.
class FMatrix {
public:
    FMatrix() = default;
    FMatrix(FieldSpec field, GroundSet labels, std::vector<std::uint32_t> entries);
    static FMatrix zero(FieldSpec field, GroundSet labels);

    const FieldSpec& field() const { return field_; }
    const GroundSet& labels() const { return labels_; }
    int size() const { return labels_.size(); }
    std::uint32_t at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(size()) +
                        static_cast<std::size_t>(c)];
    }
    const std::vector<std::uint32_t>& entries() const { return entries_; }

    friend bool operator==(const FMatrix& a, const FMatrix& b) {
        return a.field_ == b.field_ && a.labels_ == b.labels_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const FMatrix& a, const FMatrix& b) { return !(a == b); }

private:
    FieldSpec field_;
    GroundSet labels_;
    std::vector<std::uint32_t> entries_;  // row-major, values < p
};

bool is_symmetric(const FMatrix& a);
// Transpose equals negation; over GF(2) additionally zero diagonal.
bool is_skew_symmetric(const FMatrix& a);

struct KernelBasis {
    FieldSpec field;
    std::vector<std::vector<std::uint32_t>> vectors;  // canonical reduced-echelon basis
};

struct RankNullityKernel {
    int rank = 0;
    int nullity = 0;
    KernelBasis kernel;
};

// Gaussian elimination over GF(p); the 0x0 matrix is nonsingular.
RankNullityKernel rank_nullity_kernel(const FMatrix& a);

FMatrix principal_submatrix(const FMatrix& a, const Subset& x);

enum class MatrixShape { Symmetric, Skew };

// M_A = { X | A[X] nonsingular }; requires the declared shape.
SetSystem support_deltamatroid(const FMatrix& a, MatrixShape require, Exec exec = Exec::Parallel);

// Principal pivot transform on a nonsingular principal submatrix A[X]:
// blocks P^-1, P^-1 Q, -R P^-1, S - R P^-1 Q in the original index order.
FMatrix ppt(const FMatrix& a, const Subset& x);

// S - R P^-1 Q on V \ X; preserves nullity.
FMatrix schur_complement(const FMatrix& a, const Subset& x);

// Column subsets forming bases of the column space; all of size rank(A).
SetSystem column_matroid(const FMatrix& a);

// The B-block of a standard binary representation [I | B]: rows indexed by
// R, columns by C, entries over GF(2).
struct BinaryStdRep {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::uint32_t>> bits;  // |R| x |C|, entries 0/1
};

namespace detail {

// rank of a rectangular matrix over GF(p), row-major
int gf_rank(std::vector<std::uint32_t> m, int rows, int cols, const FieldSpec& f);
bool nonsingular_principal(const FMatrix& a, Mask x);

}  // namespace detail

}  // namespace dmk
