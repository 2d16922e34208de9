#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deltakit/errors.hpp"

namespace dmk {

// Subsets of a ground set are bitmasks; bit 0 is the first label.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

inline int card(Mask m) { return std::popcount(m); }

// Canonical subset order: by cardinality, ties by numeric mask value.
inline bool mask_less(Mask a, Mask b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
}

// Ordered list of distinct element names; the order fixes bit positions.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

    bool has(std::string_view name) const;
    int index_of(std::string_view name) const;  // throws UnknownElement

    Mask full_mask() const { return size() == 0 ? 0u : (Mask{1} << size()) - 1; }
    Mask mask_of(std::span<const std::string> names) const;
    std::vector<std::string> names_of(Mask m) const;  // in ground order

    friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }
    friend bool operator!=(const GroundSet& a, const GroundSet& b) { return !(a == b); }

private:
    std::vector<std::string> labels_;
};

// A subset of a specific ground set.
class Subset {
public:
    Subset() = default;
    Subset(GroundSet ground, Mask bits);
    static Subset of(const GroundSet& ground, std::span<const std::string> names);
    static Subset empty(const GroundSet& ground) { return Subset(ground, 0); }
    static Subset full(const GroundSet& ground) { return Subset(ground, ground.full_mask()); }

    const GroundSet& ground() const { return ground_; }
    Mask bits() const { return bits_; }
    int cardinality() const { return card(bits_); }
    bool contains(std::string_view name) const { return (bits_ >> ground_.index_of(name)) & 1u; }
    std::vector<std::string> names() const { return ground_.names_of(bits_); }
    Subset complement() const { return Subset(ground_, bits_ ^ ground_.full_mask()); }

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.ground_ == b.ground_ && a.bits_ == b.bits_;
    }

private:
    GroundSet ground_;
    Mask bits_ = 0;
};

// Ground set plus a canonically ordered family of subsets.  The family may
// be empty ("improper"); restriction legitimately produces such systems.
class SetSystem {
public:
    SetSystem() = default;
    SetSystem(GroundSet ground, std::vector<Mask> family);  // sorts; throws DuplicateSubset

    // Builds from element-name lists; throws UnknownElement / DuplicateSubset.
    static SetSystem from_names(GroundSet ground, const std::vector<std::vector<std::string>>& sets);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Mask>& family() const { return family_; }
    bool proper() const { return !family_.empty(); }
    int size() const { return static_cast<int>(family_.size()); }
    bool contains(Mask y) const;

    Subset subset(std::span<const std::string> names) const { return Subset::of(ground_, names); }
    Subset subset_bits(Mask bits) const { return Subset(ground_, bits); }

    // Same ground, new family (already duplicate-free; canonicalized here).
    SetSystem with_family(std::vector<Mask> family) const;

    friend bool operator==(const SetSystem& a, const SetSystem& b) {
        return a.ground_ == b.ground_ && a.family_ == b.family_;
    }
    friend bool operator!=(const SetSystem& a, const SetSystem& b) { return !(a == b); }

private:
    GroundSet ground_;
    std::vector<Mask> family_;
};

enum class Extremal { Min, Max, MinCard, MaxCard };
enum class PseudoOp { Delete, Contract };

// M * X: replace each member Y by Y xor X.
SetSystem pivot(const SetSystem& m, const Subset& x);

// M + X, via singleton steps (flips on distinct elements commute).
SetSystem loop_complement(const SetSystem& m, const Subset& x);

// M dual-pivot X == +X *X +X, via singleton steps.
SetSystem dual_pivot(const SetSystem& m, const Subset& x);

// M[X]: members contained in X, re-indexed over the shrunk ground set X.
SetSystem restrict_to(const SetSystem& m, const Subset& x);

// M minus X == M[V \ X].
SetSystem delete_from(const SetSystem& m, const Subset& x);

SetSystem extremal(const SetSystem& m, Extremal kind);  // throws ImproperSystem

// d_M(X): minimum |X xor Y| over members Y.
int distance(const SetSystem& m, const Subset& x);
int distance(const SetSystem& m);  // d_M = d_M(empty), size of a smallest member

// Pseudo-deletion (v-free members, v adjoined) / pseudo-contraction
// (v-members, v removed); ground set unchanged; result may be improper.
SetSystem pseudo(const SetSystem& m, std::string_view v, PseudoOp op);

bool is_equicardinal(const SetSystem& m);  // throws ImproperSystem

namespace detail {

// Family-level kernels shared by the checkers and the flip group; families
// are duplicate-free mask vectors in canonical order.
void canonicalize_family(std::vector<Mask>& fam);
bool family_contains(const std::vector<Mask>& fam, Mask y);
std::vector<Mask> pivot_family(std::vector<Mask> fam, Mask x);
std::vector<Mask> loop_singleton(const std::vector<Mask>& fam, Mask vbit);
std::vector<Mask> dual_singleton(const std::vector<Mask>& fam, Mask vbit);
std::vector<Mask> loop_family(std::vector<Mask> fam, Mask x);
std::vector<Mask> dual_family(std::vector<Mask> fam, Mask x);
std::vector<Mask> minimal_members(const std::vector<Mask>& fam);
std::vector<Mask> maximal_members(const std::vector<Mask>& fam);
std::vector<Mask> mincard_members(const std::vector<Mask>& fam);
std::vector<Mask> maxcard_members(const std::vector<Mask>& fam);
bool family_equicardinal(const std::vector<Mask>& fam);
int family_distance(const std::vector<Mask>& fam, Mask x);  // fam nonempty

// All 2^n subset masks in canonical order.
std::vector<Mask> masks_in_canonical_order(int n);

}  // namespace detail

}  // namespace dmk
