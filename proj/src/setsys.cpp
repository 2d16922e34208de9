#include "deltakit/setsys.hpp"

#include <algorithm>
#include <cctype>

namespace dmk {

namespace {

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (std::isspace(c)) return false;
    return true;
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > kMaxGroundSize)
        throw ParameterError("ground set exceeds cap of " + std::to_string(kMaxGroundSize) + " elements");
    for (const auto& l : labels_) {
        if (!valid_label(l))
            throw ParameterError("element names must be nonempty and whitespace-free");
    }
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParameterError("ground set labels must be pairwise distinct");
}

bool GroundSet::has(std::string_view name) const {
    for (const auto& l : labels_)
        if (l == name) return true;
    return false;
}

int GroundSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return static_cast<int>(i);
    throw UnknownElement("unknown element '" + std::string(name) + "'");
}

Mask GroundSet::mask_of(std::span<const std::string> names) const {
    Mask m = 0;
    for (const auto& n : names) {
        Mask bit = Mask{1} << index_of(n);
        if (m & bit) throw DuplicateSubset("element '" + n + "' listed twice in one subset");
        m |= bit;
    }
    return m;
}

std::vector<std::string> GroundSet::names_of(Mask m) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if ((m >> i) & 1u) out.push_back(labels_[static_cast<std::size_t>(i)]);
    return out;
}

Subset::Subset(GroundSet ground, Mask bits) : ground_(std::move(ground)), bits_(bits) {
    if (bits_ & ~ground_.full_mask())
        throw GroundMismatch("subset mask has bits outside the ground set");
}

Subset Subset::of(const GroundSet& ground, std::span<const std::string> names) {
    return Subset(ground, ground.mask_of(names));
}

SetSystem::SetSystem(GroundSet ground, std::vector<Mask> family)
    : ground_(std::move(ground)), family_(std::move(family)) {
    for (Mask y : family_)
        if (y & ~ground_.full_mask())
            throw GroundMismatch("family member has bits outside the ground set");
    detail::canonicalize_family(family_);
    if (std::adjacent_find(family_.begin(), family_.end()) != family_.end())
        throw DuplicateSubset("family contains a duplicate subset");
}

SetSystem SetSystem::from_names(GroundSet ground, const std::vector<std::vector<std::string>>& sets) {
    std::vector<Mask> fam;
    fam.reserve(sets.size());
    for (const auto& names : sets) fam.push_back(ground.mask_of(names));
    return SetSystem(std::move(ground), std::move(fam));
}

bool SetSystem::contains(Mask y) const { return detail::family_contains(family_, y); }

SetSystem SetSystem::with_family(std::vector<Mask> family) const {
    SetSystem out;
    out.ground_ = ground_;
    detail::canonicalize_family(family);
    out.family_ = std::move(family);
    return out;
}

namespace {

void check_ground(const SetSystem& m, const Subset& x) {
    if (m.ground() != x.ground())
        throw GroundMismatch("subset is over a different ground set");
}

void check_proper(const SetSystem& m) {
    if (!m.proper()) throw ImproperSystem("operation requires a proper set system");
}

}  // namespace

SetSystem pivot(const SetSystem& m, const Subset& x) {
    check_ground(m, x);
    return m.with_family(detail::pivot_family(m.family(), x.bits()));
}

SetSystem loop_complement(const SetSystem& m, const Subset& x) {
    check_ground(m, x);
    return m.with_family(detail::loop_family(m.family(), x.bits()));
}

SetSystem dual_pivot(const SetSystem& m, const Subset& x) {
    check_ground(m, x);
    return m.with_family(detail::dual_family(m.family(), x.bits()));
}

SetSystem restrict_to(const SetSystem& m, const Subset& x) {
    check_ground(m, x);
    const Mask xb = x.bits();
    GroundSet sub(x.names());
    std::vector<Mask> fam;
    for (Mask y : m.family()) {
        if (y & ~xb) continue;
        // compress the kept bit positions into consecutive low bits
        Mask packed = 0;
        int j = 0;
        for (int i = 0; i < m.ground().size(); ++i) {
            if (!((xb >> i) & 1u)) continue;
            if ((y >> i) & 1u) packed |= Mask{1} << j;
            ++j;
        }
        fam.push_back(packed);
    }
    return SetSystem(std::move(sub), std::move(fam));
}

SetSystem delete_from(const SetSystem& m, const Subset& x) {
    check_ground(m, x);
    return restrict_to(m, x.complement());
}

SetSystem extremal(const SetSystem& m, Extremal kind) {
    check_proper(m);
    switch (kind) {
        case Extremal::Min: return m.with_family(detail::minimal_members(m.family()));
        case Extremal::Max: return m.with_family(detail::maximal_members(m.family()));
        case Extremal::MinCard: return m.with_family(detail::mincard_members(m.family()));
        case Extremal::MaxCard: return m.with_family(detail::maxcard_members(m.family()));
    }
    throw ParameterError("bad extremal kind");
}

int distance(const SetSystem& m, const Subset& x) {
    check_proper(m);
    check_ground(m, x);
    return detail::family_distance(m.family(), x.bits());
}

int distance(const SetSystem& m) {
    check_proper(m);
    return detail::family_distance(m.family(), 0);
}

SetSystem pseudo(const SetSystem& m, std::string_view v, PseudoOp op) {
    check_proper(m);
    const Mask vbit = Mask{1} << m.ground().index_of(v);
    std::vector<Mask> fam;
    for (Mask y : m.family()) {
        if (op == PseudoOp::Delete) {
            if (!(y & vbit)) fam.push_back(y | vbit);
        } else {
            if (y & vbit) fam.push_back(y & ~vbit);
        }
    }
    return m.with_family(std::move(fam));
}

bool is_equicardinal(const SetSystem& m) {
    check_proper(m);
    return detail::family_equicardinal(m.family());
}

namespace detail {

void canonicalize_family(std::vector<Mask>& fam) {
    std::sort(fam.begin(), fam.end(), mask_less);
}

bool family_contains(const std::vector<Mask>& fam, Mask y) {
    return std::binary_search(fam.begin(), fam.end(), y, mask_less);
}

std::vector<Mask> pivot_family(std::vector<Mask> fam, Mask x) {
    for (Mask& y : fam) y ^= x;
    canonicalize_family(fam);
    return fam;
}

// D xor {Z | Z in shifted}, both sides canonical and duplicate-free.
static std::vector<Mask> family_xor(const std::vector<Mask>& fam, std::vector<Mask> shifted) {
    canonicalize_family(shifted);
    std::vector<Mask> out;
    out.reserve(fam.size() + shifted.size());
    std::set_symmetric_difference(fam.begin(), fam.end(), shifted.begin(), shifted.end(),
                                  std::back_inserter(out), mask_less);
    return out;
}

std::vector<Mask> loop_singleton(const std::vector<Mask>& fam, Mask vbit) {
    std::vector<Mask> shifted;
    for (Mask z : fam)
        if (!(z & vbit)) shifted.push_back(z | vbit);
    return family_xor(fam, std::move(shifted));
}

std::vector<Mask> dual_singleton(const std::vector<Mask>& fam, Mask vbit) {
    std::vector<Mask> shifted;
    for (Mask z : fam)
        if (z & vbit) shifted.push_back(z & ~vbit);
    return family_xor(fam, std::move(shifted));
}

std::vector<Mask> loop_family(std::vector<Mask> fam, Mask x) {
    while (x) {
        const Mask bit = x & (~x + 1);
        fam = loop_singleton(fam, bit);
        x ^= bit;
    }
    return fam;
}

std::vector<Mask> dual_family(std::vector<Mask> fam, Mask x) {
    while (x) {
        const Mask bit = x & (~x + 1);
        fam = dual_singleton(fam, bit);
        x ^= bit;
    }
    return fam;
}

std::vector<Mask> minimal_members(const std::vector<Mask>& fam) {
    std::vector<Mask> out;
    for (Mask y : fam) {
        bool minimal = true;
        for (Mask z : fam) {
            if (z == y) break;  // canonical order: only smaller-card members precede y
            if (!(z & ~y)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(y);
    }
    return out;
}

std::vector<Mask> maximal_members(const std::vector<Mask>& fam) {
    std::vector<Mask> out;
    for (Mask y : fam) {
        bool maximal = true;
        for (auto it = fam.rbegin(); it != fam.rend() && *it != y; ++it) {
            if (!(y & ~*it)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(y);
    }
    return out;
}

std::vector<Mask> mincard_members(const std::vector<Mask>& fam) {
    const int c = card(fam.front());  // canonical order: front is smallest
    std::vector<Mask> out;
    for (Mask y : fam) {
        if (card(y) != c) break;
        out.push_back(y);
    }
    return out;
}

std::vector<Mask> maxcard_members(const std::vector<Mask>& fam) {
    const int c = card(fam.back());
    std::vector<Mask> out;
    for (auto it = fam.rbegin(); it != fam.rend() && card(*it) == c; ++it) out.push_back(*it);
    std::reverse(out.begin(), out.end());
    return out;
}

bool family_equicardinal(const std::vector<Mask>& fam) {
    return fam.empty() || card(fam.front()) == card(fam.back());
}

int family_distance(const std::vector<Mask>& fam, Mask x) {
    int best = kMaxGroundSize + 1;
    for (Mask y : fam) best = std::min(best, card(x ^ y));
    return best;
}

std::vector<Mask> masks_in_canonical_order(int n) {
    std::vector<Mask> out(std::size_t{1} << n);
    for (Mask x = 0; x < out.size(); ++x) out[x] = x;
    std::sort(out.begin(), out.end(), mask_less);
    return out;
}

}  // namespace detail

}  // namespace dmk
