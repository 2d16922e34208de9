#include "deltakit/flips.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace dmk {

namespace {

// S3 as permutations of {0,1,2}: + swaps 0,1 and * swaps 1,2.  perm[i] is
// the image of i; composition below is "apply a, then b".
using Perm = std::array<std::uint8_t, 3>;

constexpr std::array<Perm, kFlipCount> kPerms{{
    {0, 1, 2},  // Id
    {1, 0, 2},  // Loop
    {0, 2, 1},  // Pivot
    {2, 1, 0},  // Dual
    {2, 0, 1},  // LoopPivot
    {1, 2, 0},  // PivotLoop
}};

constexpr Perm perm_compose(const Perm& a, const Perm& b) {
    return Perm{b[a[0]], b[a[1]], b[a[2]]};
}

constexpr int perm_index(const Perm& p) {
    for (int i = 0; i < kFlipCount; ++i)
        if (kPerms[static_cast<std::size_t>(i)] == p) return i;
    return -1;
}

constexpr std::array<std::array<std::uint8_t, kFlipCount>, kFlipCount> make_compose_table() {
    std::array<std::array<std::uint8_t, kFlipCount>, kFlipCount> t{};
    for (int a = 0; a < kFlipCount; ++a)
        for (int b = 0; b < kFlipCount; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(
                perm_index(perm_compose(kPerms[static_cast<std::size_t>(a)],
                                        kPerms[static_cast<std::size_t>(b)])));
    return t;
}

constexpr auto kComposeTable = make_compose_table();

constexpr std::array<std::uint8_t, kFlipCount> make_inverse_table() {
    std::array<std::uint8_t, kFlipCount> t{};
    for (int a = 0; a < kFlipCount; ++a)
        for (int b = 0; b < kFlipCount; ++b)
            if (kComposeTable[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0)
                t[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    return t;
}

constexpr auto kInverseTable = make_inverse_table();

constexpr std::array<std::string_view, kFlipCount> kWords{"", "+", "*", "+*+", "+*", "*+"};

Flip flip_of_op(WordOp op) {
    switch (op) {
        case WordOp::Pivot: return Flip::Pivot;
        case WordOp::Loop: return Flip::Loop;
        case WordOp::Dual: return Flip::Dual;
    }
    throw ParameterError("bad word op");
}

char op_char(WordOp op) {
    switch (op) {
        case WordOp::Pivot: return '*';
        case WordOp::Loop: return '+';
        case WordOp::Dual: return '~';
    }
    return '?';
}

}  // namespace

Flip compose(Flip a, Flip b) {
    return static_cast<Flip>(
        kComposeTable[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
}

Flip flip_inverse(Flip a) {
    return static_cast<Flip>(kInverseTable[static_cast<std::size_t>(a)]);
}

std::string_view flip_word(Flip a) { return kWords[static_cast<std::size_t>(a)]; }

FlipWord parse_word(std::string_view dsl) {
    FlipWord w;
    std::istringstream in{std::string(dsl)};
    std::string tok;
    while (in >> tok) {
        WordOp op;
        switch (tok[0]) {
            case '*': op = WordOp::Pivot; break;
            case '+': op = WordOp::Loop; break;
            case '~': op = WordOp::Dual; break;
            default:
                throw ParseError("word token '" + tok + "' must start with '*', '+' or '~'");
        }
        if (tok.size() < 2) throw ParseError("word token '" + tok + "' is missing an element name");
        w.tokens.push_back(FlipToken{tok.substr(1), op});
    }
    return w;
}

std::string format_word(const FlipWord& w) {
    std::string out;
    for (const auto& t : w.tokens) {
        if (!out.empty()) out += ' ';
        out += op_char(t.op);
        out += t.element;
    }
    return out;
}

FlipAssignment reduce_word(const FlipWord& w, const GroundSet& ground) {
    FlipAssignment a(ground);
    for (const auto& t : w.tokens) a.compose_at(ground.index_of(t.element), flip_of_op(t.op));
    return a;
}

NormalForm normal_form(const FlipAssignment& a) {
    Mask x = 0, y = 0, z = 0;
    for (int i = 0; i < a.ground().size(); ++i) {
        const Mask bit = Mask{1} << i;
        switch (a.at(i)) {
            case Flip::Id: break;
            case Flip::Loop: z |= bit; break;
            case Flip::Pivot: y |= bit; break;
            case Flip::PivotLoop: y |= bit; z |= bit; break;
            case Flip::LoopPivot: x |= bit; y |= bit; break;
            case Flip::Dual: x |= bit; y |= bit; z |= bit; break;
        }
    }
    return NormalForm{Subset(a.ground(), x), Subset(a.ground(), y), Subset(a.ground(), z)};
}

namespace detail {

std::vector<Mask> apply_assignment_family(std::vector<Mask> fam, const FlipAssignment& a) {
    for (int i = 0; i < a.ground().size(); ++i) {
        const Mask bit = Mask{1} << i;
        switch (a.at(i)) {
            case Flip::Id: break;
            case Flip::Loop: fam = loop_singleton(fam, bit); break;
            case Flip::Pivot: fam = pivot_family(std::move(fam), bit); break;
            case Flip::Dual: fam = dual_singleton(fam, bit); break;
            case Flip::LoopPivot:
                fam = pivot_family(loop_singleton(fam, bit), bit);
                break;
            case Flip::PivotLoop:
                fam = loop_singleton(pivot_family(std::move(fam), bit), bit);
                break;
        }
    }
    return fam;
}

FlipAssignment assignment_from_index(const GroundSet& ground, std::int64_t index) {
    FlipAssignment a(ground);
    for (int i = 0; i < ground.size(); ++i) {
        a.set(i, static_cast<Flip>(index % kFlipCount));
        index /= kFlipCount;
    }
    return a;
}

std::int64_t assignment_count(int n) {
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= kFlipCount;
    return total;
}

}  // namespace detail

SetSystem apply_assignment(const SetSystem& m, const FlipAssignment& a) {
    if (!m.proper()) throw ImproperSystem("apply_assignment requires a proper set system");
    if (m.ground() != a.ground()) throw GroundMismatch("assignment is over a different ground set");
    return m.with_family(detail::apply_assignment_family(m.family(), a));
}

SetSystem apply_word(const SetSystem& m, const FlipWord& w) {
    if (!m.proper()) throw ImproperSystem("apply_word requires a proper set system");
    std::vector<Mask> fam = m.family();
    for (const auto& t : w.tokens) {
        const Mask bit = Mask{1} << m.ground().index_of(t.element);
        switch (t.op) {
            case WordOp::Pivot: fam = detail::pivot_family(std::move(fam), bit); break;
            case WordOp::Loop: fam = detail::loop_singleton(fam, bit); break;
            case WordOp::Dual: fam = detail::dual_singleton(fam, bit); break;
        }
    }
    return m.with_family(std::move(fam));
}

SetSystem apply_normal_form(const SetSystem& m, const NormalForm& nf) {
    return loop_complement(pivot(loop_complement(m, nf.x), nf.y), nf.z);
}

namespace {

void check_orbit_pre(const SetSystem& m, int cap) {
    if (!m.proper()) throw ImproperSystem("orbit enumeration requires a proper set system");
    if (m.ground().size() > cap)
        throw OrbitTooLarge("ground set of " + std::to_string(m.ground().size()) +
                            " elements exceeds the orbit cap of " + std::to_string(cap));
}

struct FamilyHash {
    std::size_t operator()(const std::vector<Mask>& fam) const {
        std::size_t h = fam.size();
        for (Mask m : fam) h = h * 1099511628211ull + m;
        return h;
    }
};

// Images of every assignment in index order.
std::vector<std::vector<Mask>> all_images(const SetSystem& m, Exec exec) {
    const std::int64_t total = detail::assignment_count(m.ground().size());
    return transform_indexed<std::vector<Mask>>(total, exec, [&](std::int64_t i) {
        return detail::apply_assignment_family(
            m.family(), detail::assignment_from_index(m.ground(), i));
    });
}

}  // namespace

std::vector<SetSystem> orbit(const SetSystem& m, int cap, Exec exec) {
    check_orbit_pre(m, cap);
    auto images = all_images(m, exec);
    std::sort(images.begin(), images.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), mask_less);
    });
    images.erase(std::unique(images.begin(), images.end()), images.end());
    std::vector<SetSystem> out;
    out.reserve(images.size());
    for (auto& fam : images) out.push_back(m.with_family(std::move(fam)));
    return out;
}

CheckVerdict is_vf_closed(const SetSystem& m, int cap, Exec exec) {
    check_orbit_pre(m, cap);
    if (!check_isodistant(m, exec).holds)
        throw NotDeltaMatroid("vf-closure is defined for delta-matroids only");

    const auto images = all_images(m, exec);

    // walk in index order so the recorded representative is the first
    // assignment producing each distinct family
    std::unordered_set<std::vector<Mask>, FamilyHash> seen;
    std::vector<std::int64_t> reps;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(images.size()); ++i)
        if (seen.insert(images[static_cast<std::size_t>(i)]).second) reps.push_back(i);

    const int n = m.ground().size();
    const std::int64_t bad_rep = first_violation(
        static_cast<std::int64_t>(reps.size()), exec, [&](std::int64_t k) {
            return !detail::family_isodistant(
                images[static_cast<std::size_t>(reps[static_cast<std::size_t>(k)])], n);
        });
    if (bad_rep < 0) return CheckVerdict{};

    const std::int64_t idx = reps[static_cast<std::size_t>(bad_rep)];
    const NormalForm nf = normal_form(detail::assignment_from_index(m.ground(), idx));
    nlohmann::json w;
    w["X"] = nf.x.names();
    w["Y"] = nf.y.names();
    w["Z"] = nf.z.names();
    return CheckVerdict{false, std::move(w)};
}

}  // namespace dmk
