#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "deltakit/dmatroid.hpp"
#include "deltakit/setsys.hpp"

namespace dmk {

// The six invertible vertex flips on one element, named by their reduced
// words over {+, *}; words apply left to right.
enum class Flip : std::uint8_t {
    Id = 0,         // ""
    Loop = 1,       // "+"
    Pivot = 2,      // "*"
    Dual = 3,       // "+*+" == "*+*"
    LoopPivot = 4,  // "+*"
    PivotLoop = 5,  // "*+"
};

inline constexpr int kFlipCount = 6;

// apply a, then b
Flip compose(Flip a, Flip b);
Flip flip_inverse(Flip a);
std::string_view flip_word(Flip a);

enum class WordOp : std::uint8_t { Pivot, Loop, Dual };

struct FlipToken {
    std::string element;
    WordOp op;

    friend bool operator==(const FlipToken& a, const FlipToken& b) {
        return a.element == b.element && a.op == b.op;
    }
};

// A sequence of single-element flips, applied left to right.
struct FlipWord {
    std::vector<FlipToken> tokens;
};

// Whitespace-separated tokens "*v" (pivot), "+v" (loop), "~v" (dual pivot).
FlipWord parse_word(std::string_view dsl);
std::string format_word(const FlipWord& w);

// One group element per ground element; the reduced form of a word.
class FlipAssignment {
public:
    FlipAssignment() = default;
    explicit FlipAssignment(GroundSet ground)
        : ground_(std::move(ground)), values_(static_cast<std::size_t>(ground_.size()), Flip::Id) {}

    const GroundSet& ground() const { return ground_; }
    Flip at(int i) const { return values_.at(static_cast<std::size_t>(i)); }
    void set(int i, Flip f) { values_.at(static_cast<std::size_t>(i)) = f; }
    void compose_at(int i, Flip f) { set(i, compose(at(i), f)); }

    friend bool operator==(const FlipAssignment& a, const FlipAssignment& b) {
        return a.ground_ == b.ground_ && a.values_ == b.values_;
    }

private:
    GroundSet ground_;
    std::vector<Flip> values_;
};

FlipAssignment reduce_word(const FlipWord& w, const GroundSet& ground);

// +X *Y +Z with X inside Y; reproduces the assignment when applied in
// that order.
struct NormalForm {
    Subset x, y, z;
};

NormalForm normal_form(const FlipAssignment& a);

SetSystem apply_assignment(const SetSystem& m, const FlipAssignment& a);
SetSystem apply_word(const SetSystem& m, const FlipWord& w);
SetSystem apply_normal_form(const SetSystem& m, const NormalForm& nf);

inline constexpr int kDefaultOrbitCap = 6;

// All distinct images of M under the 6^n invertible flip assignments,
// sorted canonically.
std::vector<SetSystem> orbit(const SetSystem& m, int cap = kDefaultOrbitCap,
                             Exec exec = Exec::Parallel);

// Every orbit member is a delta-matroid.  A false verdict carries the
// normal form of the first failing assignment in canonical enumeration
// order.
CheckVerdict is_vf_closed(const SetSystem& m, int cap = kDefaultOrbitCap,
                          Exec exec = Exec::Parallel);

namespace detail {

// Assignments enumerate as mixed-radix indices: element i is digit i
// (least significant first), digit values follow the Flip enum order.
FlipAssignment assignment_from_index(const GroundSet& ground, std::int64_t index);
std::int64_t assignment_count(int n);  // 6^n

std::vector<Mask> apply_assignment_family(std::vector<Mask> fam, const FlipAssignment& a);

}  // namespace detail

}  // namespace dmk
