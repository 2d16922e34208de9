#pragma once

#include <array>
#include <string_view>

#include <json.hpp>

#include "deltakit/parallel.hpp"
#include "deltakit/setsys.hpp"

namespace dmk {

// Verdict of a characterization checker.  A false verdict always carries a
// structured witness that re-validates as a violation.
struct CheckVerdict {
    bool holds = true;
    nlohmann::json witness;  // null when holds
};

// Verdict object for the "two equal, third off by one" theorems.  Exactly
// two of the three derived systems coincide (the pair); delta is the
// d-value of the odd system minus the d-value of the pair.
struct TripleReport {
    std::array<SetSystem, 3> systems;
    std::array<int, 2> equal_pair{0, 1};
    int odd_one = 2;
    int delta = 0;  // +1 for the min/kernel form, -1 for the max form
    bool relation_holds = false;
};

// r = |X| - d, r' = |V| - d, and the two-argument birank specialized to
// (X, V \ X), which coincides with r.
struct RankProfile {
    int r = 0;
    int d = 0;
    int r_prime = 0;
    int r_triple_prime = 0;
};

enum class DmMethod { Exchange, Isodistant, Both };
enum class MatroidDesc { Bases, Independent };

// Symmetric exchange axiom, brute force over all (X, Y, u, v).
CheckVerdict check_exchange(const SetSystem& m);

// For every X, the inclusion-minimal members of M*X share one cardinality.
CheckVerdict check_isodistant(const SetSystem& m, Exec exec = Exec::Parallel);

// Both methods are provably equivalent; Both runs the two checkers and
// throws OracleDisagreement if they ever differ.
CheckVerdict is_delta_matroid(const SetSystem& m, DmMethod method = DmMethod::Both,
                              Exec exec = Exec::Parallel);

// Bases: equicardinal and isodistant.  Independent: downward closed and
// isodistant, cross-checked against the cardinality-property oracle.
CheckVerdict is_matroid(const SetSystem& m, MatroidDesc desc, Exec exec = Exec::Parallel);

// min(M), min(M*v), minc(M dual v): two equal, the odd one has d one
// larger and pseudo-contracts on v back to the pair.
TripleReport min_triple(const SetSystem& m, std::string_view v);

// max(M), max(M*v), maxc(M+v): two equal, the odd one has d one smaller
// and pseudo-deletes on v back to the pair.
TripleReport max_triple(const SetSystem& m, std::string_view v);

// d_{M*Y} = d_{(M*Y)[X]} for all X, Y with the restriction proper; holds
// exactly for delta-matroids.
CheckVerdict distance_minor_check(const SetSystem& m, Exec exec = Exec::Parallel);

RankProfile rank_profile(const SetSystem& m, const Subset& x);

namespace detail {

// Isodistance violation test at a single pivot mask, shared with the orbit
// closure kernel; fills two witnesses of distinct cardinality when it fails.
bool isodistant_violation_at(const std::vector<Mask>& fam, Mask x, Mask* lo, Mask* hi);
bool family_isodistant(const std::vector<Mask>& fam, int n);
bool family_downward_closed(const std::vector<Mask>& fam, int n);

}  // namespace detail

}  // namespace dmk
