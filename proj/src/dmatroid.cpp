#include "deltakit/dmatroid.hpp"

#include <algorithm>

namespace dmk {

namespace {

using nlohmann::json;

void check_proper(const SetSystem& m) {
    if (!m.proper()) throw ImproperSystem("checker requires a proper set system");
}

json names_json(const GroundSet& g, Mask m) { return json(g.names_of(m)); }

int system_d(const SetSystem& s) { return detail::family_distance(s.family(), 0); }

}  // namespace

CheckVerdict check_exchange(const SetSystem& m) {
    check_proper(m);
    const auto& fam = m.family();
    const int n = m.ground().size();
    for (Mask x : fam) {
        for (Mask y : fam) {
            Mask sym = x ^ y;
            for (int u = 0; u < n; ++u) {
                const Mask ub = Mask{1} << u;
                if (!(sym & ub)) continue;
                if (m.contains(x ^ ub)) continue;
                bool ok = false;
                for (int v = 0; v < n && !ok; ++v) {
                    const Mask vb = Mask{1} << v;
                    if (v == u || !(sym & vb)) continue;
                    if (m.contains(x ^ ub ^ vb)) ok = true;
                }
                if (!ok) {
                    json w;
                    w["X"] = names_json(m.ground(), x);
                    w["Y"] = names_json(m.ground(), y);
                    w["u"] = m.ground().label(u);
                    return CheckVerdict{false, std::move(w)};
                }
            }
        }
    }
    return CheckVerdict{};
}

namespace detail {

bool isodistant_violation_at(const std::vector<Mask>& fam, Mask x, Mask* lo, Mask* hi) {
    auto mins = minimal_members(pivot_family(fam, x));
    if (family_equicardinal(mins)) return false;
    if (lo) *lo = mins.front();
    if (hi) *hi = mins.back();
    return true;
}

bool family_isodistant(const std::vector<Mask>& fam, int n) {
    const std::int64_t total = std::int64_t{1} << n;
    for (std::int64_t x = 0; x < total; ++x)
        if (isodistant_violation_at(fam, static_cast<Mask>(x), nullptr, nullptr)) return false;
    return true;
}

bool family_downward_closed(const std::vector<Mask>& fam, int n) {
    // closed under removing one element implies closed under subsets
    for (Mask y : fam) {
        for (int i = 0; i < n; ++i) {
            const Mask bit = Mask{1} << i;
            if ((y & bit) && !family_contains(fam, y ^ bit)) return false;
        }
    }
    return true;
}

}  // namespace detail

CheckVerdict check_isodistant(const SetSystem& m, Exec exec) {
    check_proper(m);
    const int n = m.ground().size();
    const auto order = detail::masks_in_canonical_order(n);
    const auto& fam = m.family();
    const std::int64_t idx = first_violation(
        static_cast<std::int64_t>(order.size()), exec, [&](std::int64_t i) {
            return detail::isodistant_violation_at(fam, order[static_cast<std::size_t>(i)], nullptr,
                                                   nullptr);
        });
    if (idx < 0) return CheckVerdict{};
    Mask lo = 0, hi = 0;
    const Mask x = order[static_cast<std::size_t>(idx)];
    detail::isodistant_violation_at(fam, x, &lo, &hi);
    json w;
    w["X"] = names_json(m.ground(), x);
    // two inclusion-minimal members of M*X of distinct cardinality
    w["members"] = json::array({names_json(m.ground(), lo), names_json(m.ground(), hi)});
    return CheckVerdict{false, std::move(w)};
}

CheckVerdict is_delta_matroid(const SetSystem& m, DmMethod method, Exec exec) {
    switch (method) {
        case DmMethod::Exchange: return check_exchange(m);
        case DmMethod::Isodistant: return check_isodistant(m, exec);
        case DmMethod::Both: {
            CheckVerdict a = check_exchange(m);
            CheckVerdict b = check_isodistant(m, exec);
            if (a.holds != b.holds)
                throw OracleDisagreement("exchange and isodistance checkers disagree");
            return a.holds ? a : b;  // prefer the isodistance witness on failure
        }
    }
    throw ParameterError("bad delta-matroid method");
}

namespace {

// Cardinality property: for each X, the maximal members among
// {Y in M | Y subseteq X} share one cardinality.
bool cardinality_property(const SetSystem& m) {
    const int n = m.ground().size();
    const std::int64_t total = std::int64_t{1} << n;
    for (std::int64_t xi = 0; xi < total; ++xi) {
        const Mask x = static_cast<Mask>(xi);
        std::vector<Mask> inside;
        for (Mask y : m.family())
            if (!(y & ~x)) inside.push_back(y);
        if (inside.empty()) continue;
        if (!detail::family_equicardinal(detail::maximal_members(inside))) return false;
    }
    return true;
}

}  // namespace

CheckVerdict is_matroid(const SetSystem& m, MatroidDesc desc, Exec exec) {
    check_proper(m);
    if (desc == MatroidDesc::Bases) {
        if (!is_equicardinal(m)) {
            json w;
            w["condition"] = "equicardinal";
            w["members"] = json::array(
                {names_json(m.ground(), m.family().front()), names_json(m.ground(), m.family().back())});
            return CheckVerdict{false, std::move(w)};
        }
        CheckVerdict iso = check_isodistant(m, exec);
        if (!iso.holds) iso.witness["condition"] = "isodistant";
        return iso;
    }

    const bool down = detail::family_downward_closed(m.family(), m.ground().size());
    CheckVerdict main;
    if (!down) {
        json w;
        w["condition"] = "downward_closed";
        main = CheckVerdict{false, std::move(w)};
    } else {
        main = check_isodistant(m, exec);
        if (!main.holds) main.witness["condition"] = "isodistant";
    }
    const bool oracle = down && cardinality_property(m);
    if (main.holds != oracle)
        throw OracleDisagreement("independent-set checker disagrees with cardinality property");
    return main;
}

namespace {

TripleReport make_triple(const SetSystem& m, std::string_view v, bool max_form, Exec exec) {
    m.ground().index_of(v);  // UnknownElement before the heavier check
    if (!check_isodistant(m, exec).holds)
        throw NotDeltaMatroid("triple theorems require a delta-matroid");
    const Subset vs = Subset::of(m.ground(), std::array<std::string, 1>{std::string(v)});

    TripleReport rep;
    if (max_form) {
        rep.systems = {extremal(m, Extremal::Max), extremal(pivot(m, vs), Extremal::Max),
                       extremal(loop_complement(m, vs), Extremal::MaxCard)};
    } else {
        rep.systems = {extremal(m, Extremal::Min), extremal(pivot(m, vs), Extremal::Min),
                       extremal(dual_pivot(m, vs), Extremal::MinCard)};
    }

    int equal_pairs = 0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (rep.systems[static_cast<std::size_t>(i)] == rep.systems[static_cast<std::size_t>(j)]) {
            rep.equal_pair = {i, j};
            rep.odd_one = k;
            ++equal_pairs;
        }
    }
    if (equal_pairs != 1)
        throw OracleDisagreement("triple systems do not split into one equal pair");

    const SetSystem& pair_sys = rep.systems[static_cast<std::size_t>(rep.equal_pair[0])];
    const SetSystem& odd_sys = rep.systems[static_cast<std::size_t>(rep.odd_one)];
    rep.delta = system_d(odd_sys) - system_d(pair_sys);
    rep.relation_holds =
        pseudo(odd_sys, v, max_form ? PseudoOp::Delete : PseudoOp::Contract) == pair_sys;
    return rep;
}

}  // namespace

TripleReport min_triple(const SetSystem& m, std::string_view v) {
    return make_triple(m, v, false, Exec::Parallel);
}

TripleReport max_triple(const SetSystem& m, std::string_view v) {
    return make_triple(m, v, true, Exec::Parallel);
}

CheckVerdict distance_minor_check(const SetSystem& m, Exec exec) {
    check_proper(m);
    const int n = m.ground().size();
    const auto order = detail::masks_in_canonical_order(n);
    const std::int64_t side = static_cast<std::int64_t>(order.size());
    const auto& fam = m.family();

    // index i encodes (Y, X) with Y outermost, both in canonical order
    auto violation = [&](std::int64_t i, int* d_pivot, int* d_restricted) {
        const Mask y = order[static_cast<std::size_t>(i / side)];
        const Mask x = order[static_cast<std::size_t>(i % side)];
        int d_full = kMaxGroundSize + 1, d_sub = kMaxGroundSize + 1;
        for (Mask z : fam) {
            const Mask zy = z ^ y;
            d_full = std::min(d_full, card(zy));
            if (!(zy & ~x)) d_sub = std::min(d_sub, card(zy));
        }
        if (d_sub > kMaxGroundSize) return false;  // restriction improper
        if (d_pivot) *d_pivot = d_full;
        if (d_restricted) *d_restricted = d_sub;
        return d_full != d_sub;
    };

    const std::int64_t idx = first_violation(side * side, exec, [&](std::int64_t i) {
        return violation(i, nullptr, nullptr);
    });
    if (idx < 0) return CheckVerdict{};
    int d_pivot = 0, d_restricted = 0;
    violation(idx, &d_pivot, &d_restricted);
    json w;
    w["Y"] = names_json(m.ground(), order[static_cast<std::size_t>(idx / side)]);
    w["X"] = names_json(m.ground(), order[static_cast<std::size_t>(idx % side)]);
    w["d_pivot"] = d_pivot;
    w["d_restricted"] = d_restricted;
    return CheckVerdict{false, std::move(w)};
}

RankProfile rank_profile(const SetSystem& m, const Subset& x) {
    RankProfile rp;
    rp.d = distance(m, x);
    rp.r = x.cardinality() - rp.d;
    rp.r_prime = m.ground().size() - rp.d;
    int best = -kMaxGroundSize - 1;
    for (Mask z : m.family())
        best = std::max(best, card(z & x.bits()) - card(z & ~x.bits() & m.ground().full_mask()));
    rp.r_triple_prime = best;
    if (rp.r_triple_prime != rp.r)
        throw OracleDisagreement("birank r''' disagrees with |X| - d");
    return rp;
}

}  // namespace dmk
