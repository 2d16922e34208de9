#include "deltakit/generators.hpp"

#include <algorithm>
#include <set>

namespace dmk {

GroundSet default_ground(int n) {
    if (n < 0 || n > kMaxGroundSize)
        throw ParameterError("ground size must be between 0 and " + std::to_string(kMaxGroundSize));
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return GroundSet(std::move(labels));
}

SetSystem uniform_matroid(int r, int n) {
    GroundSet g = default_ground(n);
    if (r < 0 || r > n) throw ParameterError("uniform matroid needs 0 <= r <= n");
    std::vector<Mask> fam;
    for (Mask x = 0; x < (Mask{1} << n); ++x)
        if (card(x) == r) fam.push_back(x);
    return SetSystem(std::move(g), std::move(fam));
}

SetSystem random_set_system(int n, std::uint64_t seed) {
    GroundSet g = default_ground(n);
    SplitMix64 rng(seed);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t k = 1 + rng.bounded(total);
    std::set<Mask> fam;
    while (fam.size() < k) fam.insert(static_cast<Mask>(rng.bounded(total)));
    return SetSystem(std::move(g), std::vector<Mask>(fam.begin(), fam.end()));
}

Graph random_graph(int n, double loop_prob, std::uint64_t seed) {
    GroundSet g = default_ground(n);
    SplitMix64 rng(seed);
    std::vector<std::uint32_t> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto at = [&](int r, int c) -> std::uint32_t& {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(c)];
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) at(i, j) = at(j, i) = rng.next() & 1u;
    for (int i = 0; i < n; ++i) at(i, i) = rng.chance(loop_prob) ? 1u : 0u;
    return Graph::from_matrix(FMatrix(FieldSpec(2), std::move(g), std::move(a)));
}

FMatrix random_symmetric(std::uint32_t p, int n, std::uint64_t seed) {
    const FieldSpec f(p);
    GroundSet g = default_ground(n);
    SplitMix64 rng(seed);
    std::vector<std::uint32_t> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const auto v = static_cast<std::uint32_t>(rng.bounded(p));
            a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = v;
            a[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = v;
        }
    }
    return FMatrix(f, std::move(g), std::move(a));
}

FMatrix random_skew(std::uint32_t p, int n, std::uint64_t seed) {
    const FieldSpec f(p);
    GroundSet g = default_ground(n);
    SplitMix64 rng(seed);
    std::vector<std::uint32_t> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto v = static_cast<std::uint32_t>(rng.bounded(p));
            a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = v;
            a[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = f.neg(v);
        }
    }
    return FMatrix(f, std::move(g), std::move(a));
}

}  // namespace dmk
