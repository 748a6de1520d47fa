#include "spa/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spa {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("pairing value overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("pairing value overflow");
    return out;
}

}  // namespace

std::int64_t pair_value(std::int64_t x, std::int64_t y) {
    if (x < 1 || y < 1) throw std::invalid_argument("pair_value needs positive arguments");
    // (x + y)(x + y - 1) / 2 - y + 1, the anti-diagonal form of the
    // quadratic; the product of two consecutive integers is even.
    const std::int64_t s = checked_add(x, y);
    const std::int64_t tri = checked_mul(s, s - 1) / 2;
    return checked_add(tri - y, 1);
}

std::pair<std::int64_t, std::int64_t> unpair_value(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("unpair_value needs a positive argument");
    // Find the anti-diagonal s = x + y with T(s-1) - s + 2 <= n <= T(s-1).
    auto tri = [](std::int64_t m) { return m * (m - 1) / 2; };
    std::int64_t s = static_cast<std::int64_t>(
        std::max(2.0, (1.0 + std::sqrt(8.0 * static_cast<double>(n))) / 2.0));
    while (tri(s) < n) ++s;
    while (s > 2 && tri(s - 1) >= n) --s;
    const std::int64_t y = tri(s) - n + 1;
    return {s - y, y};
}

std::int64_t unary_op(const UnarisedAlgebra& algebra, std::int64_t frozen, std::int64_t x) {
    if (frozen < 1 || frozen > algebra.op_bound) {
        throw std::invalid_argument("operation index outside the truncation");
    }
    return algebra.variant == Unarisation::U2 ? pair_value(frozen, x) : pair_value(x, frozen);
}

OrbitReport orbit(const UnarisedAlgebra& algebra, std::int64_t seed, std::int64_t max_value) {
    if (seed < 1 || seed > max_value) {
        throw std::invalid_argument("orbit seed must lie in [1, max_value]");
    }
    if (algebra.op_bound < max_value) {
        throw std::invalid_argument("truncation bound must be at least max_value");
    }
    OrbitReport report;
    report.seed = seed;
    report.max_value = max_value;

    std::vector<bool> seen(static_cast<std::size_t>(max_value) + 1, false);
    std::set<std::int64_t> pending{seed};
    seen[static_cast<std::size_t>(seed)] = true;
    while (!pending.empty()) {
        const std::int64_t x = *pending.begin();
        pending.erase(pending.begin());
        report.members.push_back(x);
        // Every operation is value-increasing in the frozen argument, so
        // the scan can stop at the first value beyond the cutoff.
        for (std::int64_t a = 1; a <= algebra.op_bound; ++a) {
            const std::int64_t y = unary_op(algebra, a, x);
            if (y > max_value) break;
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                pending.insert(y);
            }
        }
    }
    std::sort(report.members.begin(), report.members.end());
    return report;
}

PartitionReport decompose_pairing(Unarisation variant, std::int64_t max_value) {
    if (max_value < 2) throw std::invalid_argument("decompose_pairing needs max_value >= 2");
    PartitionReport report;
    report.variant = variant;
    report.max_value = max_value;
    const UnarisedAlgebra algebra{variant, max_value};

    const std::vector<std::int64_t> seeds =
        variant == Unarisation::U2 ? std::vector<std::int64_t>{1, 2} : std::vector<std::int64_t>{1};
    for (std::int64_t seed : seeds) report.orbits.push_back(orbit(algebra, seed, max_value));

    std::vector<int> hits(static_cast<std::size_t>(max_value) + 1, 0);
    for (const OrbitReport& orb : report.orbits) {
        for (std::int64_t m : orb.members) ++hits[static_cast<std::size_t>(m)];
    }
    report.disjoint = std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h <= 1; });
    report.covers = std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h >= 1; });

    report.cycles_verified = true;
    for (std::int64_t seed : seeds) {
        const std::int64_t image = unary_op(algebra, 1, seed);
        std::ostringstream rel;
        rel << "op_1(" << seed << ") = " << image;
        report.cycle_relations.push_back(rel.str());
        if (image != seed) report.cycles_verified = false;
    }
    return report;
}

std::string PartitionReport::to_text() const {
    std::ostringstream out;
    for (const OrbitReport& orb : orbits) {
        out << "orbit of " << orb.seed << ": ";
        for (std::size_t i = 0; i < orb.members.size(); ++i) {
            if (i) out << ", ";
            out << orb.members[i];
        }
        out << '\n';
    }
    out << "disjoint: " << (disjoint ? "yes" : "no") << '\n';
    out << "covers [1, " << max_value << "]: " << (covers ? "yes" : "no") << '\n';
    for (const std::string& rel : cycle_relations) out << "cycle: " << rel << '\n';
    out << "verified: " << (verified() ? "yes" : "no") << '\n';
    return out.str();
}

}  // namespace spa
