#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spa {

/// The pairing bijection on positive integers,
/// x <> y = (x^2 + y^2 + 2xy - x - 3y + 2) / 2. It enumerates the
/// anti-diagonals x + y = const, so the numerator is always even.
/// Throws std::invalid_argument unless x, y >= 1 and std::overflow_error
/// instead of wrapping.
std::int64_t pair_value(std::int64_t x, std::int64_t y);

/// The inverse of pair_value: the unique (x, y) with x <> y = n.
std::pair<std::int64_t, std::int64_t> unpair_value(std::int64_t n);

/// Which argument of <> stays variable when turning the binary operation
/// into a unary family: U1 freezes the right argument (ops x -> x <> a),
/// U2 freezes the left (ops x -> a <> x).
enum class Unarisation { U1, U2 };

/// A finite truncation of the unarised pairing groupoid: only the
/// operations with frozen argument a <= op_bound are kept. Orbits below a
/// cutoff N are unaffected by the truncation once op_bound >= N because
/// every operation is value-increasing.
struct UnarisedAlgebra {
    Unarisation variant;
    std::int64_t op_bound;
};

std::int64_t unary_op(const UnarisedAlgebra& algebra, std::int64_t frozen, std::int64_t x);

struct OrbitReport {
    std::int64_t seed = 0;
    std::int64_t max_value = 0;
    std::vector<std::int64_t> members;  // ascending
};

/// BFS closure of {seed} under all truncated operations, keeping only
/// values <= max_value; the worklist is processed in ascending order.
/// Requires seed <= max_value <= algebra.op_bound.
OrbitReport orbit(const UnarisedAlgebra& algebra, std::int64_t seed, std::int64_t max_value);

struct PartitionReport {
    Unarisation variant = Unarisation::U2;
    std::int64_t max_value = 0;
    std::vector<OrbitReport> orbits;
    bool disjoint = false;
    bool covers = false;
    /// The fixed-point relations making each orbit a cyclic factor with a
    /// length-one cycle word, e.g. "op_1(1) = 1".
    std::vector<std::string> cycle_relations;
    bool cycles_verified = false;

    bool verified() const { return disjoint && covers && cycles_verified; }
    /// Orbit members ascending, comma-separated, one orbit per line, then
    /// the verification summary.
    std::string to_text() const;
};

/// Checks the decomposition of the unarised pairing groupoid on [1, N]:
/// for U2 the orbits of 1 and 2 partition [1, N] and both seeds are fixed
/// points of the first operation; for U1 the orbit of 1 covers everything.
PartitionReport decompose_pairing(Unarisation variant, std::int64_t max_value);

}  // namespace spa
