#pragma once

#include <string>
#include <vector>

#include "sympoly/domains.hpp"
#include "sympoly/verify.hpp"

namespace sympoly {

/// The ten dimension-shift maps between neighbouring extended symmetrized
/// polydiscs. Names encode the parity of the theorem's base index and the
/// direction; q is preserved by every map.
enum class ShiftMap {
    HatUpEven,           // n even -> n+1, iff
    StarUpOdd,           // n odd  -> n+1, iff
    CheckDownEven,       // n even -> n-1
    TildeDownOdd,        // n odd  -> n-1
    PadEven,             // n even -> n+1 (coordinate duplication)
    ContractEven,        // n+1 odd -> n even (adjacent-pair average)
    NormalizeSharpEven,  // n+1 odd -> n even (binomial normalization first)
    PadOdd,              // n odd -> n+1 (adjacent-pair average inserted)
    ContractOdd,         // n+1 even -> n odd (middle dropped)
    NormalizeSharpOdd    // n+1 even -> n odd (binomial normalization first)
};

struct ShiftMapId {
    ShiftMap id = ShiftMap::HatUpEven;
    bool closed = false;  // verify against the closed domains
};

struct ShiftMapInfo {
    ShiftMap id;
    const char* name;      // kebab-case CLI spelling
    int input_parity;      // 0 = even ambient index required, 1 = odd
    int delta;             // output index = input index + delta
    bool iff;              // membership equivalence holds in both directions
    int min_n;             // smallest admissible input index
};

const std::vector<ShiftMapInfo>& shift_map_registry();
const ShiftMapInfo& shift_map_info(ShiftMap id);
ShiftMap shift_map_by_name(const std::string& name);

/// One output coordinate as a linear combination of input coordinates
/// (1-based indices into y). Every map is linear in y with q fixed; the
/// coefficient tables are generated from the binomial ratio
/// C(out_n, j) / C(in_n, j) rather than hand-written per theorem.
struct ShiftRow {
    std::vector<std::pair<double, int>> terms;
};

struct ShiftPlan {
    int in_n = 0;
    int out_n = 0;
    std::vector<ShiftRow> rows;
};

/// Coefficient table of a map at input index n; throws ParityMismatch when
/// n has the wrong parity or is too small.
ShiftPlan shift_plan(ShiftMap id, int n);

/// Applies the map. q is carried over unchanged.
DomainPoint shift(ShiftMap id, const DomainPoint& y);

/// Samples the membership claims of a map: forward implication on inside
/// (or closed-boundary) samples, and for iff maps the reverse direction on
/// ambient draws with verdicts compared outside a 1e-3 margin band.
VerificationReport shift_verify(ShiftMapId map, int samples, std::uint64_t seed);

} // namespace sympoly
