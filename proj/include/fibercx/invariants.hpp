#ifndef FIBERCX_INVARIANTS_HPP
#define FIBERCX_INVARIANTS_HPP

// Cobordism invariants of Morse traces: a degree-1 cocycle of a (3,2)
// variant is pushed through the suspension map (identity on names) and
// evaluated as the parity of the number of matching singular fibers.

#include <cstdint>
#include <string>
#include <vector>

#include "morse.hpp"
#include "universal.hpp"

namespace fibercx {

enum class NamedClassTag : std::uint8_t { Alpha, Beta, Gamma };

// Canonical representatives in degree 1 of the (3,2) complexes.
inline Cochain named_class(NamedClassTag tag) {
    switch (tag) {
        case NamedClassTag::Alpha:
            return parse_cochain("bI^2 + bI^3 + bI^4 + bI^5 + bI^9 + bI^10", 1);
        case NamedClassTag::Beta:
            return parse_cochain("bI^6 + bI^7 + bI^8", 1);
        default:
            return parse_cochain("bI^2_o + bI^3_e + bI^4_e + bI^6_o + bI^8_e", 1);
    }
}

struct InvariantValue {
    int value = 0;  // element of Z_2
};

// Parity of the fiber count over the support of the suspended cocycle.
// Throws if c is not a cocycle of the chosen variant (the cobordism
// invariance guarantee only holds for cocycles) or if the trace is
// invalid.
inline InvariantValue evaluate(const Cochain& c, ComplexVariant variant,
                               const MorseTrace& t) {
    const CochainComplexZ2& cx = get_complex(variant);
    if (c.degree != 1)
        throw std::invalid_argument("invariant cochains must have degree 1");
    if (!cx.is_cocycle(c))
        throw std::invalid_argument("cochain " + print_cochain(c) +
                                    " is not a cocycle in the selected variant");
    CountVector counts = count_fibers(t);
    long total = 0;
    for (const auto& n : c.support) total += count_of(counts, n);
    return InvariantValue{static_cast<int>(total % 2)};
}

struct TrivialityReport {
    bool always_zero = true;
    std::vector<std::uint64_t> witness_seeds;  // seeds with nonzero value
    std::uint64_t first_seed = 0;
    std::uint64_t last_seed = 0;
};

// Evaluates c on random traces over an inclusive seed range. Empirical
// only: a clean report is evidence of triviality, not a proof.
inline TrivialityReport triviality_probe(const Cochain& c, ComplexVariant variant,
                                         std::uint64_t first_seed,
                                         std::uint64_t last_seed,
                                         int length_budget = 12) {
    TrivialityReport rep;
    rep.first_seed = first_seed;
    rep.last_seed = last_seed;
    for (std::uint64_t s = first_seed; s <= last_seed; ++s) {
        MorseTrace t = random_trace(s, length_budget);
        if (evaluate(c, variant, t).value != 0) {
            rep.always_zero = false;
            rep.witness_seeds.push_back(s);
        }
    }
    return rep;
}

}  // namespace fibercx

#endif
