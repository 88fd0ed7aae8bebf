#ifndef FIBERCX_UNIVERSAL_HPP
#define FIBERCX_UNIVERSAL_HPP

// The concrete universal complexes of singular fibers:
//
//   full_32        proper stable maps of 3-manifolds with boundary into
//                  surfaces; bases 2 / 18 / 160
//   admissible_32  the admissible restriction (no boundary-singular points
//                  of the map); bases 2 / 18 / 154
//   morse_21       stable Morse functions on surfaces with boundary;
//                  bases 2 / 18 / 0
//
// plus the suspension cochain map (3,2) -> (2,1) and the mechanical
// derivation of the co-existence parity constraints.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "complex.hpp"

namespace fibercx {

enum class ComplexVariant : std::uint8_t { Full32, Admissible32, Morse21 };

// A set of class names whose occurrence counts must sum to an even
// number. Unrefined members count the whole base class.
struct ParityConstraint {
    std::set<ClassName> classes;

    friend bool operator==(const ParityConstraint&, const ParityConstraint&) = default;
    friend auto operator<=>(const ParityConstraint&, const ParityConstraint&) = default;
};

// Collapses o+e pairs to the unrefined base; the count parity is the same.
inline ParityConstraint normalize_constraint(const std::set<ClassName>& names) {
    ParityConstraint out;
    for (const auto& n : names) {
        if (n.parity != Parity::Unrefined && names.count(n.flipped()))
            out.classes.insert(n.base());
        else
            out.classes.insert(n);
    }
    return out;
}

inline std::string print_constraint(const ParityConstraint& c) {
    std::string s;
    for (const auto& n : c.classes) {
        if (!s.empty()) s += " + ";
        s += print_class_name(n);
    }
    return s.empty() ? "0" : s;
}

// Parses a `name (+ name)*` sum into a constraint, keeping unrefined
// names unrefined.
inline ParityConstraint parse_constraint(std::string_view text) {
    ParityConstraint c;
    std::istringstream is{std::string(text)};
    std::string term;
    while (is >> term) {
        if (term == "+" || term == "0") continue;
        c.classes.insert(parse_class_name(term));
    }
    return c;
}

namespace delta_table {

// delta_0 of both b0 refinements: the bases whose events flip the parity
// of the regular component count.
inline const std::vector<int>& delta0_support() {
    static const std::vector<int> s = {2, 3, 4, 6, 8};
    return s;
}

struct Term {
    ClassName name;  // unrefined terms stand for o+e
};

// The odd-refinement coboundary rows of the 18 codimension-1 generators;
// the even rows are obtained by swapping the o/e subscripts of the
// refined terms. A shipped text transcription of all 18 rows is diffed
// against this table by the test suite.
inline const std::map<int, std::vector<Term>>& delta1_odd_rows() {
    static const std::map<int, std::vector<Term>> rows = [] {
        using N = ClassName;
        auto pr = [](int i, int j) { return Term{N::bII_pair(i, j)}; };
        auto nm = [](int k, Parity p = Parity::Unrefined) { return Term{N::bII_num(k, p)}; };
        auto lt = [](char c, Parity p = Parity::Unrefined) { return Term{N::bII_letter(c, p)}; };
        const Parity o = Parity::Odd, e = Parity::Even;

        std::map<int, std::vector<Term>> r;
        r[2] = {pr(2, 3), pr(2, 4), pr(2, 6), pr(2, 8),
                lt('a', e), lt('b', e), lt('d', o)};
        r[3] = {pr(2, 3), pr(3, 4), pr(3, 6), pr(3, 8),
                nm(13, e), nm(22, o), lt('a', o)};
        r[4] = {pr(2, 4), pr(3, 4), pr(4, 6), pr(4, 8),
                nm(13, e), nm(22, o), nm(23, o), nm(24),
                lt('b', o), lt('f', o)};
        r[5] = {pr(2, 5), pr(3, 5), pr(4, 5), pr(5, 6), pr(5, 8),
                nm(15), nm(23, o), nm(25), nm(30, o), nm(38, o), lt('e', o)};
        r[6] = {pr(2, 6), pr(3, 6), pr(4, 6), pr(6, 8),
                lt('c', e), lt('d', o), lt('e', e), lt('f', e)};
        r[7] = {pr(2, 7), pr(3, 7), pr(4, 7), pr(6, 7), pr(7, 8),
                nm(22), nm(23, e), lt('d', o), lt('f', o)};
        r[8] = {pr(2, 8), pr(3, 8), pr(4, 8), pr(6, 8),
                nm(23, o), nm(24), lt('c', o), lt('e', o)};
        r[9] = {pr(2, 9), pr(3, 9), pr(4, 9), pr(6, 9), pr(8, 9),
                nm(27), nm(35, e), nm(37, o)};
        r[10] = {pr(2, 10), pr(3, 10), pr(4, 10), pr(6, 10), pr(8, 10),
                 nm(30, e), nm(32), nm(33), nm(35, o), nm(37, o), nm(38, o), nm(39)};
        return r;
    }();
    return rows;
}

// The refined support of delta_1 applied to bI^k with the given parity.
inline std::set<ClassName> delta1_row(int k, Parity p) {
    std::set<ClassName> out;
    for (const auto& t : delta1_odd_rows().at(k)) {
        ClassName n = t.name;
        if (n.parity == Parity::Unrefined) {
            out.insert(n.with_parity(Parity::Odd));
            out.insert(n.with_parity(Parity::Even));
        } else {
            out.insert(p == Parity::Odd ? n : n.flipped());
        }
    }
    return out;
}

}  // namespace delta_table

inline const Catalog& catalog_for(ComplexVariant v) {
    static const Catalog c32 = Catalog::builtin(DimPair::D32);
    static const Catalog c21 = Catalog::builtin(DimPair::D21);
    return v == ComplexVariant::Morse21 ? c21 : c32;
}

inline CochainComplexZ2 build_complex(ComplexVariant v) {
    const Catalog& cat = catalog_for(v);
    Variant cv = v == ComplexVariant::Admissible32 ? Variant::Admissible : Variant::Full;

    std::vector<std::vector<ClassName>> bases;
    bases.push_back(cat.list_classes(0, cv, true));
    bases.push_back(cat.list_classes(1, cv, true));
    bases.push_back(v == ComplexVariant::Morse21 ? std::vector<ClassName>{}
                                                 : cat.list_classes(2, cv, true));

    auto index_of = [](const std::vector<ClassName>& basis, const ClassName& n) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == n) return i;
        throw std::logic_error("class not in basis: " + print_class_name(n));
    };

    BitMatrix d0(bases[1].size(), bases[0].size());
    for (std::size_t c = 0; c < bases[0].size(); ++c)
        for (int k : delta_table::delta0_support())
            for (Parity p : {Parity::Odd, Parity::Even})
                d0.set(index_of(bases[1], ClassName::bI(k, p)), c, true);

    BitMatrix d1(bases[2].size(), bases[1].size());
    if (v != ComplexVariant::Morse21) {
        for (std::size_t c = 0; c < bases[1].size(); ++c) {
            const ClassName& g = bases[1][c];
            for (const auto& t : delta_table::delta1_row(g.i, g.parity)) {
                // The admissible variant deletes the inadmissible columns
                // of the target; skip those terms.
                if (cv == Variant::Admissible && detail::inadmissible_base(t.base()))
                    continue;
                d1.set(index_of(bases[2], t), c, true);
            }
        }
    }

    CochainComplexZ2 cx(std::move(bases), {std::move(d0), std::move(d1)});
    std::string why;
    if (!cx.check(&why))
        throw std::logic_error("universal complex fails delta.delta = 0: " + why);
    return cx;
}

inline const CochainComplexZ2& get_complex(ComplexVariant v) {
    static const CochainComplexZ2 full = build_complex(ComplexVariant::Full32);
    static const CochainComplexZ2 adm = build_complex(ComplexVariant::Admissible32);
    static const CochainComplexZ2 morse = build_complex(ComplexVariant::Morse21);
    switch (v) {
        case ComplexVariant::Full32: return full;
        case ComplexVariant::Admissible32: return adm;
        default: return morse;
    }
}

// The suspension cochain map from a (3,2) variant to the Morse complex:
// identity on names in degrees 0 and 1, zero in degree 2.
inline CochainMap suspension_map(ComplexVariant src_variant) {
    const CochainComplexZ2& src = get_complex(src_variant);
    const CochainComplexZ2& dst = get_complex(ComplexVariant::Morse21);

    std::vector<BitMatrix> maps;
    for (int k = 0; k <= 2; ++k) {
        BitMatrix m(dst.dim(k), src.dim(k));
        if (k < 2) {
            for (std::size_t c = 0; c < src.dim(k); ++c)
                m.set(dst.basis_index(k, src.basis(k)[c]), c, true);
        }
        maps.push_back(std::move(m));
    }
    return CochainMap(&src, &dst, std::move(maps));
}

// One parity constraint per degree-k generator: the support of its
// coboundary. Duplicate constraints are emitted once.
inline std::vector<ParityConstraint> derive_constraints(const CochainComplexZ2& C,
                                                        int k) {
    std::vector<ParityConstraint> out;
    BitMatrix d = C.delta(k);
    for (std::size_t c = 0; c < C.dim(k); ++c) {
        std::set<ClassName> support;
        for (std::size_t r = 0; r < d.rows(); ++r)
            if (d.get(r, c)) support.insert(C.basis(k + 1)[r]);
        if (support.empty()) continue;
        ParityConstraint pc = normalize_constraint(support);
        bool dup = false;
        for (const auto& prev : out)
            if (prev == pc) { dup = true; break; }
        if (!dup) out.push_back(pc);
    }
    return out;
}

namespace detail_constraints {

// Refined indicator vector of a constraint over the given refined basis.
inline BitVector indicator(const ParityConstraint& c,
                           const std::vector<ClassName>& basis) {
    BitVector v(basis.size());
    auto idx = [&](const ClassName& n) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == n) return i;
        throw std::invalid_argument("constraint class not in universe: " +
                                    print_class_name(n));
    };
    for (const auto& n : c.classes) {
        if (n.parity == Parity::Unrefined) {
            v.flip(idx(n.with_parity(Parity::Odd)));
            v.flip(idx(n.with_parity(Parity::Even)));
        } else {
            v.flip(idx(n));
        }
    }
    return v;
}

inline ParityConstraint from_indicator(const BitVector& v,
                                       const std::vector<ClassName>& basis) {
    std::set<ClassName> names;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v.get(i)) names.insert(basis[i]);
    return normalize_constraint(names);
}

}  // namespace detail_constraints

// Pairs the o-row and e-row of each generator base (consecutive in the
// derive_constraints order) and sums them over GF(2), which cancels the
// refinement and leaves a constraint on unrefined counts only. Empty sums
// are dropped.
inline std::vector<ParityConstraint> coarsen_constraints(
    const std::vector<ParityConstraint>& cs, const std::vector<ClassName>& universe) {
    std::vector<ParityConstraint> out;
    for (std::size_t i = 0; i + 1 < cs.size(); i += 2) {
        BitVector sum = detail_constraints::indicator(cs[i], universe);
        sum ^= detail_constraints::indicator(cs[i + 1], universe);
        ParityConstraint pc = detail_constraints::from_indicator(sum, universe);
        if (!pc.classes.empty()) out.push_back(pc);
    }
    return out;
}

// A canonical GF(2) basis of the span of the given constraints.
inline std::vector<ParityConstraint> constraint_basis(
    const std::vector<ParityConstraint>& cs, const std::vector<ClassName>& universe) {
    if (cs.empty()) return {};
    BitMatrix m(cs.size(), universe.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        m.row(i) = detail_constraints::indicator(cs[i], universe);
    Rref e = rref(m);
    std::vector<ParityConstraint> out;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        out.push_back(detail_constraints::from_indicator(e.mat.row(i), universe));
    return out;
}

inline bool same_constraint_span(const std::vector<ParityConstraint>& a,
                                 const std::vector<ParityConstraint>& b,
                                 const std::vector<ClassName>& universe) {
    std::vector<BitVector> va, vb;
    for (const auto& c : a) va.push_back(detail_constraints::indicator(c, universe));
    for (const auto& c : b) vb.push_back(detail_constraints::indicator(c, universe));
    for (const auto& v : vb)
        if (!in_span(va, v)) return false;
    for (const auto& v : va)
        if (!in_span(vb, v)) return false;
    return true;
}

}  // namespace fibercx

#endif
