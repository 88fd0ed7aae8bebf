#ifndef FIBERCX_CATALOG_HPP
#define FIBERCX_CATALOG_HPP

// Registry of singular-fiber classes for the dimension pairs (3,2) and
// (2,1), with flags and, for (2,1) codimension-1 classes, the level-set
// transition data used by the Morse trace validator.
//
// Catalog data file grammar (one class per line, '#' starts a comment):
//
//   <name> codim=<k> orientable_excluded=<0|1> admissible=<0|1>
//          [dc=<set> da=<set> flips=<0|1>]
//
// where <set> is a comma-separated list in braces, e.g. dc={-1,1}.

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "class_name.hpp"

namespace fibercx {

enum class DimPair : std::uint8_t { D32, D21 };  // (3,2) resp. (2,1)

enum class Variant : std::uint8_t { Full, Admissible };

struct TransitionRule {
    std::set<int> delta_circles;
    std::set<int> delta_arcs;
    bool flips_component_parity = false;

    friend bool operator==(const TransitionRule&, const TransitionRule&) = default;
};

struct FiberClass {
    ClassName name;  // unrefined
    DimPair dim_pair = DimPair::D32;
    int codim = 0;
    bool orientable_excluded = false;
    bool admissible = true;
    // bI^1 is drawn in the codimension-1 row of the classification but does
    // not take part in any complex; it is kept in the catalog with this flag.
    bool excluded_from_complex = false;
    std::optional<TransitionRule> transition;

    friend bool operator==(const FiberClass&, const FiberClass&) = default;
};

namespace detail {

inline bool orientable_excluded_base(const ClassName& n) {
    if (n.kind == BaseKind::BI) return n.i == 9 || n.i == 10;
    if (n.kind == BaseKind::BIINum) return n.i >= 26 && n.i <= 39;
    return false;
}

// Classes containing boundary-singular points of the map itself; absent
// for admissible maps.
inline bool inadmissible_base(const ClassName& n) {
    return n.kind == BaseKind::BIILetter && n.i >= 3;  // d, e, f
}

inline TransitionRule transition_for(int k) {
    // Level-set moves of stable Morse functions on surfaces with boundary.
    // flips_component_parity must match the delta_0 support {2,3,4,6,8};
    // the universal module cross-checks this at build time.
    switch (k) {
        case 2: return {{-1, 1}, {0}, true};    // circle birth / death
        case 3: return {{-1, 1}, {0}, true};    // circle split / merge
        case 4: return {{-1, 1}, {0}, true};    // arc sheds / absorbs a circle
        case 5: return {{0}, {0}, false};       // two arcs reconnect
        case 6: return {{0}, {-1, 1}, true};    // arc birth / death
        case 7: return {{-1, 1}, {-1, 1}, false};  // circle <-> arc at boundary
        case 8: return {{0}, {-1, 1}, true};    // arc split / merge at boundary
        case 9: return {{0}, {0}, false};       // one-sided circle move
        case 10: return {{0}, {0}, false};      // one-sided arc move
        default: return {};
    }
}

}  // namespace detail

class Catalog {
public:
    // The built-in catalog for one dimension pair.
    static Catalog builtin(DimPair dp) {
        Catalog cat;
        cat.dim_pair_ = dp;
        auto add = [&](ClassName n) {
            FiberClass fc;
            fc.name = n;
            fc.dim_pair = dp;
            fc.codim = n.codim();
            fc.orientable_excluded = detail::orientable_excluded_base(n);
            fc.admissible = !detail::inadmissible_base(n);
            fc.excluded_from_complex = (n.kind == BaseKind::BI && n.i == 1);
            if (dp == DimPair::D21 && n.kind == BaseKind::BI && n.i >= 2)
                fc.transition = detail::transition_for(n.i);
            cat.classes_.push_back(fc);
        };

        add(ClassName::b0());
        for (int k = 1; k <= 10; ++k) add(ClassName::bI(k));
        if (dp == DimPair::D32) {
            for (int i = 2; i <= 10; ++i)
                for (int j = i; j <= 10; ++j) add(ClassName::bII_pair(i, j));
            for (int k = 11; k <= 39; ++k) add(ClassName::bII_num(k));
            for (char c = 'a'; c <= 'f'; ++c) add(ClassName::bII_letter(c));
        }
        return cat;
    }

    DimPair dim_pair() const { return dim_pair_; }
    const std::vector<FiberClass>& classes() const { return classes_; }

    const FiberClass* find(const ClassName& base) const {
        for (const auto& fc : classes_)
            if (fc.name == base.base()) return &fc;
        return nullptr;
    }

    // Canonically ordered class names of one codimension. Refined output
    // lists the o refinement before the e refinement of each base. Classes
    // excluded from the complexes (bI^1) are omitted; the admissible
    // variant additionally omits the inadmissible codim-2 classes.
    std::vector<ClassName> list_classes(int codim, Variant v, bool refined) const {
        std::vector<ClassName> out;
        for (const auto& fc : classes_) {
            if (fc.codim != codim || fc.excluded_from_complex) continue;
            if (v == Variant::Admissible && !fc.admissible) continue;
            if (refined) {
                out.push_back(fc.name.with_parity(Parity::Odd));
                out.push_back(fc.name.with_parity(Parity::Even));
            } else {
                out.push_back(fc.name);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "# singular fiber catalog, dimension pair "
           << (dim_pair_ == DimPair::D32 ? "(3,2)" : "(2,1)") << "\n";
        for (const auto& fc : classes_) {
            os << print_class_name(fc.name) << " codim=" << fc.codim
               << " orientable_excluded=" << (fc.orientable_excluded ? 1 : 0)
               << " admissible=" << (fc.admissible ? 1 : 0);
            if (fc.transition) {
                auto set_str = [](const std::set<int>& s) {
                    std::string t = "{";
                    bool first = true;
                    for (int v : s) {
                        if (!first) t += ",";
                        t += std::to_string(v);
                        first = false;
                    }
                    return t + "}";
                };
                os << " dc=" << set_str(fc.transition->delta_circles)
                   << " da=" << set_str(fc.transition->delta_arcs)
                   << " flips=" << (fc.transition->flips_component_parity ? 1 : 0);
            }
            os << "\n";
        }
        return os.str();
    }

    static Catalog from_text(const std::string& text, DimPair dp) {
        Catalog cat;
        cat.dim_pair_ = dp;
        std::istringstream is(text);
        std::string line;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string name_tok;
            ls >> name_tok;
            FiberClass fc;
            fc.name = parse_class_name(name_tok);
            fc.dim_pair = dp;
            fc.codim = fc.name.codim();
            fc.excluded_from_complex =
                (fc.name.kind == BaseKind::BI && fc.name.i == 1);
            TransitionRule tr;
            bool have_tr = false;
            std::string field;
            while (ls >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos)
                    throw ParseError("catalog line " + std::to_string(lineno) +
                                     ": bad field '" + field + "'");
                std::string key = field.substr(0, eq);
                std::string val = field.substr(eq + 1);
                if (key == "codim") fc.codim = std::stoi(val);
                else if (key == "orientable_excluded") fc.orientable_excluded = val == "1";
                else if (key == "admissible") fc.admissible = val == "1";
                else if (key == "flips") { tr.flips_component_parity = val == "1"; have_tr = true; }
                else if (key == "dc" || key == "da") {
                    if (val.size() < 2 || val.front() != '{' || val.back() != '}')
                        throw ParseError("catalog line " + std::to_string(lineno) +
                                         ": bad set '" + val + "'");
                    std::set<int> s;
                    std::istringstream vs(val.substr(1, val.size() - 2));
                    std::string item;
                    while (std::getline(vs, item, ','))
                        if (!item.empty()) s.insert(std::stoi(item));
                    (key == "dc" ? tr.delta_circles : tr.delta_arcs) = s;
                    have_tr = true;
                } else {
                    throw ParseError("catalog line " + std::to_string(lineno) +
                                     ": unknown field '" + key + "'");
                }
            }
            if (have_tr) fc.transition = tr;
            cat.classes_.push_back(fc);
        }
        return cat;
    }

private:
    DimPair dim_pair_ = DimPair::D32;
    std::vector<FiberClass> classes_;
};

}  // namespace fibercx

#endif
