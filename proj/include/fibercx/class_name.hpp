#ifndef FIBERCX_CLASS_NAME_HPP
#define FIBERCX_CLASS_NAME_HPP

// Names of singular-fiber equivalence classes and their canonical text
// grammar:
//
//   name   := base parity?
//   base   := "b0" | "bI^" k            (1 <= k <= 10)
//           | "bII^{" i "," j "}"       (2 <= i <= j <= 10)
//           | "bII^" k                  (11 <= k <= 39)
//           | "bII^" x                  (x in a..f)
//   parity := "_o" | "_e"
//
// parse(print(n)) == n for every catalog name.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibercx {

enum class Parity : std::uint8_t { Unrefined, Odd, Even };

enum class BaseKind : std::uint8_t {
    B0,         // regular fiber class
    BI,         // codim 1, index 1..10
    BIIPair,    // codim 2 disconnected, indices 2 <= i <= j <= 10
    BIINum,     // codim 2 connected, index 11..39
    BIILetter,  // codim 2 connected boundary-singular, index 0..5 (a..f)
};

struct ClassName {
    BaseKind kind = BaseKind::B0;
    std::uint8_t i = 0;  // BI/BIINum/BIILetter index; BIIPair first index
    std::uint8_t j = 0;  // BIIPair second index
    Parity parity = Parity::Unrefined;

    friend auto operator<=>(const ClassName&, const ClassName&) = default;

    ClassName base() const {
        ClassName b = *this;
        b.parity = Parity::Unrefined;
        return b;
    }
    ClassName with_parity(Parity p) const {
        ClassName b = *this;
        b.parity = p;
        return b;
    }
    // The opposite refinement; unrefined stays unrefined.
    ClassName flipped() const {
        ClassName b = *this;
        if (parity == Parity::Odd) b.parity = Parity::Even;
        else if (parity == Parity::Even) b.parity = Parity::Odd;
        return b;
    }

    int codim() const {
        switch (kind) {
            case BaseKind::B0: return 0;
            case BaseKind::BI: return 1;
            default: return 2;
        }
    }

    static ClassName b0(Parity p = Parity::Unrefined) {
        return ClassName{BaseKind::B0, 0, 0, p};
    }
    static ClassName bI(int k, Parity p = Parity::Unrefined) {
        return ClassName{BaseKind::BI, static_cast<std::uint8_t>(k), 0, p};
    }
    static ClassName bII_pair(int i, int j, Parity p = Parity::Unrefined) {
        return ClassName{BaseKind::BIIPair, static_cast<std::uint8_t>(i),
                         static_cast<std::uint8_t>(j), p};
    }
    static ClassName bII_num(int k, Parity p = Parity::Unrefined) {
        return ClassName{BaseKind::BIINum, static_cast<std::uint8_t>(k), 0, p};
    }
    static ClassName bII_letter(char c, Parity p = Parity::Unrefined) {
        return ClassName{BaseKind::BIILetter, static_cast<std::uint8_t>(c - 'a'),
                         0, p};
    }
};

inline std::string print_class_name(const ClassName& n) {
    std::string s;
    switch (n.kind) {
        case BaseKind::B0: s = "b0"; break;
        case BaseKind::BI: s = "bI^" + std::to_string(n.i); break;
        case BaseKind::BIIPair:
            s = "bII^{" + std::to_string(n.i) + "," + std::to_string(n.j) + "}";
            break;
        case BaseKind::BIINum: s = "bII^" + std::to_string(n.i); break;
        case BaseKind::BIILetter: s = std::string("bII^") + char('a' + n.i); break;
    }
    if (n.parity == Parity::Odd) s += "_o";
    else if (n.parity == Parity::Even) s += "_e";
    return s;
}

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses a class name. Malformed input throws ParseError naming the
// offending token. A bII^{i,j} with i > j is normalized to sorted order;
// if `normalized` is non-null it is set accordingly.
inline ClassName parse_class_name(std::string_view s, bool* normalized = nullptr) {
    if (normalized) *normalized = false;
    std::string_view rest = s;

    Parity parity = Parity::Unrefined;
    if (rest.size() >= 2) {
        std::string_view tail = rest.substr(rest.size() - 2);
        if (tail == "_o") { parity = Parity::Odd; rest.remove_suffix(2); }
        else if (tail == "_e") { parity = Parity::Even; rest.remove_suffix(2); }
    }

    auto fail = [&](std::string_view tok) -> ClassName {
        throw ParseError("bad class name token '" + std::string(tok) +
                         "' in '" + std::string(s) + "'");
    };
    auto to_int = [&](std::string_view t) -> int {
        if (t.empty() || t.size() > 2) fail(t);
        int v = 0;
        for (char c : t) {
            if (c < '0' || c > '9') fail(t);
            v = v * 10 + (c - '0');
        }
        return v;
    };

    if (rest == "b0") return ClassName::b0(parity);

    if (rest.rfind("bI^", 0) == 0) {
        int k = to_int(rest.substr(3));
        if (k < 1 || k > 10) fail(rest.substr(3));
        return ClassName::bI(k, parity);
    }

    if (rest.rfind("bII^", 0) == 0) {
        std::string_view sup = rest.substr(4);
        if (sup.size() == 1 && sup[0] >= 'a' && sup[0] <= 'f')
            return ClassName::bII_letter(sup[0], parity);
        if (!sup.empty() && sup.front() == '{') {
            if (sup.back() != '}') fail(sup);
            sup = sup.substr(1, sup.size() - 2);
            auto comma = sup.find(',');
            if (comma == std::string_view::npos) fail(sup);
            int i = to_int(sup.substr(0, comma));
            int j = to_int(sup.substr(comma + 1));
            if (i < 2 || i > 10 || j < 2 || j > 10) fail(sup);
            if (i > j) {
                std::swap(i, j);
                if (normalized) *normalized = true;
            }
            return ClassName::bII_pair(i, j, parity);
        }
        int k = to_int(sup);
        if (k < 11 || k > 39) fail(sup);
        return ClassName::bII_num(k, parity);
    }

    return fail(rest);
}

}  // namespace fibercx

#endif
