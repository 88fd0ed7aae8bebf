#ifndef FIBERCX_COCHAIN_HPP
#define FIBERCX_COCHAIN_HPP

// GF(2) formal sums of refined class names in a fixed degree.
//
// Cochain text syntax: `name (+ name)*` where each name follows the class
// name grammar. An unrefined name stands for the sum of its o and e
// refinements and is expanded on parsing.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "class_name.hpp"

namespace fibercx {

struct Cochain {
    int degree = 0;
    std::set<ClassName> support;  // refined names only

    bool empty() const { return support.empty(); }

    void toggle(const ClassName& n) {
        auto [it, inserted] = support.insert(n);
        if (!inserted) support.erase(it);
    }

    Cochain& operator+=(const Cochain& other) {
        for (const auto& n : other.support) toggle(n);
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) {
        a += b;
        return a;
    }
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

inline std::string print_cochain(const Cochain& c) {
    if (c.support.empty()) return "0";
    // Collapse o+e pairs back to the unrefined shorthand.
    std::string out;
    std::set<ClassName> done;
    for (const auto& n : c.support) {
        if (done.count(n)) continue;
        std::string term;
        if (n.parity != Parity::Unrefined && c.support.count(n.flipped())) {
            done.insert(n.flipped());
            term = print_class_name(n.base());
        } else {
            term = print_class_name(n);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

// Parses the cochain syntax; every term must have the given codimension,
// which becomes the cochain degree.
inline Cochain parse_cochain(std::string_view text, int degree) {
    Cochain c;
    c.degree = degree;
    std::string term;
    std::istringstream is{std::string(text)};
    while (is >> term) {
        if (term == "+") continue;
        if (term == "0") continue;
        ClassName n = parse_class_name(term);
        if (n.codim() != degree)
            throw ParseError("cochain term '" + term + "' has codimension " +
                             std::to_string(n.codim()) + ", expected " +
                             std::to_string(degree));
        if (n.parity == Parity::Unrefined) {
            c.toggle(n.with_parity(Parity::Odd));
            c.toggle(n.with_parity(Parity::Even));
        } else {
            c.toggle(n);
        }
    }
    return c;
}

// Projection onto unrefined classes: the coefficient of a base survives
// iff its o and e coefficients differ.
inline Cochain coarsen(const Cochain& c) {
    Cochain out;
    out.degree = c.degree;
    for (const auto& n : c.support) out.toggle(n.base());
    return out;
}

}  // namespace fibercx

#endif
