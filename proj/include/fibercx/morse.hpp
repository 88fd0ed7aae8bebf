#ifndef FIBERCX_MORSE_HPP
#define FIBERCX_MORSE_HPP

// Combinatorial traces of stable Morse functions on compact surfaces with
// boundary. A trace is the ordered list of singular-fiber events together
// with the regular level-set composition (circles, arcs) between them;
// everything downstream depends only on this data.
//
// Trace file grammar (line oriented, '#' comments):
//
//   target: line | circle
//   initial: circles=<n> arcs=<n>
//   event v=<real> class=<name> reg_circles=<n> reg_arcs=<n> after=<c>,<a>
//
// Count vector file grammar: `<class_name> = <count>` per line.

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "universal.hpp"

namespace fibercx {

struct LevelState {
    int circles = 0;
    int arcs = 0;
    friend bool operator==(const LevelState&, const LevelState&) = default;
};

struct TraceEvent {
    double value = 0.0;
    ClassName fiber_class;       // base in bI^2..bI^10; parity optional
    LevelState regular;          // regular components of the singular fiber
    LevelState state_after;
};

enum class Target : std::uint8_t { Line, Circle };

struct MorseTrace {
    Target target = Target::Line;
    LevelState initial;          // must be (0,0) for the line target
    std::vector<TraceEvent> events;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
    std::string to_string() const {
        std::string s;
        for (const auto& v : violations) s += v + "\n";
        return s;
    }
};

// counts of refined (or unrefined) class occurrences
using CountVector = std::map<ClassName, long>;

namespace morse_detail {

// Strand composition of the singular component before and after an
// event, per base class. These refine the catalog (dc, da) envelopes.
struct Move {
    LevelState in;
    LevelState out;
};

inline const std::vector<Move>& moves_for(int k) {
    static const std::map<int, std::vector<Move>> table = {
        {2, {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}}},   // circle birth / death
        {3, {{{1, 0}, {2, 0}}, {{2, 0}, {1, 0}}}},   // circle split / merge
        {4, {{{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}}},   // arc sheds / absorbs circle
        {5, {{{0, 2}, {0, 2}}}},                     // two arcs reconnect
        {6, {{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}}},   // arc birth / death
        {7, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}},   // circle <-> arc
        {8, {{{0, 1}, {0, 2}}, {{0, 2}, {0, 1}}}},   // arc split / merge
        {9, {{{1, 0}, {1, 0}}}},                     // one-sided circle move
        {10, {{{0, 1}, {0, 1}}}},                    // one-sided arc move
    };
    static const std::vector<Move> none;
    auto it = table.find(k);
    return it == table.end() ? none : it->second;
}

inline Parity event_parity(const TraceEvent& e) {
    return ((e.regular.circles + e.regular.arcs) % 2) ? Parity::Odd : Parity::Even;
}

}  // namespace morse_detail

inline ValidationReport validate_trace(const MorseTrace& t,
                                       const Catalog& cat = catalog_for(ComplexVariant::Morse21)) {
    ValidationReport rep;
    auto violate = [&](std::size_t i, const std::string& msg) {
        rep.violations.push_back("event " + std::to_string(i) + ": " + msg);
    };

    if (t.target == Target::Line && !(t.initial == LevelState{0, 0}))
        rep.violations.push_back("line target requires initial state (0,0)");

    LevelState state = t.initial;
    double prev_value = 0.0;
    for (std::size_t i = 0; i < t.events.size(); ++i) {
        const TraceEvent& e = t.events[i];
        if (i > 0 && !(e.value > prev_value))
            violate(i, "singular values must be strictly increasing");
        prev_value = e.value;

        ClassName base = e.fiber_class.base();
        const FiberClass* fc = cat.find(base);
        if (!fc || fc->codim != 1 || fc->excluded_from_complex) {
            violate(i, "class " + print_class_name(base) +
                           " is not a codimension-1 Morse fiber class");
            continue;
        }

        // Strand bookkeeping: before = regular + in, after = regular + out
        // for one of the class's moves.
        bool matched = false;
        for (const auto& m : morse_detail::moves_for(base.i)) {
            LevelState before{e.regular.circles + m.in.circles,
                              e.regular.arcs + m.in.arcs};
            LevelState after{e.regular.circles + m.out.circles,
                             e.regular.arcs + m.out.arcs};
            if (before == state && after == e.state_after) {
                matched = true;
                break;
            }
        }
        if (!matched)
            violate(i, "no " + print_class_name(base) +
                           " level-set move takes state (" +
                           std::to_string(state.circles) + "," +
                           std::to_string(state.arcs) + ") to (" +
                           std::to_string(e.state_after.circles) + "," +
                           std::to_string(e.state_after.arcs) +
                           ") with the recorded regular components");

        // Redundant data is checked, not trusted.
        if (fc->transition) {
            int dc = e.state_after.circles - state.circles;
            int da = e.state_after.arcs - state.arcs;
            if (!fc->transition->delta_circles.count(dc) ||
                !fc->transition->delta_arcs.count(da))
                violate(i, "state delta (" + std::to_string(dc) + "," +
                               std::to_string(da) + ") outside the catalog rule for " +
                               print_class_name(base));
            bool flips = ((dc + da) % 2 + 2) % 2 == 1;
            if (flips != fc->transition->flips_component_parity)
                violate(i, "component-count parity " +
                               std::string(flips ? "flips" : "does not flip") +
                               " at a " + print_class_name(base) + " event");
        }

        if (e.fiber_class.parity != Parity::Unrefined &&
            e.fiber_class.parity != morse_detail::event_parity(e))
            violate(i, "recorded parity subscript disagrees with the regular "
                       "component count");

        state = e.state_after;
    }

    if (t.target == Target::Line) {
        if (!(state == LevelState{0, 0}))
            rep.violations.push_back("line target must end with empty level set");
    } else if (!(state == t.initial)) {
        rep.violations.push_back("circle target must return to its initial state");
    }
    return rep;
}

class InvalidTrace : public std::runtime_error {
public:
    explicit InvalidTrace(const ValidationReport& rep)
        : std::runtime_error("invalid trace:\n" + rep.to_string()), report(rep) {}
    ValidationReport report;
};

inline CountVector count_fibers(const MorseTrace& t) {
    ValidationReport rep = validate_trace(t);
    if (!rep.valid()) throw InvalidTrace(rep);
    CountVector counts;
    for (const auto& e : t.events)
        counts[e.fiber_class.base().with_parity(morse_detail::event_parity(e))] += 1;
    return counts;
}

// Occurrence count of a class: a refined query matches exact entries, an
// unrefined query sums all entries with that base. `resolvable` is
// cleared when a refined query meets unrefined-only data.
inline long count_of(const CountVector& counts, const ClassName& n,
                     bool* resolvable = nullptr) {
    long total = 0;
    for (const auto& [key, cnt] : counts) {
        if (key.base() != n.base()) continue;
        if (n.parity == Parity::Unrefined) {
            total += cnt;
        } else if (key.parity == n.parity) {
            total += cnt;
        } else if (key.parity == Parity::Unrefined && resolvable) {
            *resolvable = false;
        }
    }
    return total;
}

struct CoexistenceResult {
    ParityConstraint constraint;
    long total = 0;
    bool even = false;
};

struct CoexistenceReport {
    std::vector<CoexistenceResult> results;
    bool all_even() const {
        for (const auto& r : results)
            if (!r.even) return false;
        return true;
    }
};

inline CoexistenceReport check_coexistence(const CountVector& counts,
                                           const std::vector<ParityConstraint>& cs) {
    CoexistenceReport rep;
    for (const auto& c : cs) {
        CoexistenceResult res;
        res.constraint = c;
        for (const auto& n : c.classes) {
            bool resolvable = true;
            res.total += count_of(counts, n, &resolvable);
            if (!resolvable)
                throw std::invalid_argument(
                    "count vector cannot resolve refined class " +
                    print_class_name(n));
        }
        res.even = res.total % 2 == 0;
        rep.results.push_back(res);
    }
    return rep;
}

// The two co-existence laws that hold for every stable Morse function on
// a compact surface with boundary, and the one inherited from delta_0.
inline std::vector<ParityConstraint> morse_coexistence_constraints() {
    std::vector<ParityConstraint> cs;
    cs.push_back(parse_constraint("bI^2 + bI^3 + bI^4 + bI^6 + bI^8"));
    cs.push_back(parse_constraint("bI^2 + bI^3 + bI^4 + bI^7"));
    cs.push_back(parse_constraint("bI^6 + bI^7 + bI^8"));
    return cs;
}

// Deterministic per seed: forward simulation over the level-set moves,
// closed up with circle/arc deaths.
inline MorseTrace random_trace(std::uint64_t seed, int length_budget,
                               Target target = Target::Line) {
    MorseTrace t;
    t.target = target;
    std::mt19937_64 rng(seed);
    LevelState state;
    double value = 0.0;

    auto emit = [&](int base, const morse_detail::Move& m) {
        TraceEvent e;
        e.value = (value += 1.0);
        e.fiber_class = ClassName::bI(base);
        e.regular = LevelState{state.circles - m.in.circles, state.arcs - m.in.arcs};
        e.state_after = LevelState{e.regular.circles + m.out.circles,
                                   e.regular.arcs + m.out.arcs};
        state = e.state_after;
        t.events.push_back(e);
    };

    for (int step = 0; step < length_budget; ++step) {
        std::vector<std::pair<int, morse_detail::Move>> applicable;
        for (int k = 2; k <= 10; ++k)
            for (const auto& m : morse_detail::moves_for(k))
                if (state.circles >= m.in.circles && state.arcs >= m.in.arcs)
                    applicable.emplace_back(k, m);
        std::uniform_int_distribution<std::size_t> pick(0, applicable.size() - 1);
        auto [k, m] = applicable[pick(rng)];
        emit(k, m);
    }
    while (state.circles > 0) emit(2, morse_detail::moves_for(2)[1]);
    while (state.arcs > 0) emit(6, morse_detail::moves_for(6)[1]);
    return t;
}

// ---------------------------------------------------------------------------
// file formats

inline MorseTrace parse_trace(const std::string& text) {
    MorseTrace t;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto bad = [&](const std::string& what) {
        throw ParseError("trace line " + std::to_string(lineno) + ": " + what);
    };
    auto kv = [&](const std::string& field, const std::string& key) {
        if (field.rfind(key + "=", 0) != 0) bad("expected " + key + "=...");
        return field.substr(key.size() + 1);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "target:") {
            std::string v;
            ls >> v;
            if (v == "line") t.target = Target::Line;
            else if (v == "circle") t.target = Target::Circle;
            else bad("unknown target '" + v + "'");
        } else if (tok == "initial:") {
            std::string c, a;
            ls >> c >> a;
            t.initial.circles = std::stoi(kv(c, "circles"));
            t.initial.arcs = std::stoi(kv(a, "arcs"));
        } else if (tok == "event") {
            TraceEvent e;
            std::string v, cls, rc, ra, after;
            ls >> v >> cls >> rc >> ra >> after;
            e.value = std::stod(kv(v, "v"));
            e.fiber_class = parse_class_name(kv(cls, "class"));
            e.regular.circles = std::stoi(kv(rc, "reg_circles"));
            e.regular.arcs = std::stoi(kv(ra, "reg_arcs"));
            std::string st = kv(after, "after");
            auto comma = st.find(',');
            if (comma == std::string::npos) bad("after=<c>,<a> expected");
            e.state_after.circles = std::stoi(st.substr(0, comma));
            e.state_after.arcs = std::stoi(st.substr(comma + 1));
            t.events.push_back(e);
        } else {
            bad("unknown directive '" + tok + "'");
        }
    }
    return t;
}

inline std::string print_trace(const MorseTrace& t) {
    std::ostringstream os;
    os << "target: " << (t.target == Target::Line ? "line" : "circle") << "\n";
    os << "initial: circles=" << t.initial.circles << " arcs=" << t.initial.arcs
       << "\n";
    for (const auto& e : t.events) {
        os << "event v=" << e.value << " class=" << print_class_name(e.fiber_class)
           << " reg_circles=" << e.regular.circles << " reg_arcs=" << e.regular.arcs
           << " after=" << e.state_after.circles << "," << e.state_after.arcs
           << "\n";
    }
    return os.str();
}

inline CountVector parse_counts(const std::string& text) {
    CountVector counts;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name, eq;
        long cnt = 0;
        if (!(ls >> name >> eq >> cnt) || eq != "=")
            throw ParseError("counts line " + std::to_string(lineno) +
                             ": expected '<class> = <count>'");
        if (cnt < 0)
            throw ParseError("counts line " + std::to_string(lineno) +
                             ": negative count");
        counts[parse_class_name(name)] += cnt;
    }
    return counts;
}

}  // namespace fibercx

#endif
