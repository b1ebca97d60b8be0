#ifndef TRACESYNTH_AUTOMATON_HPP
#define TRACESYNTH_AUTOMATON_HPP

#include <set>
#include <string>
#include <vector>

#include "tracesynth/alphabet.hpp"
#include "tracesynth/types.hpp"

namespace tracesynth {

struct Transition {
    StateId from;
    ActionId action;
    StateId to;

    bool operator==(const Transition& o) const {
        return from == o.from && action == o.action && to == o.to;
    }
    bool operator<(const Transition& o) const {
        if (from != o.from)
            return from < o.from;
        if (action != o.action)
            return action < o.action;
        return to < o.to;
    }
};

/// Finite, possibly non-deterministic automaton over a subset of the
/// alphabet. States carry opaque string names at the API boundary and dense
/// ids internally; the id order is the insertion order, which makes every
/// derived artifact deterministic.
class Automaton {
public:
    explicit Automaton(ActionSet actions) : actions_(actions) {}

    StateId add_state(std::string name, bool is_final);
    void set_initial(StateId q);
    void set_final(StateId q, bool is_final) { final_[q] = is_final; }

    /// Adds (q, a, q') unless already present; transitions form a set.
    void add_transition(StateId from, ActionId action, StateId to);

    int state_count() const { return static_cast<int>(names_.size()); }
    StateId initial() const { return initial_; }
    ActionSet actions() const { return actions_; }
    const std::string& state_name(StateId q) const { return names_[q]; }
    StateId state_id(const std::string& name) const; // throws on unknown
    bool is_final(StateId q) const { return final_[q]; }
    std::vector<StateId> final_states() const;

    const std::vector<Transition>& transitions() const { return transitions_; }
    const std::vector<std::pair<ActionId, StateId>>& successors(StateId q) const {
        return out_[q];
    }
    bool has_transition(StateId from, ActionId action, StateId to) const;

private:
    std::vector<std::string> names_;
    StateId initial_ = 0;
    ActionSet actions_;
    std::vector<Transition> transitions_;
    std::vector<bool> final_;
    std::vector<std::vector<std::pair<ActionId, StateId>>> out_;
};

/// State map that preserves the initial state, finals, and transitions;
/// such a map witnesses language inclusion.
struct MorphismMap {
    std::vector<StateId> map; // indexed by states of the source automaton
};

/// A_{T,q}: same states, initial moved to q, transitions restricted to T.
Automaton restrict_to(const Automaton& a, ActionSet t, StateId q);

struct IdViolation {
    StateId q1;
    ActionId a;
    StateId q2;
    ActionId b;
    StateId q3;
};

/// All witnesses against the independent-diamond property: pairs of adjacent
/// transitions with independent labels that cannot be commuted. Empty result
/// means the automaton is an asynchronous system over the alphabet.
std::vector<IdViolation> check_id(const Automaton& a, const IndependenceAlphabet& alphabet);

bool accepts(const Automaton& a, const Word& u);

/// All accepted words of length at most maxlen, by breadth-first word
/// enumeration with subset simulation.
std::set<Word> enumerate_language(const Automaton& a, int maxlen);

/// Words of length at most maxlen over the actions below base_action_count,
/// accepted when actions with id >= base_action_count are treated as
/// erased (epsilon) moves.
std::set<Word> enumerate_projected_language(const Automaton& a, int base_action_count,
                                            int maxlen);

/// States reachable from `from` using only transitions labeled outside
/// `forbidden`; always contains `from`.
std::set<StateId> reach_avoiding(const Automaton& a, StateId from, ActionSet forbidden);

bool check_morphism(const MorphismMap& sigma, const Automaton& a1, const Automaton& a2);

} // namespace tracesynth

#endif
