#include "tracesynth/automaton.hpp"

#include <algorithm>
#include <deque>

namespace tracesynth {

StateId Automaton::add_state(std::string name, bool is_final) {
    names_.push_back(std::move(name));
    final_.push_back(is_final);
    out_.emplace_back();
    return static_cast<StateId>(names_.size() - 1);
}

void Automaton::set_initial(StateId q) {
    if (q < 0 || q >= state_count())
        throw ValidationError("initial state out of range");
    initial_ = q;
}

void Automaton::add_transition(StateId from, ActionId action, StateId to) {
    if (from < 0 || from >= state_count() || to < 0 || to >= state_count())
        throw ValidationError("transition endpoint out of range");
    if (!actions_.contains(action))
        throw ValidationError("transition label outside the automaton's actions");
    if (has_transition(from, action, to))
        return;
    transitions_.push_back({from, action, to});
    out_[from].push_back({action, to});
}

StateId Automaton::state_id(const std::string& name) const {
    for (int i = 0; i < state_count(); ++i)
        if (names_[i] == name)
            return static_cast<StateId>(i);
    throw ValidationError("unknown state '" + name + "'");
}

std::vector<StateId> Automaton::final_states() const {
    std::vector<StateId> out;
    for (int i = 0; i < state_count(); ++i)
        if (final_[i])
            out.push_back(i);
    return out;
}

bool Automaton::has_transition(StateId from, ActionId action, StateId to) const {
    for (const auto& [a, q] : out_[from])
        if (a == action && q == to)
            return true;
    return false;
}

Automaton restrict_to(const Automaton& a, ActionSet t, StateId q) {
    if (q < 0 || q >= a.state_count())
        throw ValidationError("restriction anchor is not a state");
    Automaton out(t);
    for (int i = 0; i < a.state_count(); ++i)
        out.add_state(a.state_name(i), a.is_final(i));
    out.set_initial(q);
    for (const Transition& tr : a.transitions())
        if (t.contains(tr.action))
            out.add_transition(tr.from, tr.action, tr.to);
    return out;
}

std::vector<IdViolation> check_id(const Automaton& a, const IndependenceAlphabet& alphabet) {
    std::vector<IdViolation> violations;
    for (int q1 = 0; q1 < a.state_count(); ++q1) {
        for (const auto& [x, q2] : a.successors(q1)) {
            for (const auto& [y, q3] : a.successors(q2)) {
                if (!alphabet.independent(x, y))
                    continue;
                bool completed = false;
                for (const auto& [b, q4] : a.successors(q1)) {
                    if (b == y && a.has_transition(q4, x, q3)) {
                        completed = true;
                        break;
                    }
                }
                if (!completed)
                    violations.push_back({q1, x, q2, y, q3});
            }
        }
    }
    return violations;
}

namespace {

std::set<StateId> step(const Automaton& a, const std::set<StateId>& from, ActionId action) {
    std::set<StateId> out;
    for (StateId q : from)
        for (const auto& [b, r] : a.successors(q))
            if (b == action)
                out.insert(r);
    return out;
}

bool any_final(const Automaton& a, const std::set<StateId>& states) {
    for (StateId q : states)
        if (a.is_final(q))
            return true;
    return false;
}

} // namespace

bool accepts(const Automaton& a, const Word& u) {
    std::set<StateId> current{a.initial()};
    for (ActionId x : u) {
        if (!a.actions().contains(x))
            throw ValidationError("word contains an action outside the automaton's actions");
        current = step(a, current, x);
        if (current.empty())
            return false;
    }
    return any_final(a, current);
}

std::set<Word> enumerate_language(const Automaton& a, int maxlen) {
    std::set<Word> out;
    std::deque<std::pair<Word, std::set<StateId>>> queue;
    queue.push_back({{}, {a.initial()}});
    while (!queue.empty()) {
        auto [word, states] = std::move(queue.front());
        queue.pop_front();
        if (any_final(a, states))
            out.insert(word);
        if (static_cast<int>(word.size()) == maxlen)
            continue;
        for (ActionId x : a.actions().to_vector()) {
            auto next = step(a, states, x);
            if (next.empty())
                continue;
            Word w = word;
            w.push_back(x);
            queue.push_back({std::move(w), std::move(next)});
        }
    }
    return out;
}

namespace {

// Closure under transitions labeled >= base_action_count.
std::set<StateId> internal_closure(const Automaton& a, std::set<StateId> states,
                                   int base_action_count) {
    std::vector<StateId> work(states.begin(), states.end());
    while (!work.empty()) {
        StateId q = work.back();
        work.pop_back();
        for (const auto& [x, r] : a.successors(q)) {
            if (x >= base_action_count && states.insert(r).second)
                work.push_back(r);
        }
    }
    return states;
}

} // namespace

std::set<Word> enumerate_projected_language(const Automaton& a, int base_action_count,
                                            int maxlen) {
    std::set<Word> out;
    std::deque<std::pair<Word, std::set<StateId>>> queue;
    queue.push_back({{}, internal_closure(a, {a.initial()}, base_action_count)});
    while (!queue.empty()) {
        auto [word, states] = std::move(queue.front());
        queue.pop_front();
        if (any_final(a, states))
            out.insert(word);
        if (static_cast<int>(word.size()) == maxlen)
            continue;
        for (ActionId x : a.actions().to_vector()) {
            if (x >= base_action_count)
                continue;
            auto next = step(a, states, x);
            if (next.empty())
                continue;
            next = internal_closure(a, std::move(next), base_action_count);
            Word w = word;
            w.push_back(x);
            queue.push_back({std::move(w), std::move(next)});
        }
    }
    return out;
}

std::set<StateId> reach_avoiding(const Automaton& a, StateId from, ActionSet forbidden) {
    std::set<StateId> seen{from};
    std::vector<StateId> work{from};
    while (!work.empty()) {
        StateId q = work.back();
        work.pop_back();
        for (const auto& [x, r] : a.successors(q)) {
            if (!forbidden.contains(x) && seen.insert(r).second)
                work.push_back(r);
        }
    }
    return seen;
}

bool check_morphism(const MorphismMap& sigma, const Automaton& a1, const Automaton& a2) {
    if (static_cast<int>(sigma.map.size()) != a1.state_count())
        return false;
    for (StateId image : sigma.map)
        if (image < 0 || image >= a2.state_count())
            return false;
    if (sigma.map[a1.initial()] != a2.initial())
        return false;
    for (int q = 0; q < a1.state_count(); ++q)
        if (a1.is_final(q) && !a2.is_final(sigma.map[q]))
            return false;
    for (const Transition& t : a1.transitions())
        if (!a2.has_transition(sigma.map[t.from], t.action, sigma.map[t.to]))
            return false;
    return true;
}

} // namespace tracesynth
