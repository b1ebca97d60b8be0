#include "tracesynth/alphabet.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace tracesynth {

ActionSet ActionSet::full(int action_count) {
    if (action_count >= 64)
        throw ValidationError("alphabet too large (at most 63 actions supported)");
    return ActionSet((std::uint64_t{1} << action_count) - 1);
}

int ActionSet::count() const { return std::popcount(bits_); }

ActionId ActionSet::least() const { return static_cast<ActionId>(std::countr_zero(bits_)); }

ActionSet ActionSet::with(ActionId a) const { return ActionSet(bits_ | (std::uint64_t{1} << a)); }

ActionSet ActionSet::without(ActionId a) const {
    return ActionSet(bits_ & ~(std::uint64_t{1} << a));
}

std::vector<ActionId> ActionSet::to_vector() const {
    std::vector<ActionId> out;
    for (std::uint64_t m = bits_; m != 0; m &= m - 1)
        out.push_back(static_cast<ActionId>(std::countr_zero(m)));
    return out;
}

IndependenceAlphabet IndependenceAlphabet::validate(
    std::vector<std::string> actions,
    const std::vector<std::pair<std::string, std::string>>& independence) {
    IndependenceAlphabet alphabet;
    if (actions.size() >= 64)
        throw ValidationError("alphabet too large (at most 63 actions supported)");
    std::set<std::string> seen;
    for (const auto& a : actions) {
        if (a.empty())
            throw ValidationError("empty action name");
        if (!seen.insert(a).second)
            throw ValidationError("duplicate action '" + a + "'");
    }
    alphabet.names_ = std::move(actions);
    const int n = alphabet.size();
    alphabet.indep_.assign(n, std::vector<bool>(n, false));
    std::set<std::pair<ActionId, ActionId>> pairs;
    for (const auto& [x, y] : independence) {
        auto a = alphabet.find_action(x);
        auto b = alphabet.find_action(y);
        if (!a)
            throw ValidationError("independence pair mentions unknown action '" + x + "'");
        if (!b)
            throw ValidationError("independence pair mentions unknown action '" + y + "'");
        if (*a == *b)
            throw ValidationError("reflexive independence pair (" + x + "," + y + ")");
        alphabet.indep_[*a][*b] = true;
        alphabet.indep_[*b][*a] = true;
        pairs.insert({std::min(*a, *b), std::max(*a, *b)});
    }
    alphabet.pairs_.assign(pairs.begin(), pairs.end());
    return alphabet;
}

ActionId IndependenceAlphabet::action_id(const std::string& name) const {
    auto id = find_action(name);
    if (!id)
        throw ValidationError("unknown action '" + name + "'");
    return *id;
}

std::optional<ActionId> IndependenceAlphabet::find_action(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name)
            return static_cast<ActionId>(i);
    return std::nullopt;
}

Word IndependenceAlphabet::parse_word(const std::vector<std::string>& letters) const {
    Word w;
    w.reserve(letters.size());
    for (const auto& l : letters)
        w.push_back(action_id(l));
    return w;
}

std::string IndependenceAlphabet::format_word(const Word& w) const {
    bool compact = true;
    for (const auto& n : names_)
        compact = compact && n.size() == 1;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0)
            out += '.';
        out += action_name(w[i]);
    }
    return out;
}

std::string IndependenceAlphabet::format_action_set(ActionSet t) const {
    std::string out = "{";
    bool first = true;
    for (ActionId a : t.to_vector()) {
        if (!first)
            out += ',';
        first = false;
        out += action_name(a);
    }
    out += '}';
    return out;
}

std::vector<ActionSet> connected_components(const IndependenceAlphabet& alphabet, ActionSet t) {
    std::vector<ActionSet> components;
    ActionSet remaining = t;
    while (!remaining.empty()) {
        // Grow the component of the least remaining action to a fixpoint.
        ActionSet comp = ActionSet::single(remaining.least());
        bool grew = true;
        while (grew) {
            grew = false;
            for (ActionId a : comp.to_vector()) {
                for (ActionId b : remaining.set_minus(comp).to_vector()) {
                    if (alphabet.dependent(a, b)) {
                        comp = comp.with(b);
                        grew = true;
                    }
                }
            }
        }
        components.push_back(comp);
        remaining = remaining.set_minus(comp);
    }
    std::sort(components.begin(), components.end(),
              [](ActionSet a, ActionSet b) { return a.least() < b.least(); });
    return components;
}

ActionSet decomposition(const IndependenceAlphabet& alphabet, ActionSet t) {
    if (t.empty())
        throw ValidationError("decomposition of an empty action set");
    for (const ActionSet& comp : connected_components(alphabet, t))
        if (comp.contains(t.least()))
            return comp;
    return ActionSet{}; // unreachable
}

bool is_dependence_connected(const IndependenceAlphabet& alphabet, ActionSet t) {
    return !t.empty() && connected_components(alphabet, t).size() == 1;
}

} // namespace tracesynth
