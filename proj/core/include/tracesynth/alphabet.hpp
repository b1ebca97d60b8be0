#ifndef TRACESYNTH_ALPHABET_HPP
#define TRACESYNTH_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracesynth/types.hpp"

namespace tracesynth {

/// Subset of the actions of an alphabet, stored as a bit mask.
/// Action ids follow the total order of the alphabet, so iteration over
/// a set always visits actions in ascending order.
class ActionSet {
public:
    ActionSet() = default;

    static ActionSet full(int action_count);
    static ActionSet single(ActionId a) { return ActionSet{}.with(a); }

    bool contains(ActionId a) const { return (bits_ >> a) & 1u; }
    bool empty() const { return bits_ == 0; }
    int count() const;
    ActionId least() const; // requires non-empty

    ActionSet with(ActionId a) const;
    ActionSet without(ActionId a) const;
    ActionSet set_union(ActionSet other) const { return ActionSet(bits_ | other.bits_); }
    ActionSet set_minus(ActionSet other) const { return ActionSet(bits_ & ~other.bits_); }
    ActionSet set_intersect(ActionSet other) const { return ActionSet(bits_ & other.bits_); }
    bool subset_of(ActionSet other) const { return (bits_ & ~other.bits_) == 0; }

    std::vector<ActionId> to_vector() const;

    std::uint64_t mask() const { return bits_; }
    static ActionSet from_mask(std::uint64_t mask) { return ActionSet(mask); }

    bool operator==(const ActionSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const ActionSet& o) const { return bits_ != o.bits_; }
    bool operator<(const ActionSet& o) const { return bits_ < o.bits_; }

private:
    explicit ActionSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// Finite ordered alphabet together with an irreflexive symmetric
/// independence relation. The total order over actions is the order in
/// which they were given; dependence is the complement of independence
/// and includes the diagonal.
class IndependenceAlphabet {
public:
    /// Validates and builds an alphabet. Throws ValidationError on a
    /// duplicate action, a reflexive pair, or a pair naming an unknown
    /// action.
    static IndependenceAlphabet validate(
        std::vector<std::string> actions,
        const std::vector<std::pair<std::string, std::string>>& independence);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& action_name(ActionId a) const { return names_[a]; }
    ActionId action_id(const std::string& name) const; // throws on unknown
    std::optional<ActionId> find_action(const std::string& name) const;

    bool independent(ActionId a, ActionId b) const { return indep_[a][b]; }
    bool dependent(ActionId a, ActionId b) const { return !indep_[a][b]; }

    ActionSet all_actions() const { return ActionSet::full(size()); }

    /// Normalized independence pairs (a < b), sorted.
    const std::vector<std::pair<ActionId, ActionId>>& independence_pairs() const {
        return pairs_;
    }

    Word parse_word(const std::vector<std::string>& letters) const;
    std::string format_word(const Word& w) const;
    std::string format_action_set(ActionSet t) const; // "{a,b}"

private:
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> indep_;
    std::vector<std::pair<ActionId, ActionId>> pairs_;
};

/// Connected components of the dependence graph restricted to T,
/// sorted by their least action.
std::vector<ActionSet> connected_components(const IndependenceAlphabet& alphabet, ActionSet t);

/// The component of (T, D) containing the least action of T.
/// Throws ValidationError when T is empty.
ActionSet decomposition(const IndependenceAlphabet& alphabet, ActionSet t);

/// True iff (T, D) is connected and non-empty.
bool is_dependence_connected(const IndependenceAlphabet& alphabet, ActionSet t);

} // namespace tracesynth

#endif
