#include "tracesynth/trace.hpp"

#include <algorithm>

namespace tracesynth {

namespace {

void check_letters(const IndependenceAlphabet& alphabet, const Word& u) {
    for (ActionId a : u)
        if (a < 0 || a >= alphabet.size())
            throw ValidationError("word contains an action outside the alphabet");
}

} // namespace

Word normal_form(const IndependenceAlphabet& alphabet, const Word& u) {
    check_letters(alphabet, u);
    // Greedy extraction: a letter may start an equivalent word iff its first
    // occurrence commutes with everything before it. Taking the least such
    // letter at every step yields the lexicographically least representative.
    Word rest = u;
    Word out;
    out.reserve(u.size());
    while (!rest.empty()) {
        int best_pos = -1;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            bool movable = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (!alphabet.independent(rest[i], rest[j])) {
                    movable = false;
                    break;
                }
            }
            if (movable && (best_pos < 0 || rest[i] < rest[best_pos]))
                best_pos = static_cast<int>(i);
        }
        out.push_back(rest[best_pos]);
        rest.erase(rest.begin() + best_pos);
    }
    return out;
}

bool equivalent(const IndependenceAlphabet& alphabet, const Word& u, const Word& v) {
    if (u.size() != v.size())
        return false;
    return normal_form(alphabet, u) == normal_form(alphabet, v);
}

std::set<Word> trace_class(const IndependenceAlphabet& alphabet, const Word& u) {
    const Word nf = normal_form(alphabet, u);
    std::set<Word> out;
    Word perm = nf;
    std::sort(perm.begin(), perm.end());
    do {
        if (normal_form(alphabet, perm) == nf)
            out.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::set<Word> trace_closure_bounded(const IndependenceAlphabet& alphabet,
                                     const std::set<Word>& language) {
    std::set<Word> out;
    std::set<Word> normal_forms_done;
    for (const Word& u : language) {
        Word nf = normal_form(alphabet, u);
        if (!normal_forms_done.insert(nf).second)
            continue;
        auto cls = trace_class(alphabet, nf);
        out.insert(cls.begin(), cls.end());
    }
    return out;
}

} // namespace tracesynth
