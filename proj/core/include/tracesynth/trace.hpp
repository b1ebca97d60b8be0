#ifndef TRACESYNTH_TRACE_HPP
#define TRACESYNTH_TRACE_HPP

#include <set>

#include "tracesynth/alphabet.hpp"
#include "tracesynth/types.hpp"

namespace tracesynth {

/// Lexicographically least word (w.r.t. the alphabet order) equivalent to u
/// under commutation of adjacent independent actions. Idempotent; two words
/// are equivalent iff their normal forms coincide.
Word normal_form(const IndependenceAlphabet& alphabet, const Word& u);

bool equivalent(const IndependenceAlphabet& alphabet, const Word& u, const Word& v);

/// All words equivalent to u. Enumerates the permutations of the letter
/// multiset of u and keeps those with the same normal form, so it does not
/// share a code path with swap-based closure oracles.
std::set<Word> trace_class(const IndependenceAlphabet& alphabet, const Word& u);

/// Union of the trace classes of all words of L.
std::set<Word> trace_closure_bounded(const IndependenceAlphabet& alphabet,
                                     const std::set<Word>& language);

} // namespace tracesynth

#endif
