#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tropid/identity.hpp"
#include "tropid/poset.hpp"
#include "tropid/polynomial.hpp"

namespace tropid {

/// Variable identifier "x(a)" used by the letter-indexed family.
std::string letter_variable(Letter s);
/// Variable identifier "x(a,v)" used by the path-indexed family.
std::string vertex_variable(Letter s, const std::string& vertex);

/// Variables x(s) for every letter of the alphabet.
std::shared_ptr<const VariableSet> letter_variables(const Alphabet& alphabet);
/// Variables x(s,v) for every letter and every vertex label of the path.
std::shared_ptr<const VariableSet> path_variables(const Alphabet& alphabet, const std::vector<std::string>& path);

/// 0-flat polynomial with one term per occurrence of t in w; the term for an
/// occurrence at position i carries x(s)^(occurrences of s before i).
/// The -inf polynomial iff t does not occur in w.
TropPoly build_f_t_w(const Word& w, Letter t, const Alphabet& alphabet);

/// 0-flat polynomial with one term per scattered occurrence
/// 0 = a_0 < a_1 < ... < a_|u| < a_{|u|+1} = |w|+1 of u in w: x(s, path[k])
/// carries the number of s strictly between a_k and a_{k+1}.
/// Throws InvalidArgument when path.size() != |u| + 1.
TropPoly build_f_u_rho(const Word& w, const Word& u, const std::vector<std::string>& path, const Alphabet& alphabet);

/// Same, with the path given as element indices of a poset.
TropPoly build_f_u_rho(const Word& w, const Word& u, const Poset& poset, const Path& path, const Alphabet& alphabet);

/// Labels "1" .. "k" of the canonical chain used for the length-(k-1) words.
std::vector<std::string> canonical_chain(std::size_t k);

/// All words of length `length` over the alphabet, in lexicographic order.
std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t length);

} // namespace tropid
