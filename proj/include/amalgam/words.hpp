#pragma once

// Reduced cyclic words over a signed generator alphabet.  Letters are
// nonzero int8: +1/-1 = a/A, +2/-2 = b/B, +3/-3 = c/C, +4/-4 = d/D, where
// uppercase denotes the inverse and c, d are the mirror-copy generators.

#include <cstdint>
#include <string>
#include <vector>

namespace amalgam {

using Letter = std::int8_t;
using Word = std::vector<Letter>;

// Total order used for canonical forms: a < A < b < B < c < C < d < D.
int letter_rank(Letter l);

// Lexicographic comparison in letter-rank order (shorter word wins ties).
bool word_rank_less(const Word& x, const Word& y);

Word inverse_word(const Word& w);

// Removes adjacent inverse pairs (not across the seam).
Word free_reduce(const Word& w);

// Removes inverse pairs across the cyclic seam as well.
Word cyclic_reduce(const Word& w);

// Lexicographic minimum over all rotations of w and of its inverse;
// identifies a word with its inverse (unoriented classes).
Word canonical_cyclic(const Word& w);

// True iff w is not a proper power of a shorter cyclic word.
bool is_primitive(const Word& w);

// Exponent-sum vector in the abelianization; size = number of generators
// present (2 for the free factors, 4 for the doubled alphabet).
std::vector<long> homology_class(const Word& w, int num_gens = 2);

// Number of maximal blocks of same-factor letters read cyclically, i.e.
// crossings with the separating curve for a cyclically reduced
// alternating form.  Words inside one factor give 0.
int syllable_count(const Word& w);

std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s);

// Symplectic pairing p1*q2 - q1*p2 of two homology classes on the torus.
long algebraic_intersection(const std::pair<long, long>& h1,
                            const std::pair<long, long>& h2);

// Dehn-twist word families on the one-holed torus, in the convention
// where twisting b about a appends positive powers of a and twisting a
// about b appends negative powers of b; these two choices together give
// |<[a_k'], [b_k]>| = k*k' + 1.
//   twist_word(b, a, k)  = b a^k   (homology (k, 1))
//   twist_word(a, b, k') = a b^-k' (homology (1, -k'))
Word twist_word(Letter target, Letter twister, long k);

} // namespace amalgam
