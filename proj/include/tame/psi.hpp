#pragma once

// The rewriting map from sigma words to amalgam words.

#include "tame/amalgam.hpp"
#include "tame/sigma_word.hpp"

namespace tame {

/// The H3 letter of the (k l) coordinate swap.
AmalgamLetter swap_letter(int k, int l);
/// sigma_{i,alpha,f} for i in {2,3} as an H1T letter with an elementary certificate.
AmalgamLetter elementary_h1t_letter(int i, const Scalar& alpha, const Polynomial& f);

/// f with X3 replaced by X1.
Polynomial x3_to_x1(const Polynomial& f);

/// i in {2,3}: one H1T letter. i = 1, deg f <= 1: one H3 letter.
/// i = 1 otherwise: [t13, s_{3,alpha,f(X2,X1)}, t13]. Inverse letters map to
/// the inverted, reversed image.
AmalgamWord psi_letter(const SigmaLetter& letter);
/// Same as psi_letter but always uses the three-letter form for i = 1.
AmalgamWord psi_letter_conjugated(const SigmaLetter& letter);

/// Reduced concatenation of the letter images.
AmalgamWord psi(const SigmaWord& w);

bool verify_relation_respect(const RelationInstance& r);

}  // namespace tame
