#pragma once

// Step-by-step rewriting chains showing that each defining relation maps to
// an identity between amalgam words, and a replayer that checks every step.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tame/amalgam.hpp"
#include "tame/psi.hpp"
#include "tame/random.hpp"
#include "tame/sigma_word.hpp"

namespace tame {

enum class Justification {
    InFactor,       // identity inside one factor
    PermRel,        // identity among coordinate transpositions
    Special12,      // t13 s_{2,b,g(X1,X3)} t13 = s_{2,b,g(X3,X1)}
    TauInvolution,  // t t = 1
    R1InFactor,     // s_{i,a,f} s_{i,b,g} = s_{i,ab,f+ag}, i in {2,3}
    R2InFactor,     // s_i^-1 s_j s_i = s_{j,b,g(sigma_i)}, {i,j} = {2,3}
    Assign15,       // span is the three-letter image of a slot-1 letter
};

const char* to_string(Justification j);

struct ProofStep {
    AmalgamWord before;
    AmalgamWord after;
    Justification justification;
    std::optional<FactorId> factor;
    std::size_t span_begin = 0;
    std::size_t span_before = 0;  // letters replaced
    std::size_t span_after = 0;   // letters inserted
    std::optional<SigmaLetter> cited;
};

struct ProofChain {
    std::string label;
    RelationInstance relation;
    std::vector<ProofStep> steps;
};

struct ChainTemplate {
    std::string label;
    RelationKind kind;
    std::function<RelationParams(Rng&, int max_degree, long coeff_bound)> sample;
    std::function<ProofChain(const RelationParams&)> build;
};

/// The eleven multi-line chains.
std::vector<ChainTemplate> builtin_proof_chains();
/// Cases settled by a single identity inside H1T or H2.
std::vector<ChainTemplate> in_factor_chains();

struct ReplayResult {
    bool verified = false;
    /// Index of the first failing step; -1 when the chain ends do not match.
    int failed_step = -1;
    std::string reason;
};

ReplayResult replay(const ProofChain& chain);

/// Negative control: gives the first factor-tagged step that can be broken a
/// factor missing one of its letters.
std::optional<ProofChain> corrupt_factor_tag(ProofChain chain);

}  // namespace tame
