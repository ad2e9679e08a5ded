#pragma once

#include <optional>

#include "greedy/decide.hpp"
#include "greedy/drawing.hpp"
#include "greedy/tree.hpp"

namespace greedy {

struct EmbedOptions {
    double shrink = 1e-2;   // child blob scale relative to the parent feature
    int max_retries = 6;    // shrink is quartered on verification failure
    int max_depth = 12;     // recursion cap to keep coordinates in range
    unsigned seed = 0;      // reserved; the construction is deterministic
};

// Constructs an explicit greedy drawing realizing a Yes decision: wheel
// polygon at the hub, case-recipe constructions down the subtrees. The
// result always passes verify_drawing (that is enforced; on failure the
// construction retries with shrink/4 and finally returns nothing).
std::optional<Drawing> embed(const Tree& t, const Decision& decision,
                             const EmbedOptions& opt = {});

// Standalone drawing of a rooted subtree with opening angle at least
// `target_degrees` toward the root direction (root drawn above the anchor).
// Used by tests that check the achievable cones of caterpillars.
std::optional<Drawing> embed_rooted(const RootedSubtree& sub, double target_degrees,
                                    const EmbedOptions& opt = {});

}  // namespace greedy
