#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contmach/machines.hpp"

// Finite checks of the defining properties of continuous and monotone
// machines. Each finder searches the given oracles, efforts and questions and
// returns the first counterexample, or std::nullopt if there is none. On a
// finite name space passing every oracle makes the check exhaustive.

namespace contmach {

struct Violation {
    std::string property;
    std::size_t phi_index;
    /// Second oracle for two-point properties; equals phi_index otherwise.
    std::size_t psi_index;
    Effort effort;
    /// Larger effort for monotonicity properties; equals effort otherwise.
    Effort later_effort;
};

/// Agreement on mu(phi)(n, q') must force equal machine outputs
/// ("modulus") and equal modulus lists ("self-modulation").
template <typename Q, typename A, typename Q2, typename A2>
std::optional<Violation> find_continuity_violation(const ContinuousMachine<Q, A, Q2, A2>& cm,
                                                   const std::vector<NameOracle<Q, A>>& oracles,
                                                   const std::vector<Effort>& efforts,
                                                   const std::vector<Q2>& questions) {
    for (std::size_t i = 0; i < oracles.size(); ++i) {
        for (Effort n : efforts) {
            for (const Q2& q : questions) {
                const auto list = cm.modulus(oracles[i], n, q);
                const auto out = cm.machine(oracles[i], n, q);
                for (std::size_t j = 0; j < oracles.size(); ++j) {
                    if (j == i || !restriction_eq(oracles[i], oracles[j], list)) {
                        continue;
                    }
                    if (!(cm.machine(oracles[j], n, q) == out)) {
                        return Violation{"modulus", i, j, n, n};
                    }
                    if (!(cm.modulus(oracles[j], n, q) == list)) {
                        return Violation{"self-modulation", i, j, n, n};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

/// Once M answers at effort n it must give the same answer at every m in
/// (n, max_effort] ("monotone") with an unchanged modulus list
/// ("terminates-with").
template <typename Q, typename A, typename Q2, typename A2>
std::optional<Violation> find_monotonicity_violation(const ContinuousMachine<Q, A, Q2, A2>& cm,
                                                     const std::vector<NameOracle<Q, A>>& oracles, Effort max_effort,
                                                     const std::vector<Q2>& questions) {
    for (std::size_t i = 0; i < oracles.size(); ++i) {
        for (const Q2& q : questions) {
            for (Effort n = 0; n <= max_effort; ++n) {
                const auto out = cm.machine(oracles[i], n, q);
                if (!out) {
                    continue;
                }
                const auto list = cm.modulus(oracles[i], n, q);
                for (Effort m = n + 1; m <= max_effort; ++m) {
                    if (!(cm.machine(oracles[i], m, q) == out)) {
                        return Violation{"monotone", i, i, n, m};
                    }
                    if (!(cm.modulus(oracles[i], m, q) == list)) {
                        return Violation{"terminates-with", i, i, n, m};
                    }
                }
                break;
            }
        }
    }
    return std::nullopt;
}

} // namespace contmach
