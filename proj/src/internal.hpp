#pragma once

#include <array>
#include <optional>

#include "nilclean/ring.hpp"

namespace nilclean::detail {

void check_axiom_triple(const FiniteRing& r, Index x, Index y, Index z,
                        std::array<std::optional<AxiomViolation>, kAxiomCount>& first);

}  // namespace nilclean::detail
