#pragma once

#include <string_view>

#include "coinduel/evolving.hpp"
#include "coinduel/exact.hpp"
#include "coinduel/fitting.hpp"
#include "coinduel/markov.hpp"
#include "coinduel/montecarlo.hpp"
#include "coinduel/multicoin.hpp"
#include "coinduel/rational.hpp"
#include "coinduel/rng.hpp"

namespace coinduel {

inline constexpr std::string_view kEngineVersion = "coinduel 0.1.0";

}  // namespace coinduel
