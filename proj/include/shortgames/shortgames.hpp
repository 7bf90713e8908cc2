// Convenience include for the whole library.

#pragma once

#include "shortgames/errors.hpp"
#include "shortgames/laws.hpp"
#include "shortgames/notation.hpp"
#include "shortgames/rng.hpp"
#include "shortgames/store.hpp"
#include "shortgames/universe.hpp"
