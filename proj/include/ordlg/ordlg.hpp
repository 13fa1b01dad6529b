// ordlg - right orders on groups and validity in lattice-ordered groups
//
// Umbrella header for the library part (no CLI, no JSON).

#pragma once

#include "biorder.hpp"
#include "derivation.hpp"
#include "groups.hpp"
#include "presented.hpp"
#include "rightorder.hpp"
#include "terms.hpp"
#include "words.hpp"
