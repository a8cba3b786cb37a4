#pragma once
// Umbrella header.

#include "catalog.hpp"
#include "core.hpp"
#include "greedy.hpp"
#include "instances.hpp"
#include "kinds.hpp"
#include "properties.hpp"
#include "search.hpp"
#include "space.hpp"
#include "theorems.hpp"
#include "validate.hpp"
