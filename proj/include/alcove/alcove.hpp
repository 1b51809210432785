// Umbrella include for the whole library.

#pragma once

#include "alcove/rational.hpp"
#include "alcove/root_system.hpp"
#include "alcove/element.hpp"
#include "alcove/geometry.hpp"
#include "alcove/length.hpp"
#include "alcove/bruhat.hpp"
#include "alcove/kottwitz.hpp"
#include "alcove/good_position.hpp"
#include "alcove/json_io.hpp"
