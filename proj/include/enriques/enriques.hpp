#pragma once

#include "enriques/existence.hpp"
#include "enriques/fm.hpp"
#include "enriques/format.hpp"
#include "enriques/lattice.hpp"
#include "enriques/mukai.hpp"
#include "enriques/surface.hpp"

namespace enriques {
inline constexpr const char* kVersion = "0.1.0";
}
