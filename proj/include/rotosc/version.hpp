#pragma once

#define ROTOSC_VERSION "0.1.0"

namespace rotosc {
inline const char* version() { return ROTOSC_VERSION; }
}
