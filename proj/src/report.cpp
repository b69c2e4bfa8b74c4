#include "ualg/report.hpp"

// header-only; translation unit kept so the build file stays uniform
