#pragma once

#include "frenetbv/bvscalar.hpp"
#include "frenetbv/skewpath.hpp"
