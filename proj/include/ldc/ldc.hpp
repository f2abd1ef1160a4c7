#pragma once

#include "ldc/complexity.hpp"
#include "ldc/digit_stream.hpp"
#include "ldc/error.hpp"
#include "ldc/good_pairs.hpp"
#include "ldc/graph.hpp"
#include "ldc/number.hpp"
#include "ldc/serialize.hpp"
#include "ldc/torus.hpp"
