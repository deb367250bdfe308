#pragma once

// Umbrella header. The brute-force verifiers in oracle.hpp need Eigen and are
// included separately.

#include "hypang/canonical_polygon.hpp"
#include "hypang/embed.hpp"
#include "hypang/errors.hpp"
#include "hypang/hyperelliptic.hpp"
#include "hypang/hyptrig.hpp"
#include "hypang/json_io.hpp"
#include "hypang/polygon.hpp"
#include "hypang/quad.hpp"
#include "hypang/render.hpp"
#include "hypang/teich.hpp"
