#pragma once

#include "sgb/bounds.hpp"
#include "sgb/comparison.hpp"
#include "sgb/curvature.hpp"
#include "sgb/eigensolver.hpp"
#include "sgb/error.hpp"
#include "sgb/families.hpp"
#include "sgb/laplacian.hpp"
#include "sgb/mesh.hpp"
#include "sgb/mesh_io.hpp"
#include "sgb/optimize.hpp"
#include "sgb/params.hpp"
#include "sgb/pipeline.hpp"
#include "sgb/report.hpp"
#include "sgb/rolling_radius.hpp"
#include "sgb/settings.hpp"
