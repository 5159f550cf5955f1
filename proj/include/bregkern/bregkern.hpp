#pragma once

#include "bregkern/core/atlas.hpp"
#include "bregkern/core/autodiff.hpp"
#include "bregkern/core/coords.hpp"
#include "bregkern/core/error.hpp"
#include "bregkern/core/generator.hpp"
#include "bregkern/core/linalg.hpp"
#include "bregkern/core/manifold.hpp"
#include "bregkern/geometry/ball.hpp"
#include "bregkern/geometry/bisector.hpp"
#include "bregkern/geometry/curve.hpp"
#include "bregkern/geometry/geodesic.hpp"
#include "bregkern/geometry/lambert_w.hpp"
#include "bregkern/geometry/transport.hpp"
#include "bregkern/io/csv.hpp"
#include "bregkern/io/ingest.hpp"
#include "bregkern/io/manifold_spec.hpp"
#include "bregkern/manifolds/categorical.hpp"
#include "bregkern/manifolds/ekl2d.hpp"
#include "bregkern/manifolds/fisher_rao.hpp"
#include "bregkern/manifolds/gaussian.hpp"
#include "bregkern/manifolds/psd.hpp"
#include "bregkern/manifolds/quadratic.hpp"
#include "bregkern/measures/barycenter.hpp"
#include "bregkern/measures/chernoff.hpp"
#include "bregkern/measures/divergence.hpp"
#include "bregkern/viz/scene.hpp"
#include "bregkern/viz/svg.hpp"
