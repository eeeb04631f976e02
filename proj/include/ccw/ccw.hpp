#ifndef CCW_CCW_HPP
#define CCW_CCW_HPP

#include "ccw/composition.hpp"
#include "ccw/errors.hpp"
#include "ccw/experiment.hpp"
#include "ccw/generators.hpp"
#include "ccw/graph.hpp"
#include "ccw/graph_io.hpp"
#include "ccw/layout.hpp"
#include "ccw/layout_io.hpp"
#include "ccw/solvers.hpp"
#include "ccw/strips.hpp"

#endif
