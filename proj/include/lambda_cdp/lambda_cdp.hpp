#pragma once

#include "cdp.hpp"
#include "entropy.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "singular.hpp"
#include "spectral.hpp"
#include "symmetry.hpp"
