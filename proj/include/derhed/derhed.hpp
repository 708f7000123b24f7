#pragma once

#include "derhed/error.hpp"
#include "derhed/generators.hpp"
#include "derhed/hereditary.hpp"
#include "derhed/homotopy.hpp"
#include "derhed/json_io.hpp"
#include "derhed/linalg.hpp"
#include "derhed/paths.hpp"
#include "derhed/quiver.hpp"
#include "derhed/shift_graph.hpp"
#include "derhed/version.hpp"
