#pragma once

#include "allocation.hpp"
#include "bounds.hpp"
#include "errors.hpp"
#include "extrema.hpp"
#include "geometry.hpp"
#include "oracle.hpp"
