#pragma once

// Umbrella header.
#include "sefib/arith.hpp"
#include "sefib/birat.hpp"
#include "sefib/config.hpp"
#include "sefib/conic.hpp"
#include "sefib/cyclotomic.hpp"
#include "sefib/display.hpp"
#include "sefib/error.hpp"
#include "sefib/family.hpp"
#include "sefib/fiber.hpp"
#include "sefib/fixtures.hpp"
#include "sefib/json_io.hpp"
#include "sefib/linalg.hpp"
#include "sefib/search.hpp"
#include "sefib/trivial_points.hpp"
