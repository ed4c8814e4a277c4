#pragma once

#include "nak/error.hpp"
#include "nak/scalar.hpp"
#include "nak/linalg.hpp"
#include "nak/freealg.hpp"
#include "nak/presentations.hpp"
#include "nak/groebner.hpp"
#include "nak/nakayama.hpp"
#include "nak/io.hpp"
#include "nak/fixtures.hpp"
#include "nak/suites.hpp"
