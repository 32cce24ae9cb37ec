#pragma once

#include "bggkit/rational.hpp"
#include "bggkit/linalg.hpp"
#include "bggkit/guardrails.hpp"
#include "bggkit/root_system.hpp"
#include "bggkit/parabolic.hpp"
#include "bggkit/characters.hpp"
#include "bggkit/kostant.hpp"
#include "bggkit/casimir.hpp"
#include "bggkit/realization.hpp"
#include "bggkit/chain_complex.hpp"
#include "bggkit/filtration.hpp"
#include "bggkit/report.hpp"
