#pragma once

#include "faircert/domain.hpp"
#include "faircert/engine.hpp"
#include "faircert/errors.hpp"
#include "faircert/forward_analysis.hpp"
#include "faircert/network.hpp"
#include "faircert/oracle.hpp"
#include "faircert/quantifier.hpp"
#include "faircert/refinement.hpp"
#include "faircert/report_io.hpp"
#include "faircert/symbolic_interval.hpp"
