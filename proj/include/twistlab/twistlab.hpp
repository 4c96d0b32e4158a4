// Umbrella header.
#pragma once

#include <twistlab/block_vector.hpp>
#include <twistlab/block_vector_io.hpp>
#include <twistlab/cauchy.hpp>
#include <twistlab/config.hpp>
#include <twistlab/common.hpp>
#include <twistlab/conformal.hpp>
#include <twistlab/couple.hpp>
#include <twistlab/estimate.hpp>
#include <twistlab/g_recursion.hpp>
#include <twistlab/harness.hpp>
#include <twistlab/jet.hpp>
#include <twistlab/norms.hpp>
#include <twistlab/omega.hpp>
#include <twistlab/orlicz.hpp>
#include <twistlab/report.hpp>
