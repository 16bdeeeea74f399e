#pragma once

#include "ccomp/error.hpp"
#include "ccomp/kernel.hpp"
#include "ccomp/relpos.hpp"
#include "ccomp/subspace.hpp"
#include "ccomp/truncated_examples.hpp"
#include "ccomp/witness.hpp"
