#pragma once

#include "flagbundle/bundles.hpp"
#include "flagbundle/chart.hpp"
#include "flagbundle/errors.hpp"
#include "flagbundle/kt_cyt.hpp"
#include "flagbundle/parabolic.hpp"
#include "flagbundle/product_hermitian.hpp"
#include "flagbundle/rational.hpp"
#include "flagbundle/rootsystem.hpp"
#include "flagbundle/serialize.hpp"
#include "flagbundle/typea_reps.hpp"
