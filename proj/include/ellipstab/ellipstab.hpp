#pragma once

#include "ellipstab/rational.hpp"
#include "ellipstab/polynomial.hpp"
#include "ellipstab/matrix.hpp"
#include "ellipstab/rootsys.hpp"
#include "ellipstab/cubic_bundles.hpp"
#include "ellipstab/bundle_expr.hpp"
#include "ellipstab/table1.hpp"
#include "ellipstab/cycle_cover.hpp"
#include "ellipstab/adjoint_quotient.hpp"
#include "ellipstab/moduli_meta.hpp"
#include "ellipstab/report.hpp"
