#pragma once

#include "multdep/cdisk.hpp"
#include "multdep/coprime_base.hpp"
#include "multdep/dynamics.hpp"
#include "multdep/errors.hpp"
#include "multdep/families.hpp"
#include "multdep/funcrel.hpp"
#include "multdep/lattice.hpp"
#include "multdep/modular.hpp"
#include "multdep/numberfield.hpp"
#include "multdep/parse.hpp"
#include "multdep/polynomial.hpp"
#include "multdep/rational.hpp"
#include "multdep/rational_function.hpp"
#include "multdep/relations.hpp"
#include "multdep/report.hpp"
#include "multdep/roots.hpp"
#include "multdep/sparsity.hpp"
#include "multdep/special.hpp"
