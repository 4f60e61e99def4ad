#pragma once

#include "anncat/abelian_group.hpp"
#include "anncat/bimodule.hpp"
#include "anncat/classify.hpp"
#include "anncat/coboundary.hpp"
#include "anncat/cochain.hpp"
#include "anncat/cohomology.hpp"
#include "anncat/discrepancy.hpp"
#include "anncat/integer.hpp"
#include "anncat/io.hpp"
#include "anncat/lattice.hpp"
#include "anncat/matrix.hpp"
#include "anncat/presentation.hpp"
#include "anncat/relations.hpp"
#include "anncat/ring.hpp"
#include "anncat/skeleton.hpp"
#include "anncat/smith.hpp"
#include "anncat/terms.hpp"
#include "anncat/validation.hpp"
