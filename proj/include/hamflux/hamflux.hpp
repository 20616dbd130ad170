#pragma once

#include "hamflux/rational.hpp"
#include "hamflux/errors.hpp"
#include "hamflux/matrix.hpp"
#include "hamflux/linear.hpp"
#include "hamflux/lie.hpp"
#include "hamflux/algebras.hpp"
#include "hamflux/cochain.hpp"
#include "hamflux/hamiltonian.hpp"
#include "hamflux/momentum.hpp"
#include "hamflux/group_action.hpp"
#include "hamflux/noether.hpp"
#include "hamflux/gallery.hpp"
#include "hamflux/io.hpp"
