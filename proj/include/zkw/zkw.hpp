#pragma once

#include "zkw/complexes/builder.hpp"
#include "zkw/complexes/json_io.hpp"
#include "zkw/complexes/simplicial_complex.hpp"
#include "zkw/complexes/simplicial_homology.hpp"
#include "zkw/errors.hpp"
#include "zkw/exactalg/chain_complex.hpp"
#include "zkw/exactalg/int_matrix.hpp"
#include "zkw/exactalg/smith.hpp"
#include "zkw/integer.hpp"
#include "zkw/moment_angle/cells.hpp"
#include "zkw/moment_angle/hochster.hpp"
#include "zkw/moment_angle/zk_complex.hpp"
#include "zkw/taylor/face_complex.hpp"
#include "zkw/taylor/monomial_ideal.hpp"
#include "zkw/whitehead/expr.hpp"
#include "zkw/whitehead/products.hpp"
#include "zkw/whitehead/realisation.hpp"
#include "zkw/whitehead/wedge_basis.hpp"
#include "zkw/zigzag/zigzag.hpp"
