#pragma once

#include "eis/errors.hpp"
#include "eis/quadrature.hpp"
#include "eis/roots.hpp"
#include "eis/zeta.hpp"
#include "eis/intertwining.hpp"
#include "eis/eisenstein.hpp"
#include "eis/gl3.hpp"
#include "eis/spectral.hpp"
